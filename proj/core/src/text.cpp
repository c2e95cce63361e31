#include "ncdouble/text.hpp"

#include <cctype>
#include <optional>
#include <variant>
#include <vector>

namespace ncd {

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Shared cursor: whitespace skipping, numbers, longest-match names.
class Cursor {
 public:
  Cursor(std::string_view text, std::vector<std::string> names) : text_(text), names_(std::move(names)) {}

  std::size_t pos() const { return pos_; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, std::size_t report_at) {
    if (!accept(c)) throw SyntaxError(report_at, std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(start, "expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_uint() {
    std::size_t at = (skip_ws(), pos_);
    std::string d = digits();
    if (d.size() > 4) throw SyntaxError(at, "exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  /// Longest declared name at the cursor, consumed.
  std::optional<std::string> name() {
    skip_ws();
    const std::string* best = nullptr;
    for (const auto& n : names_)
      if (text_.substr(pos_, n.size()) == n && (!best || n.size() > best->size())) best = &n;
    if (!best) return std::nullopt;
    pos_ += best->size();
    return *best;
  }

  /// Raw run of name characters (for error messages and stems), not consumed.
  std::string raw_word() {
    skip_ws();
    std::size_t e = pos_;
    while (e < text_.size() && is_name_char(text_[e])) ++e;
    return std::string(text_.substr(pos_, e - pos_));
  }
  void advance(std::size_t n) { pos_ += n; }
  void seek(std::size_t pos) { pos_ = pos; }

  bool starts_atom() {
    char c = peek();
    return c == '(' || is_name_char(c) || static_cast<unsigned char>(c) >= 0x80;
  }

 private:
  std::string_view text_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

std::vector<std::string> scalar_names() {
  std::vector<std::string> names{"i", "ħ"};
  for (std::size_t k = 0; k < Param::count(); ++k) names.push_back(Param(static_cast<std::uint8_t>(k)).name());
  return names;
}

Scalar integer(const std::string& digits) { return Scalar(GaussianRational(mpq_class(digits))); }

// Recursive descent over any value type with ring operations. `Ops` supplies
// the atoms and the conversions the grammar needs.
template <typename Ops>
class Parser {
 public:
  using Value = typename Ops::Value;

  Parser(Cursor& cur, Ops& ops) : cur_(cur), ops_(ops) {}

  Value parse_all() {
    if (cur_.at_end()) throw SyntaxError(cur_.pos(), "empty expression");
    Value v = expr();
    if (!cur_.at_end()) throw SyntaxError(cur_.pos(), std::string("unexpected '") + cur_.peek() + "'");
    return v;
  }

 private:
  Value expr() {
    bool negate = false;
    if (cur_.accept('-')) negate = true;
    else cur_.accept('+');
    Value v = term();
    if (negate) v = ops_.neg(v);
    for (;;) {
      if (cur_.accept('+')) v = ops_.add(v, term());
      else if (cur_.accept('-')) v = ops_.add(v, ops_.neg(term()));
      else return v;
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (cur_.accept('*')) {
        v = ops_.mul(v, factor());
      } else if (cur_.peek() == '/') {
        std::size_t at = cur_.pos();
        cur_.advance(1);
        v = ops_.div(v, factor(), at);
      } else if (cur_.starts_atom()) {
        v = ops_.mul(v, factor());
      } else {
        return v;
      }
    }
  }

  Value factor() {
    Value v = atom();
    if (cur_.peek() == '^') {
      std::size_t at = cur_.pos();
      cur_.advance(1);
      if (cur_.peek() == '-') {
        cur_.advance(1);
        unsigned e = cur_.small_uint();
        return ops_.pow(ops_.inverse(v, at), e);
      }
      return ops_.pow(v, cur_.small_uint());
    }
    return v;
  }

  Value atom() {
    std::size_t at = (cur_.skip_ws(), cur_.pos());
    if (cur_.at_end()) throw SyntaxError(at, "unexpected end of input");
    if (cur_.accept('(')) {
      std::size_t inner = (cur_.skip_ws(), cur_.pos());
      Value v = expr();
      if (!cur_.accept(')')) throw SyntaxError(inner, "unclosed '('");
      return v;
    }
    if (cur_.at_digit()) return ops_.number(cur_.digits());
    if (auto v = ops_.special(cur_)) return *v;
    if (auto n = cur_.name()) return ops_.named(*n);
    std::string w = cur_.raw_word();
    if (w.empty()) throw SyntaxError(at, std::string("unexpected '") + cur_.peek() + "'");
    throw UnknownGenerator(w);
  }

  Cursor& cur_;
  Ops& ops_;
};

Scalar scalar_named(const std::string& n) {
  if (n == "i") return Scalar::i();
  return Scalar::param(*Param::find(n));
}

struct PolyOps {
  using Value = NCPoly;
  AlphabetPtr alphabet;

  Value neg(const Value& v) { return -v; }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value number(const std::string& d) { return NCPoly::constant(alphabet, integer(d)); }
  Value named(const std::string& n) {
    if (alphabet && alphabet->find(n)) return NCPoly::generator(alphabet, n);
    return NCPoly::constant(alphabet, scalar_named(n));
  }
  std::optional<Value> special(Cursor&) { return std::nullopt; }
  Scalar as_scalar(const Value& v, std::size_t at) {
    if (v.is_zero()) throw DivisionByZero("division by zero");
    if (v.degree() != 0) throw SyntaxError(at, "divisor is not a scalar");
    return v.coefficient(Word{});
  }
  Value div(const Value& a, const Value& b, std::size_t at) { return a * as_scalar(b, at).inverse(); }
  Value inverse(const Value& v, std::size_t at) { return NCPoly::constant(alphabet, as_scalar(v, at).inverse()); }
  Value pow(const Value& v, unsigned e) {
    Value r = NCPoly::constant(alphabet, Scalar(1));
    for (unsigned k = 0; k < e; ++k) r = r * v;
    return r;
  }
};

// Scalars and numeric matrices stay numeric until they meet a generator
// matrix, so "(q - 1/q) R" divides exactly and "R^-1" inverts.
struct LegOps {
  using Value = std::variant<Scalar, ScalarMatrix, LegExpr>;
  AlphabetPtr alphabet;
  const std::map<std::string, ScalarMatrix>* matrices;
  std::size_t N;

  static LegExpr lift(const Value& v) {
    if (const auto* s = std::get_if<Scalar>(&v)) return LegExpr::scalar(*s);
    if (const auto* m = std::get_if<ScalarMatrix>(&v)) return LegExpr::numeric(*m);
    return std::get<LegExpr>(v);
  }
  ScalarMatrix numeric(const Value& v) const {
    if (const auto* s = std::get_if<Scalar>(&v)) return ScalarMatrix::identity(N * N) * *s;
    return std::get<ScalarMatrix>(v);
  }
  static bool is_scalar(const Value& v) { return v.index() == 0; }
  static bool is_symbolic(const Value& v) { return v.index() == 2; }

  Value neg(const Value& v) { return mul(Scalar(-1), v); }
  Value add(const Value& a, const Value& b) {
    if (is_scalar(a) && is_scalar(b)) return std::get<Scalar>(a) + std::get<Scalar>(b);
    if (!is_symbolic(a) && !is_symbolic(b)) return numeric(a) + numeric(b);
    return lift(a) + lift(b);
  }
  Value mul(const Value& a, const Value& b) {
    if (is_scalar(a) && is_scalar(b)) return std::get<Scalar>(a) * std::get<Scalar>(b);
    if (!is_symbolic(a) && !is_symbolic(b)) return numeric(a) * numeric(b);
    return lift(a) * lift(b);
  }
  Value number(const std::string& d) { return integer(d); }
  Value named(const std::string& n) {
    auto it = matrices->find(n);
    if (it != matrices->end()) {
      if (it->second.dim() != N * N) throw LegDimensionMismatch("matrix '" + n + "' does not act on V⊗V");
      return it->second;
    }
    return scalar_named(n);
  }
  // stem[1] / stem[2]
  std::optional<Value> special(Cursor& cur) {
    std::string w = cur.raw_word();
    if (w.empty()) return std::nullopt;
    std::size_t start = cur.pos();
    cur.advance(w.size());
    if (!cur.accept('[')) {
      cur.seek(start);
      return std::nullopt;
    }
    std::size_t leg_at = (cur.skip_ws(), cur.pos());
    unsigned leg = cur.small_uint();
    cur.expect(']', cur.pos());
    if (leg != 1 && leg != 2) throw SyntaxError(leg_at, "leg index must be 1 or 2");
    GenMatrix g;
    if (alphabet && alphabet->find(w + "_1^1")) g = generator_matrix(alphabet, w, N);
    else if (alphabet && alphabet->find(w + "_1")) g = column_vector(alphabet, w, N);
    else throw UnknownGenerator(w + "_1^1");
    return leg == 1 ? LegExpr::leg1(g) : LegExpr::leg2(g);
  }
  Value div(const Value& a, const Value& b, std::size_t at) {
    const auto* s = std::get_if<Scalar>(&b);
    if (!s) throw SyntaxError(at, "divisor is not a scalar");
    if (s->is_zero()) throw DivisionByZero("division by zero");
    return mul(a, s->inverse());
  }
  Value inverse(const Value& v, std::size_t at) {
    if (const auto* s = std::get_if<Scalar>(&v)) return s->inverse();
    if (const auto* m = std::get_if<ScalarMatrix>(&v)) return m->inverse();
    throw SyntaxError(at, "only numeric matrices can be inverted");
  }
  Value pow(const Value& v, unsigned e) {
    Value r = Scalar(1);
    for (unsigned k = 0; k < e; ++k) r = mul(r, v);
    return r;
  }
};

}  // namespace

NCPoly parse_expression(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<std::string> names = scalar_names();
  if (alphabet)
    for (const auto& g : alphabet->generators()) names.push_back(g.name);
  Cursor cur(text, names);
  PolyOps ops{alphabet};
  Parser<PolyOps> parser(cur, ops);
  return parser.parse_all();
}

Scalar parse_scalar(std::string_view text) {
  NCPoly p = parse_expression(text, nullptr);
  if (p.degree() > 0) throw SyntaxError(0, "expected a scalar");
  return p.coefficient(Word{});
}

LegExpr parse_leg_expression(std::string_view text, const AlphabetPtr& alphabet,
                             const std::map<std::string, ScalarMatrix>& matrices, std::size_t N) {
  std::vector<std::string> names = scalar_names();
  for (const auto& [n, m] : matrices) names.push_back(n);
  Cursor cur(text, names);
  LegOps ops{alphabet, &matrices, N};
  Parser<LegOps> parser(cur, ops);
  return LegOps::lift(parser.parse_all());
}

}  // namespace ncd
