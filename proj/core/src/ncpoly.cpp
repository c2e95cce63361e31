#include "ncdouble/ncpoly.hpp"

namespace ncd {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  if (generators_.size() > std::numeric_limits<Letter>::max())
    throw InvalidParams("alphabet too large");
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    auto [it, inserted] = by_name_.emplace(generators_[k].name, static_cast<Letter>(k));
    if (!inserted) throw AlphabetCollision("duplicate generator name '" + generators_[k].name + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw UnknownGenerator(std::string(name));
}

AlphabetPtr make_alphabet(const std::vector<std::string>& names, Color color) {
  std::vector<Generator> gens;
  gens.reserve(names.size());
  for (const auto& n : names) gens.push_back({n, color});
  return std::make_shared<const Alphabet>(std::move(gens));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string Word::to_string(const Alphabet& alphabet) const {
  std::string s;
  for (Letter l : letters_) {
    if (!s.empty()) s += ' ';
    s += alphabet[l].name;
  }
  return s;
}

NCPoly NCPoly::constant(AlphabetPtr alphabet, const Scalar& c) { return monomial(std::move(alphabet), Word{}, c); }

NCPoly NCPoly::monomial(AlphabetPtr alphabet, Word w, const Scalar& c) {
  NCPoly p(std::move(alphabet));
  if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
  return p;
}

NCPoly NCPoly::generator(AlphabetPtr alphabet, std::string_view name) {
  Letter l = alphabet->at(name);
  return monomial(std::move(alphabet), Word{l});
}

NCPoly NCPoly::generator(AlphabetPtr alphabet, Letter l) { return monomial(std::move(alphabet), Word{l}); }

int NCPoly::degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(terms_.rbegin()->first.size());
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::unify_alphabet(const NCPoly& o) {
  if (!o.alphabet_) return;
  if (!alphabet_) {
    alphabet_ = o.alphabet_;
    return;
  }
  if (!same_alphabet(alphabet_, o.alphabet_)) throw AlphabetMismatch("operands live over different alphabets");
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  unify_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  unify_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r(a.alphabet_);
  r.unify_alphabet(b);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!same_alphabet(a.alphabet_, b.alphabet_)) return false;
  return a.terms_ == b.terms_;
}

NCPoly NCPoly::with_alphabet(AlphabetPtr alphabet) const {
  NCPoly r = *this;
  r.alphabet_ = std::move(alphabet);
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  NCPoly r(alphabet_);
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

namespace {

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '(') ++depth;
    else if (ch == ')') --depth;
    else if (depth == 0 && k > 0 && (ch == '+' || ch == '-') && s[k - 1] == ' ') return true;
  }
  return false;
}

}  // namespace

std::string coefficient_prefix(const Scalar& c, bool leading) {
  std::string s = c.to_string();
  bool negative = false;
  if (!has_top_level_sum(s) && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  std::string body;
  if (s == "1") body = "";
  else if (has_top_level_sum(s)) body = "(" + s + ") ";
  else body = s + " ";
  if (leading) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool leading = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    if (w.empty()) {
      std::string s = c.to_string();
      if (leading) out += s;
      else if (!has_top_level_sum(s) && s[0] == '-') out += " - " + s.substr(1);
      else out += " + " + (has_top_level_sum(s) ? "(" + s + ")" : s);
    } else {
      out += coefficient_prefix(c, leading) + w.to_string(*alphabet_);
    }
    leading = false;
  }
  return out;
}

NCPoly substitute(const NCPoly& p, const Assignment& assignment) {
  return p.map_coefficients([&](const Scalar& c) { return substitute(c, assignment); });
}

NCPoly apply_linear(const std::map<Letter, NCPoly>& images, const NCPoly& p, AlphabetPtr target) {
  NCPoly result(target);
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc = NCPoly::constant(target, c);
    for (Letter l : w) {
      auto it = images.find(l);
      if (it == images.end()) {
        std::string name = p.alphabet() ? (*p.alphabet())[l].name : std::to_string(l);
        throw UnmappedGenerator(name);
      }
      acc = acc * it->second;
    }
    result += acc;
  }
  return result;
}

NCPoly embed(const NCPoly& p, const AlphabetPtr& target) {
  if (same_alphabet(p.alphabet(), target)) return p.with_alphabet(target);
  NCPoly r(target);
  for (const auto& [w, c] : p.terms()) {
    Word tw;
    for (Letter l : w) tw.push_back(target->at((*p.alphabet())[l].name));
    r.add_term(tw, c);
  }
  return r;
}

}  // namespace ncd
