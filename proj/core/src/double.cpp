#include "ncdouble/double.hpp"

#include <unordered_map>

namespace ncd {

Scalar counit_of_word(const std::map<std::string, Scalar>& counit, const Alphabet& alphabet, const Word& w) {
  Scalar r(1);
  for (Letter l : w) {
    auto it = counit.find(alphabet[l].name);
    if (it == counit.end()) throw MissingCounit("no counit value for '" + alphabet[l].name + "'");
    r *= it->second;
    if (r.is_zero()) break;
  }
  return r;
}

void validate_counit(const Presentation& p) {
  if (!p.counit) throw MissingCounit("presentation has no counit");
  for (const auto& [name, v] : *p.counit)
    if (!p.alphabet->find(name)) throw UnknownGenerator(name);
  for (const auto& g : p.alphabet->generators())
    if (!p.counit->count(g.name)) throw MissingCounit("no counit value for '" + g.name + "'");
  for (const auto& rel : p.relations) {
    Scalar s;
    for (const auto& [w, c] : rel.terms()) s += c * counit_of_word(*p.counit, *p.alphabet, w);
    if (!s.is_zero()) throw InvalidParams("counit does not annihilate the relation " + rel.to_string());
  }
}

namespace {

OrderSpec make_order(const Alphabet& alphabet, const std::vector<std::string>& precedence) {
  if (precedence.empty()) return OrderSpec::deglex(alphabet);
  std::vector<Letter> asc;
  for (const auto& n : precedence) asc.push_back(alphabet.at(n));
  return OrderSpec::with_precedence(alphabet, asc);
}

NCPoly lift_to(const NCPoly& p, const AlphabetPtr& target) {
  if (p.is_zero()) return NCPoly(target);
  if (same_alphabet(p.alphabet(), target)) return p.with_alphabet(target);
  if (!p.alphabet()) return NCPoly::constant(target, p.coefficient(Word{}));
  return embed(p, target);
}

}  // namespace

AlphabetPtr combined_alphabet(const Alphabet& A, const Alphabet& B) {
  std::vector<Generator> gens;
  for (const auto& g : B.generators()) gens.push_back({g.name, Color::B});
  for (const auto& g : A.generators()) gens.push_back({g.name, Color::A});
  return std::make_shared<const Alphabet>(std::move(gens));
}

RewriteSystem present(const Presentation& p, const std::vector<std::string>& precedence) {
  return orient_relations(p.alphabet, make_order(*p.alphabet, precedence), p.relations);
}

DoubleSpec::DoubleSpec(Presentation A, Presentation B, std::vector<NCPoly> permutation, DoubleOptions options)
    : A_(std::move(A)), B_(std::move(B)), options_(std::move(options)) {
  if (!A_.alphabet) A_.alphabet = make_alphabet({});
  if (!B_.alphabet) B_.alphabet = make_alphabet({});
  alphabet_ = combined_alphabet(*A_.alphabet, *B_.alphabet);
  if (A_.counit) validate_counit(A_);

  for (auto& p : permutation) perm_.push_back(lift_to(p, alphabet_));
  OrderSpec order = make_order(*alphabet_, options_.precedence);
  system_ = orient_relations(alphabet_, order, all_relations());
  if (options_.completion_rules > 0) {
    auto res = complete(system_, options_.completion_overlap, options_.completion_rules);
    if (!res.completed) {
      std::string why = res.offending ? " at " + res.offending->overlap.to_string(*alphabet_) + ": " +
                                            res.offending->difference.to_string()
                                      : "";
      throw NotConfluent("completion did not finish" + why);
    }
    system_ = std::move(res.system);
  }

  std::size_t nb = B_.alphabet->size();
  for (std::size_t a = nb; a < alphabet_->size(); ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (!system_.rule_for(Word{static_cast<Letter>(a), static_cast<Letter>(b)}))
        throw RuleConstructionError("permutation relations do not determine '" + (*alphabet_)[a].name + " " +
                                    (*alphabet_)[b].name + "'");
  std::vector<RewriteRule> brules;
  for (const auto& r : system_.rules()) {
    bool pure = true;
    for (Letter l : r.lhs)
      if (l >= nb) pure = false;
    if (pure) brules.push_back(r);
  }
  b_system_ = RewriteSystem(alphabet_, order, std::move(brules));
}

std::vector<NCPoly> DoubleSpec::all_relations() const {
  std::vector<NCPoly> rels;
  for (const auto& r : B_.relations) rels.push_back(lift_to(r, alphabet_));
  for (const auto& r : A_.relations) rels.push_back(lift_to(r, alphabet_));
  for (const auto& r : perm_) rels.push_back(r);
  return rels;
}

NCPoly DoubleSpec::lift(const NCPoly& p) const { return lift_to(p, alphabet_); }

const RewriteRule& DoubleSpec::rule(std::string_view a, std::string_view b) const {
  const RewriteRule* r = system_.rule_for(Word{alphabet_->at(a), alphabet_->at(b)});
  if (!r) throw UnknownGenerator(std::string(a) + " " + std::string(b));
  return *r;
}

ConfluenceReport check_sigma_consistency(const DoubleSpec& d, std::size_t overlap_len, const NormalizeOptions& options) {
  if (overlap_len < 3) throw InvalidParams("overlap length must be at least 3");
  return critical_pairs(d.system(), overlap_len, options);
}

NCPoly act(const DoubleSpec& d, const NCPoly& a, const NCPoly& b, const NormalizeOptions& options) {
  if (!d.A().counit) throw MissingCounit("algebra A has no counit");
  const auto& counit = *d.A().counit;
  const Alphabet& alpha = *d.alphabet();
  std::size_t nb = d.B().alphabet->size();
  NCPoly nf = normalize(d.system(), d.lift(a) * d.lift(b), options);
  NCPoly out(d.B().alphabet);
  for (const auto& [w, c] : nf.terms()) {
    std::size_t split = 0;
    while (split < w.size() && w[split] < nb) ++split;
    Scalar e = counit_of_word(counit, alpha, w.sub(split));
    if (e.is_zero()) continue;
    for (std::size_t k = split; k < w.size(); ++k)
      if (w[k] < nb) throw NotConfluent("normal form " + w.to_string(alpha) + " is not B-then-A ordered");
    out.add_term(w.sub(0, split), c * e);
  }
  return out;
}

std::vector<std::string> OperatorMatrix::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& w : basis) out.push_back(w.empty() ? "1" : w.to_string(*alphabet));
  return out;
}

std::vector<Word> normal_basis(const DoubleSpec& d, int cutoff) {
  std::size_t nb = d.B().alphabet->size();
  std::vector<Word> basis{Word{}};
  std::size_t level_start = 0;
  for (int deg = 1; deg <= cutoff; ++deg) {
    std::size_t level_end = basis.size();
    for (std::size_t k = level_start; k < level_end; ++k)
      for (std::size_t l = 0; l < nb; ++l) {
        Word w = basis[k];
        w.push_back(static_cast<Letter>(l));
        if (d.b_system().is_normal(w)) basis.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return basis;
}

OperatorMatrix op_matrix(const DoubleSpec& d, const NCPoly& a, int cutoff, const NormalizeOptions& options) {
  const RewriteSystem& bs = d.b_system();
  if (bs.max_lhs_length() > 0) {
    auto rep = critical_pairs(bs, 2 * bs.max_lhs_length() - 1, options);
    if (!rep.confluent())
      throw NotConfluent("rules of B are not confluent at " + rep.unresolved.front().overlap.to_string(*d.alphabet()));
  }
  OperatorMatrix m;
  m.cutoff = cutoff;
  m.alphabet = d.B().alphabet;
  m.basis = normal_basis(d, cutoff);
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t k = 0; k < m.basis.size(); ++k) index.emplace(m.basis[k], k);
  m.entries = ScalarMatrix(m.basis.size());
  for (std::size_t col = 0; col < m.basis.size(); ++col) {
    NCPoly image = act(d, a, NCPoly::monomial(d.B().alphabet, m.basis[col]), options);
    for (const auto& [w, c] : image.terms()) {
      auto it = index.find(w);
      if (it == index.end())
        throw TruncationEscape("image of '" + m.basis[col].to_string(*m.alphabet) + "' contains '" +
                               w.to_string(*m.alphabet) + "' beyond cutoff " + std::to_string(cutoff));
      m.entries(it->second, col) = c;
    }
  }
  return m;
}

bool verify_representation(const DoubleSpec& d, const NCPoly& a1, const NCPoly& a2, int cutoff,
                           const NormalizeOptions& options) {
  NCPoly x = d.lift(a1), y = d.lift(a2);
  auto m12 = op_matrix(d, x * y, cutoff, options);
  auto m1 = op_matrix(d, x, cutoff, options);
  auto m2 = op_matrix(d, y, cutoff, options);
  return m12.entries == m1.entries * m2.entries;
}

Presentation specialize(const Presentation& p, const Assignment& assignment) {
  Presentation r;
  r.alphabet = p.alphabet;
  for (const auto& rel : p.relations) r.relations.push_back(substitute(rel, assignment));
  if (p.counit) {
    r.counit.emplace();
    for (const auto& [n, v] : *p.counit) (*r.counit)[n] = substitute(v, assignment);
  }
  return r;
}

DoubleSpec specialize(const DoubleSpec& d, const Assignment& assignment) {
  std::vector<NCPoly> perm;
  for (const auto& p : d.permutation()) perm.push_back(substitute(p, assignment));
  return DoubleSpec(specialize(d.A(), assignment), specialize(d.B(), assignment), std::move(perm), d.options());
}

}  // namespace ncd
