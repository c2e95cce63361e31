#include "ncdouble/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <random>
#include <thread>

namespace ncd {

OrderSpec OrderSpec::deglex(const Alphabet& alphabet) {
  OrderSpec o;
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    o.rank_.push_back(static_cast<int>(k));
    o.color_.push_back(alphabet[static_cast<Letter>(k)].color);
  }
  return o;
}

OrderSpec OrderSpec::with_precedence(const Alphabet& alphabet, const std::vector<Letter>& ascending) {
  if (ascending.size() != alphabet.size()) throw InvalidParams("precedence must list every generator once");
  OrderSpec o = deglex(alphabet);
  std::vector<bool> seen(alphabet.size(), false);
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    Letter l = ascending[k];
    if (l >= alphabet.size() || seen[l]) throw InvalidParams("precedence must list every generator once");
    seen[l] = true;
    o.rank_[l] = static_cast<int>(k);
  }
  return o;
}

unsigned OrderSpec::inversions(const Word& w) const {
  unsigned a_seen = 0;
  unsigned inv = 0;
  for (Letter l : w) {
    Color c = color_[l];
    if (c == Color::A) ++a_seen;
    else if (c == Color::B) inv += a_seen;
  }
  return inv;
}

unsigned OrderSpec::count(const Word& w, Color c) const {
  unsigned n = 0;
  for (Letter l : w)
    if (color_[l] == c) ++n;
  return n;
}

namespace {

int rank_lex(const std::vector<int>& rank, const Word& a, const Word& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    return rank[a[k]] < rank[b[k]] ? -1 : 1;
  }
  return 0;
}

struct MeasureKey {
  unsigned inv;
  Word word;
};

struct KeyGreater {
  const OrderSpec* order;
  bool operator()(const MeasureKey& a, const MeasureKey& b) const {
    if (a.inv != b.inv) return a.inv > b.inv;
    if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
    return rank_lex(order->ranks(), a.word, b.word) > 0;
  }
};

using WorkMap = std::map<MeasureKey, Scalar, KeyGreater>;

void accumulate(WorkMap& work, MeasureKey key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = work.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  }
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, n));
  std::vector<std::exception_ptr> errors(n);
  if (nthreads <= 1) {
    for (std::size_t k = 0; k < n; ++k) {
      try {
        body(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < n; k = next++) {
          try {
            body(k);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

int OrderSpec::compare(const Word& a, const Word& b) const {
  unsigned ia = inversions(a), ib = inversions(b);
  if (ia != ib) return ia < ib ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return rank_lex(rank_, a, b);
}

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, OrderSpec order, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), rules_(std::move(rules)) {
  if (order_.size() != alphabet_->size()) throw RuleConstructionError("order does not match alphabet");
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    auto& r = rules_[k];
    if (r.lhs.empty()) throw RuleConstructionError("rule with empty left-hand side");
    if (!r.rhs.is_zero() && !same_alphabet(r.rhs.alphabet(), alphabet_))
      throw AlphabetMismatch("rule right-hand side over a foreign alphabet");
    r.rhs = r.rhs.with_alphabet(alphabet_);
    auto [it, inserted] = index_.emplace(r.lhs, k);
    if (!inserted)
      throw RuleConstructionError("duplicate left-hand side '" + r.lhs.to_string(*alphabet_) + "'");
    unsigned la = order_.count(r.lhs, Color::A), lb = order_.count(r.lhs, Color::B);
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!order_.less(w, r.lhs))
        throw RuleConstructionError("rule " + r.lhs.to_string(*alphabet_) + " -> " + r.rhs.to_string() +
                                    " is not decreasing at monomial '" + w.to_string(*alphabet_) + "'");
      if (order_.count(w, Color::A) > la || order_.count(w, Color::B) > lb)
        throw RuleConstructionError("rule " + r.lhs.to_string(*alphabet_) + " -> " + r.rhs.to_string() +
                                    " raises the number of colored letters");
    }
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
    if (std::find(lhs_lengths_.begin(), lhs_lengths_.end(), r.lhs.size()) == lhs_lengths_.end())
      lhs_lengths_.push_back(r.lhs.size());
  }
  std::sort(lhs_lengths_.begin(), lhs_lengths_.end());
}

const RewriteRule* RewriteSystem::rule_for(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::first_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len : lhs_lengths_) {
      if (pos + len > w.size()) break;
      auto it = index_.find(w.sub(pos, len));
      if (it != index_.end()) return std::make_pair(pos, it->second);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> RewriteSystem::redexes(const Word& w) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len : lhs_lengths_) {
      if (pos + len > w.size()) break;
      auto it = index_.find(w.sub(pos, len));
      if (it != index_.end()) out.emplace_back(pos, it->second);
    }
  }
  return out;
}

std::string RewriteSystem::to_string() const {
  std::string s;
  for (const auto& r : rules_) s += r.lhs.to_string(*alphabet_) + " -> " + r.rhs.to_string() + "\n";
  return s;
}

NCPoly normalize(const RewriteSystem& sys, const NCPoly& p, const NormalizeOptions& options, NormalizeStats* stats) {
  if (!p.is_zero() && !same_alphabet(p.alphabet(), sys.alphabet()))
    throw AlphabetMismatch("polynomial is not over the rewrite system's alphabet");
  const OrderSpec& order = sys.order();
  WorkMap work(KeyGreater{&order});
  NormalizeStats local;
  for (const auto& [w, c] : p.terms()) {
    local.max_degree = std::max(local.max_degree, static_cast<int>(w.size()));
    accumulate(work, MeasureKey{order.inversions(w), w}, c);
  }
  std::mt19937_64 rng(options.seed);
  NCPoly result(sys.alphabet());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key().word;
    const Scalar& c = node.mapped();
    std::optional<std::pair<std::size_t, std::size_t>> redex;
    if (options.strategy == Strategy::Leftmost) {
      redex = sys.first_redex(w);
    } else {
      auto all = sys.redexes(w);
      if (!all.empty()) redex = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    }
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    if (++local.steps > options.fuel)
      throw FuelExhausted("normalization exceeded " + std::to_string(options.fuel) + " rewrite steps");
    const auto& [pos, ri] = *redex;
    const RewriteRule& rule = sys.rules()[ri];
    Word prefix = w.sub(0, pos);
    Word suffix = w.sub(pos + rule.lhs.size());
    for (const auto& [m, rc] : rule.rhs.terms()) {
      Word nw = prefix + m + suffix;
      local.max_degree = std::max(local.max_degree, static_cast<int>(nw.size()));
      unsigned inv = order.inversions(nw);
      accumulate(work, MeasureKey{inv, std::move(nw)}, c * rc);
    }
  }
  if (stats) {
    stats->steps += local.steps;
    stats->max_degree = std::max(stats->max_degree, local.max_degree);
  }
  return result;
}

namespace {

struct Ambiguity {
  Word word;
  NCPoly first;
  NCPoly second;
};

}  // namespace

ConfluenceReport critical_pairs(const RewriteSystem& sys, std::size_t max_overlap_len, const NormalizeOptions& options) {
  if (max_overlap_len < sys.max_lhs_length())
    throw InvalidParams("overlap length " + std::to_string(max_overlap_len) + " is below the longest rule (" +
                        std::to_string(sys.max_lhs_length()) + ")");
  const auto& rules = sys.rules();
  const auto& alpha = sys.alphabet();
  std::vector<Ambiguity> amb;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // overlaps: proper suffix of l1 equals proper prefix of l2
      std::size_t kmax = std::min(l1.size(), l2.size()) - 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (l1.size() + l2.size() - k > max_overlap_len) continue;
        if (l1.sub(l1.size() - k) != l2.sub(0, k)) continue;
        Word tail = l2.sub(k);
        Word head = l1.sub(0, l1.size() - k);
        NCPoly b1 = rules[i].rhs * NCPoly::monomial(alpha, tail);
        NCPoly b2 = NCPoly::monomial(alpha, head) * rules[j].rhs;
        amb.push_back({l1 + tail, std::move(b1), std::move(b2)});
      }
      // inclusions: l2 strictly inside l1
      if (i != j && l2.size() <= l1.size() && l1.size() <= max_overlap_len) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (l1.sub(pos, l2.size()) != l2) continue;
          NCPoly b2 = NCPoly::monomial(alpha, l1.sub(0, pos)) * rules[j].rhs *
                      NCPoly::monomial(alpha, l1.sub(pos + l2.size()));
          amb.push_back({l1, rules[i].rhs, std::move(b2)});
        }
      }
    }
  }
  std::vector<std::optional<NCPoly>> diffs(amb.size());
  parallel_for(amb.size(), [&](std::size_t k) {
    NCPoly d = normalize(sys, amb[k].first, options) - normalize(sys, amb[k].second, options);
    if (!d.is_zero()) diffs[k] = std::move(d);
  });
  ConfluenceReport report;
  report.overlaps_examined = amb.size();
  for (std::size_t k = 0; k < amb.size(); ++k)
    if (diffs[k]) report.unresolved.push_back({amb[k].word, std::move(*diffs[k])});
  return report;
}

Word leading_word(const OrderSpec& order, const NCPoly& p) {
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || order.compare(w, *best) > 0) best = &w;
  if (!best) throw std::logic_error("leading_word of zero polynomial");
  return *best;
}

namespace {

RewriteRule rule_from_relation(const OrderSpec& order, const NCPoly& rel, const AlphabetPtr& alphabet) {
  Word lw = leading_word(order, rel);
  if (lw.empty()) throw RuleConstructionError("relation reduces to the nonzero constant " + rel.to_string());
  Scalar lc = rel.coefficient(lw);
  NCPoly rhs = rel * (Scalar(-1) / lc);
  rhs.add_term(lw, Scalar(1));
  return {lw, rhs.with_alphabet(alphabet)};
}

// reduced echelon form of the relations by leading word
std::vector<NCPoly> echelon(const OrderSpec& order, const std::vector<NCPoly>& relations) {
  std::map<MeasureKey, NCPoly, KeyGreater> pivots(KeyGreater{&order});
  for (const auto& rel : relations) {
    NCPoly row = rel;
    while (!row.is_zero()) {
      Word lw = leading_word(order, row);
      auto it = pivots.find(MeasureKey{order.inversions(lw), lw});
      if (it == pivots.end()) {
        row *= row.coefficient(lw).inverse();
        pivots.emplace(MeasureKey{order.inversions(lw), lw}, std::move(row));
        break;
      }
      row -= it->second * row.coefficient(lw);
    }
  }
  // back substitution from the lightest pivot upwards
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    NCPoly& row = it->second;
    std::vector<Word> words;
    for (const auto& [w, c] : row.terms())
      if (!(w == it->first.word)) words.push_back(w);
    for (const Word& w : words) {
      auto pv = pivots.find(MeasureKey{order.inversions(w), w});
      if (pv == pivots.end()) continue;
      Scalar c = row.coefficient(w);
      if (!c.is_zero()) row -= pv->second * c;
    }
  }
  std::vector<NCPoly> out;
  for (auto& [k, row] : pivots) out.push_back(std::move(row));
  return out;
}

}  // namespace

RewriteSystem orient_relations(const AlphabetPtr& alphabet, const OrderSpec& order, const std::vector<NCPoly>& relations) {
  std::vector<NCPoly> rels;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!same_alphabet(r.alphabet(), alphabet)) throw AlphabetMismatch("relation over a foreign alphabet");
    rels.push_back(r.with_alphabet(alphabet));
  }
  for (int round = 0;; ++round) {
    if (round > 64) throw RuleConstructionError("interreduction did not stabilise");
    std::vector<NCPoly> rows = echelon(order, rels);
    std::vector<RewriteRule> rules;
    for (const auto& row : rows) rules.push_back(rule_from_relation(order, row, alphabet));
    RewriteSystem sys(alphabet, order, rules);
    // a rule whose lhs contains another lhs is replaced by its reduced relation
    bool changed = false;
    std::vector<NCPoly> next;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const Word& l = rules[k].lhs;
      bool reducible = false;
      for (const auto& [pos, ri] : sys.redexes(l))
        if (ri != k) reducible = true;
      NCPoly rel = NCPoly::monomial(alphabet, l) - rules[k].rhs;
      if (reducible) {
        std::vector<RewriteRule> others;
        for (std::size_t j = 0; j < rules.size(); ++j)
          if (j != k) others.push_back(rules[j]);
        NCPoly reduced = normalize(RewriteSystem(alphabet, order, others), rel);
        if (!reduced.is_zero()) next.push_back(reduced);
        for (std::size_t j = k + 1; j < rules.size(); ++j)
          next.push_back(NCPoly::monomial(alphabet, rules[j].lhs) - rules[j].rhs);
        changed = true;
        break;
      }
      next.push_back(rel);
    }
    if (changed) {
      rels = std::move(next);
      continue;
    }
    // normal right-hand sides
    for (auto& r : rules) r.rhs = normalize(sys, r.rhs);
    return RewriteSystem(alphabet, order, std::move(rules));
  }
}

CompletionResult complete(const RewriteSystem& sys, std::size_t max_overlap_len, std::size_t max_new_rules,
                          const NormalizeOptions& options) {
  CompletionResult result;
  result.system = sys;
  for (;;) {
    ConfluenceReport rep = critical_pairs(result.system, max_overlap_len, options);
    if (rep.confluent()) {
      result.completed = true;
      return result;
    }
    if (result.rules_added + rep.unresolved.size() > max_new_rules) {
      result.offending = rep.unresolved.front();
      return result;
    }
    std::vector<NCPoly> rels;
    for (const auto& r : result.system.rules())
      rels.push_back(NCPoly::monomial(sys.alphabet(), r.lhs) - r.rhs);
    for (const auto& u : rep.unresolved) rels.push_back(u.difference);
    try {
      result.system = orient_relations(sys.alphabet(), sys.order(), rels);
    } catch (const RuleConstructionError&) {
      result.offending = rep.unresolved.front();
      return result;
    }
    result.rules_added += rep.unresolved.size();
  }
}

}  // namespace ncd
