#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncdouble/ncpoly.hpp"

namespace ncd {

/// Well-founded order on words: (number of A-before-B letter pairs, degree,
/// deglex by generator precedence), compared lexicographically.
class OrderSpec {
 public:
  OrderSpec() = default;
  /// Precedence equal to the letter index, colors taken from the alphabet.
  static OrderSpec deglex(const Alphabet& alphabet);
  /// `ascending` lists every letter exactly once from lightest to heaviest.
  static OrderSpec with_precedence(const Alphabet& alphabet, const std::vector<Letter>& ascending);

  unsigned inversions(const Word& w) const;
  unsigned count(const Word& w, Color c) const;
  /// Negative, zero or positive as a is below, equal to or above b.
  int compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  const std::vector<int>& ranks() const { return rank_; }
  Color color(Letter l) const { return color_[l]; }
  std::size_t size() const { return rank_.size(); }

 private:
  std::vector<int> rank_;
  std::vector<Color> color_;
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

/// Immutable oriented rule set. Construction validates that lhs's are distinct
/// and that every rhs monomial sits strictly below its lhs without raising the
/// number of A- or B-colored letters, which makes every rewrite step strictly
/// decreasing in any context.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(AlphabetPtr alphabet, OrderSpec order, std::vector<RewriteRule> rules);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const OrderSpec& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t max_lhs_length() const { return max_lhs_; }

  /// Rule whose lhs equals w exactly, if any.
  const RewriteRule* rule_for(const Word& w) const;
  /// All (position, rule index) pairs where some lhs occurs in w.
  std::vector<std::pair<std::size_t, std::size_t>> redexes(const Word& w) const;
  std::optional<std::pair<std::size_t, std::size_t>> first_redex(const Word& w) const;
  bool is_normal(const Word& w) const { return !first_redex(w); }

  /// Rule set serialised as "lhs -> rhs" lines.
  std::string to_string() const;

 private:
  AlphabetPtr alphabet_;
  OrderSpec order_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::size_t> lhs_lengths_;
  std::size_t max_lhs_ = 0;
};

enum class Strategy { Leftmost, RandomPosition };

inline constexpr std::uint64_t kDefaultFuel = 50'000'000;

struct NormalizeOptions {
  std::uint64_t fuel = kDefaultFuel;
  Strategy strategy = Strategy::Leftmost;
  std::uint64_t seed = 0;
};

struct NormalizeStats {
  std::uint64_t steps = 0;
  int max_degree = kZeroDegree;
};

/// Rewrites p until no rule lhs occurs in any monomial. Throws FuelExhausted
/// when more than options.fuel rule applications are needed.
NCPoly normalize(const RewriteSystem& sys, const NCPoly& p, const NormalizeOptions& options = {},
                 NormalizeStats* stats = nullptr);

struct UnresolvedPair {
  Word overlap;
  NCPoly difference;
};

struct ConfluenceReport {
  std::size_t overlaps_examined = 0;
  std::vector<UnresolvedPair> unresolved;

  bool confluent() const { return unresolved.empty(); }
};

/// Examines every overlap and inclusion ambiguity of total length at most
/// max_overlap_len and records the ones whose two reductions differ.
/// Ambiguities are evaluated on worker threads; the report order is the
/// enumeration order regardless of scheduling.
ConfluenceReport critical_pairs(const RewriteSystem& sys, std::size_t max_overlap_len,
                                const NormalizeOptions& options = {});

/// Orients relations into an interreduced rule set: linear elimination by
/// leading word, then subword interreduction. Throws RuleConstructionError when
/// a relation collapses to a nonzero constant or cannot be oriented.
RewriteSystem orient_relations(const AlphabetPtr& alphabet, const OrderSpec& order,
                               const std::vector<NCPoly>& relations);

/// Leading word of p under the order (p nonzero).
Word leading_word(const OrderSpec& order, const NCPoly& p);

struct CompletionResult {
  RewriteSystem system;
  bool completed = false;
  std::size_t rules_added = 0;
  std::optional<UnresolvedPair> offending;
};

/// Bounded completion: adds normalised critical-pair differences as new rules
/// until the system is locally confluent up to max_overlap_len, max_new_rules
/// is exceeded, or a difference cannot be oriented (returned as `offending`).
CompletionResult complete(const RewriteSystem& sys, std::size_t max_overlap_len, std::size_t max_new_rules,
                          const NormalizeOptions& options = {});

}  // namespace ncd
