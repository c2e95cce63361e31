#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdouble/matrixrel.hpp"
#include "ncdouble/rewrite.hpp"

namespace ncd {

/// Generators and relations of one algebra; the counit, when present, gives
/// ε on generators by name and is extended as an algebra map.
struct Presentation {
  AlphabetPtr alphabet;
  std::vector<NCPoly> relations;
  std::optional<std::map<std::string, Scalar>> counit;
};

/// Checks that ε annihilates every relation; throws MissingCounit when a
/// generator has no value and InvalidParams naming the first violated relation.
void validate_counit(const Presentation& p);

/// ε(w) for a word over the given alphabet.
Scalar counit_of_word(const std::map<std::string, Scalar>& counit, const Alphabet& alphabet, const Word& w);

/// B letters colored B followed by A letters colored A.
AlphabetPtr combined_alphabet(const Alphabet& A, const Alphabet& B);

struct DoubleOptions {
  /// Generator names from lightest to heaviest; empty means alphabet order
  /// (all B letters, then all A letters).
  std::vector<std::string> precedence;
  /// When positive, bounded completion runs after orientation.
  std::size_t completion_rules = 0;
  std::size_t completion_overlap = 4;
};

/// B ⊗_σ A given by relations of A, relations of B and the permutation
/// relations over the combined alphabet (B letters first, colored B, then A
/// letters, colored A). Normal forms are B-words followed by A-words.
class DoubleSpec {
 public:
  DoubleSpec(Presentation A, Presentation B, std::vector<NCPoly> permutation, DoubleOptions options = {});

  const Presentation& A() const { return A_; }
  const Presentation& B() const { return B_; }
  /// Permutation relations over the combined alphabet.
  const std::vector<NCPoly>& permutation() const { return perm_; }
  const DoubleOptions& options() const { return options_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const RewriteSystem& system() const { return system_; }
  /// Rules whose left side involves only B letters (over the combined alphabet).
  const RewriteSystem& b_system() const { return b_system_; }
  /// Every relation of the double over the combined alphabet.
  std::vector<NCPoly> all_relations() const;

  /// Re-expresses a polynomial over A, B or the combined alphabet by name.
  NCPoly lift(const NCPoly& p) const;
  NCPoly gen(std::string_view name) const { return NCPoly::generator(alphabet_, name); }
  /// Permutation rule for the word a·b.
  const RewriteRule& rule(std::string_view a, std::string_view b) const;

 private:
  Presentation A_;
  Presentation B_;
  std::vector<NCPoly> perm_;
  DoubleOptions options_;
  AlphabetPtr alphabet_;
  RewriteSystem system_;
  RewriteSystem b_system_;
};

/// Plain algebra from relations: oriented by deglex (or the given precedence).
RewriteSystem present(const Presentation& p, const std::vector<std::string>& precedence = {});

ConfluenceReport check_sigma_consistency(const DoubleSpec& d, std::size_t overlap_len,
                                         const NormalizeOptions& options = {});

/// a ▷ b: the double normal form of a·b with ε applied to every A-suffix.
/// The result is expressed over B's alphabet.
NCPoly act(const DoubleSpec& d, const NCPoly& a, const NCPoly& b, const NormalizeOptions& options = {});

struct OperatorMatrix {
  int cutoff = 0;
  std::vector<Word> basis;  // normal B-words over B's alphabet
  ScalarMatrix entries;
  AlphabetPtr alphabet;

  std::vector<std::string> basis_strings() const;
};

/// Normal B-words of degree at most cutoff, by degree then precedence.
std::vector<Word> normal_basis(const DoubleSpec& d, int cutoff);

/// Matrix of b ↦ a ▷ b on the normal basis. Throws NotConfluent when B's rules
/// are not confluent and TruncationEscape when an image leaves the basis.
OperatorMatrix op_matrix(const DoubleSpec& d, const NCPoly& a, int cutoff, const NormalizeOptions& options = {});

/// Op(a1 a2) == Op(a1) Op(a2) on the truncated basis.
bool verify_representation(const DoubleSpec& d, const NCPoly& a1, const NCPoly& a2, int cutoff,
                           const NormalizeOptions& options = {});

/// Substitutes parameters everywhere and rebuilds (re-orienting) the double.
DoubleSpec specialize(const DoubleSpec& d, const Assignment& assignment);
Presentation specialize(const Presentation& p, const Assignment& assignment);

}  // namespace ncd
