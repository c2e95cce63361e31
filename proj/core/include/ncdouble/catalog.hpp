#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncdouble/double.hpp"
#include "ncdouble/ideal.hpp"

namespace ncd {

struct CatalogParams {
  std::size_t N = 2;
  /// Number of variables for hw.
  std::size_t m = 1;
  /// "dj_hecke" or "flip"; ignored when R is given explicitly.
  std::string r = "dj_hecke";
  std::optional<ScalarMatrix> R;
  /// Entry specific: "i"/"ii" for the vector-field doubles (re_re also takes
  /// "i-literal"/"ii-literal"), "tilde" for the shifted generator set of
  /// dn_double, "corrupted" for the u2_calculus negative control.
  std::string variant;
};

struct CatalogEntry {
  std::string name;
  CatalogParams params;
  std::optional<DoubleSpec> dbl;
  /// Stand-alone algebras (sym_skew yields two, mre one).
  std::vector<std::pair<std::string, Presentation>> algebras;
};

struct CatalogInfo {
  std::string name;
  std::string signature;
  std::string summary;
  /// Variants covered by the consistency sweep (negative controls excluded).
  std::vector<std::string> variants;
  /// False for entries that only yield stand-alone algebras.
  bool is_double = true;
};

const std::vector<CatalogInfo>& catalog_list();
/// Throws UnknownEntry, InvalidParams, RuleConstructionError.
CatalogEntry catalog_build(const std::string& name, const CatalogParams& params = {});

/// Generator precedence used by every catalog double: B before A, and for
/// matrix generators "<stem>_i^j" the diagonal (descending) before the
/// upper off-diagonal before the lower off-diagonal entries.
std::vector<std::string> matrix_precedence(const Alphabet& alphabet);

/// R from params, validated as a braiding that is involutive or Hecke.
ScalarMatrix resolve_r(const CatalogParams& params);
/// q for a Hecke symmetry, 1 for an involutive one.
Scalar symmetry_q(const ScalarMatrix& R);

/// Sym_R(V) = T(V)/<Im(qI - R)> and Λ_R(V) = T(V)/<Im(I/q + R)> on x_1..x_N,
/// one relation per row of a reduced basis of each image.
std::pair<Presentation, Presentation> sym_skew_presentations(const ScalarMatrix& R);

struct EntryVerdicts {
  int degree_bound = 0;
  MembershipOptions options;
  std::vector<Membership> entries;
  bool all_member() const;
};

/// Substitutes k_i^j = x_i x^j into every entry of the modified reflection
/// equation and tests membership in the Fock ideal.
EntryVerdicts verify_proposition3(const ScalarMatrix& R, int degree_bound, const MembershipOptions& options = {});

struct IsoVerdicts {
  EntryVerdicts forward;   // RE entries under L = hI - (q - 1/q)K, in the mRE ideal
  EntryVerdicts backward;  // mRE entries under K = (hI - L)/(q - 1/q), in the RE ideal
};
IsoVerdicts verify_iso_re(const ScalarMatrix& R, int degree_bound, const MembershipOptions& options = {});

enum class CoproductForm {
  /// Δ(∂_i^j) = ∂_i^j⊗1 + 1⊗∂_i^j + h Σ_k ∂_k^j⊗∂_i^k
  Consistent,
  /// Δ(∂_i^j) = ∂_i^j⊗1 + 1⊗∂_i^j - h Σ_k ∂_i^k⊗∂_k^j
  Literal,
};

/// ∂ ▷ (product of n-generators) evaluated through the coproduct.
NCPoly coproduct_apply(const DoubleSpec& dn, std::size_t i, std::size_t j, const Word& b_word, CoproductForm form);
/// Compares the coproduct route with the double on every n-word of length
/// 2..cutoff and every ∂_i^j.
bool verify_coproduct_leibniz(std::size_t N, int cutoff, CoproductForm form = CoproductForm::Consistent);
/// At h = 0 both routes agree with the classical partial derivative on
/// commuting generators.
bool verify_coproduct_classical_limit(std::size_t N, int cutoff);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// u(2) structures: homogenization by dt + 2/h, centrality of
/// x^2 + y^2 + z^2 + hbar^2, Lie-type shape of the rule set.
std::vector<Check> u2_structures(int cutoff);
/// The u(2) calculus double; `corrupted` flips the sign of the h/2 term in
/// [dx, y] and serves as a negative control.
DoubleSpec u2_calculus(bool corrupted = false);
/// a ∂_t + b (∂_x^2 + ∂_y^2 + ∂_z^2) applied to ψ through the double.
NCPoly schrodinger_apply(const DoubleSpec& u2, const Scalar& a, const Scalar& b, const NCPoly& psi);

/// q → 1 and substitution claims about the braided doubles at size N.
std::vector<Check> verify_limits(std::size_t N);

/// dm_double relations under M = hI - (q - 1/q)N (and D -> -D/(q - 1/q) when
/// rescale_d) compared entry by entry with dn_braided: permutation entries
/// equal, A entries up to the square of the D factor, B entries up to (q - 1/q)^2.
bool dm_to_dn_substitution(std::size_t N, bool rescale_d);

/// Exact entry-for-entry comparison of two rule sets (by generator names).
bool same_rules(const RewriteSystem& a, const RewriteSystem& b);

}  // namespace ncd
