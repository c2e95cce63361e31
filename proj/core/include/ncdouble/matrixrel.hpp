#pragma once

#include <string>
#include <vector>

#include "ncdouble/ncpoly.hpp"

namespace ncd {

/// Dense square matrix over Scalar. Two-leg operators on V⊗V use dimension
/// N*N with the pair (i,k) (1-based) at index (i-1)*N + k - 1, and
/// m(row (i,j), col (k,l)) = R_ij^kl, the coefficient of e_k⊗e_l in R(e_i⊗e_j).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}
  static ScalarMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
  /// Entry R_ij^kl with 1-based indices.
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l);

  /// N with N*N == dim; throws DimensionNotSquare.
  std::size_t leg_dim() const;

  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  ScalarMatrix& operator*=(const Scalar& c);
  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator*(ScalarMatrix a, const Scalar& c) { return a *= c; }
  friend ScalarMatrix operator*(const Scalar& c, ScalarMatrix a) { return a *= c; }
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) = default;

  bool is_zero() const;
  /// Exact Gauss-Jordan inverse; throws DivisionByZero when singular.
  ScalarMatrix inverse() const;
  std::size_t rank() const;
  /// Basis of the row space in reduced echelon form.
  std::vector<std::vector<Scalar>> row_basis() const;

  /// Row-major canonical entry strings.
  std::vector<std::string> entry_strings() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> e_;
};

ScalarMatrix substitute(const ScalarMatrix& m, const Assignment& assignment);

/// P(e_i⊗e_k) = e_k⊗e_i.
ScalarMatrix flip(std::size_t N);
/// Standard Hecke deformation of the flip: q on e_i⊗e_i, e_j⊗e_i for i<j and
/// e_j⊗e_i + (q - 1/q) e_i⊗e_j for i>j.
ScalarMatrix dj_hecke(std::size_t N);

/// R⊗I and I⊗R on V⊗V⊗V.
ScalarMatrix leg12(const ScalarMatrix& R);
ScalarMatrix leg23(const ScalarMatrix& R);

bool check_braid(const ScalarMatrix& R);

enum class SymmetryType { Involutive, Hecke, Neither };
const char* to_string(SymmetryType t);
/// Involutive when R^2 = I, Hecke when (qI - R)(I/q + R) = 0 for formal q.
SymmetryType check_symmetry_type(const ScalarMatrix& R);

/// Ψ with Tr_2 R_12 Ψ_23 = P_13, i.e. sum_{j,p} R_ij^lp Ψ_pk^jn = δ_in δ_kl.
/// The answer is checked against the defining equation before it is returned.
/// Throws NotSkewInvertible when the system is singular.
ScalarMatrix skew_inverse(const ScalarMatrix& R);
bool check_skew_inverse(const ScalarMatrix& R, const ScalarMatrix& psi);

/// N×N matrix of free-algebra elements (0-based storage).
class GenMatrix {
 public:
  GenMatrix() = default;
  GenMatrix(std::size_t n, AlphabetPtr alphabet);

  std::size_t size() const { return n_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  NCPoly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const NCPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  AlphabetPtr alphabet_;
  std::vector<NCPoly> e_;
};

/// Names "<stem>_i^j" for i,j = 1..N, row-major.
std::vector<std::string> matrix_names(const std::string& stem, std::size_t N);
/// Names "<stem>_i" for i = 1..N.
std::vector<std::string> vector_names(const std::string& stem, std::size_t N);
/// Matrix of generators "<stem>_i^j" looked up in the alphabet.
GenMatrix generator_matrix(const AlphabetPtr& alphabet, const std::string& stem, std::size_t N);
/// Vector generators "<stem>_i" encoded as a matrix with X(i,j) = x_i for every j.
GenMatrix column_vector(const AlphabetPtr& alphabet, const std::string& stem, std::size_t N);
GenMatrix apply_entrywise(const GenMatrix& m, const std::function<NCPoly(const NCPoly&)>& f);

/// Value of a two-leg expression: an N²×N² matrix with NCPoly entries. Factors
/// multiply in the written order so noncommutative words keep their order;
/// a pure scalar acts as a multiple of the identity on any leg dimension.
class LegExpr {
 public:
  LegExpr() = default;
  static LegExpr scalar(const Scalar& c);
  static LegExpr numeric(const ScalarMatrix& m);
  /// X_1 = X ⊗ I: entry ((i,k),(j,l)) = X_ij δ_kl.
  static LegExpr leg1(const GenMatrix& x);
  /// X_2 = I ⊗ X: entry ((i,k),(j,l)) = δ_ij X_kl.
  static LegExpr leg2(const GenMatrix& x);

  /// 0 for a pure scalar.
  std::size_t leg_dim() const { return n_; }
  bool is_scalar() const { return n_ == 0; }
  const NCPoly& entry(std::size_t r, std::size_t c) const { return e_[r * n_ * n_ + c]; }

  friend LegExpr operator+(const LegExpr& a, const LegExpr& b);
  friend LegExpr operator-(const LegExpr& a, const LegExpr& b);
  friend LegExpr operator*(const LegExpr& a, const LegExpr& b);
  LegExpr operator-() const;

 private:
  LegExpr widened(std::size_t n) const;
  std::size_t n_ = 0;
  NCPoly scalar_;
  std::vector<NCPoly> e_;
};

/// All N^4 entries of lhs - rhs, row-major; throws LegDimensionMismatch.
std::vector<NCPoly> expand_matrix_relation(const LegExpr& lhs, const LegExpr& rhs);

}  // namespace ncd
