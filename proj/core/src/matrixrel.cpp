#include "ncdouble/matrixrel.hpp"

#include <cmath>

namespace ncd {

ScalarMatrix ScalarMatrix::identity(std::size_t dim) {
  ScalarMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = Scalar(1);
  return m;
}

std::size_t ScalarMatrix::leg_dim() const {
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim_))));
  if (n * n != dim_) throw DimensionNotSquare("dimension " + std::to_string(dim_) + " is not a perfect square");
  return n;
}

const Scalar& ScalarMatrix::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  std::size_t n = leg_dim();
  return (*this)((i - 1) * n + j - 1, (k - 1) * n + l - 1);
}

Scalar& ScalarMatrix::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  std::size_t n = leg_dim();
  return (*this)((i - 1) * n + j - 1, (k - 1) * n + l - 1);
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
  if (dim_ != o.dim_) throw LegDimensionMismatch("matrix sum of different dimensions");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
  if (dim_ != o.dim_) throw LegDimensionMismatch("matrix difference of different dimensions");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator*=(const Scalar& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.dim_ != b.dim_) throw LegDimensionMismatch("matrix product of different dimensions");
  std::size_t d = a.dim_;
  ScalarMatrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

ScalarMatrix ScalarMatrix::inverse() const {
  std::size_t d = dim_;
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a(piv, col).is_zero()) ++piv;
    if (piv == d) throw DivisionByZero("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Scalar f = a(col, col).inverse();
    for (std::size_t j = 0; j < d; ++j) {
      if (!a(col, j).is_zero()) a(col, j) *= f;
      if (!inv(col, j).is_zero()) inv(col, j) *= f;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar g = a(r, col);
      for (std::size_t j = 0; j < d; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= g * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= g * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Scalar>> ScalarMatrix::row_basis() const {
  std::size_t d = dim_;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < d; ++r) rows.emplace_back(e_.begin() + r * d, e_.begin() + (r + 1) * d);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Scalar f = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x *= f;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar g = rows[r][col];
      for (std::size_t j = 0; j < d; ++j)
        if (!rows[rank][j].is_zero()) rows[r][j] -= g * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::size_t ScalarMatrix::rank() const { return row_basis().size(); }

std::vector<std::string> ScalarMatrix::entry_strings() const {
  std::vector<std::string> out;
  out.reserve(e_.size());
  for (const auto& x : e_) out.push_back(x.to_string());
  return out;
}

ScalarMatrix substitute(const ScalarMatrix& m, const Assignment& assignment) {
  ScalarMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = substitute(m(i, j), assignment);
  return r;
}

ScalarMatrix flip(std::size_t N) {
  if (N == 0) throw InvalidParams("N must be at least 1");
  ScalarMatrix P(N * N);
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t k = 1; k <= N; ++k) P.at(i, k, k, i) = Scalar(1);
  return P;
}

ScalarMatrix dj_hecke(std::size_t N) {
  if (N == 0) throw InvalidParams("N must be at least 1");
  ScalarMatrix R(N * N);
  Scalar q = Scalar::q();
  Scalar lambda = q - q.inverse();
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) {
      if (i == j) {
        R.at(i, i, i, i) = q;
        continue;
      }
      R.at(i, j, j, i) = Scalar(1);
      if (i > j) R.at(i, j, i, j) = lambda;
    }
  return R;
}

ScalarMatrix leg12(const ScalarMatrix& R) {
  std::size_t n = R.leg_dim();
  ScalarMatrix m(n * n * n);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) {
      if (R(r, c).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) m(r * n + k, c * n + k) = R(r, c);
    }
  return m;
}

ScalarMatrix leg23(const ScalarMatrix& R) {
  std::size_t n = R.leg_dim();
  ScalarMatrix m(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c < n * n; ++c)
        if (!R(r, c).is_zero()) m(k * n * n + r, k * n * n + c) = R(r, c);
  return m;
}

bool check_braid(const ScalarMatrix& R) {
  ScalarMatrix a = leg12(R), b = leg23(R);
  return a * b * a == b * a * b;
}

const char* to_string(SymmetryType t) {
  switch (t) {
    case SymmetryType::Involutive: return "Involutive";
    case SymmetryType::Hecke: return "Hecke";
    default: return "Neither";
  }
}

SymmetryType check_symmetry_type(const ScalarMatrix& R) {
  std::size_t d = R.dim();
  R.leg_dim();
  ScalarMatrix I = ScalarMatrix::identity(d);
  if (R * R == I) return SymmetryType::Involutive;
  Scalar q = Scalar::q();
  if (((q * I - R) * (q.inverse() * I + R)).is_zero()) return SymmetryType::Hecke;
  return SymmetryType::Neither;
}

bool check_skew_inverse(const ScalarMatrix& R, const ScalarMatrix& psi) {
  std::size_t n = R.leg_dim();
  if (psi.dim() != R.dim()) return false;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t m = 1; m <= n; ++m) {
          Scalar s;
          for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t p = 1; p <= n; ++p) {
              const Scalar& r = R.at(i, j, l, p);
              if (!r.is_zero()) s += r * psi.at(p, k, j, m);
            }
          if (s != Scalar(i == m && k == l ? 1 : 0)) return false;
        }
  return true;
}

ScalarMatrix skew_inverse(const ScalarMatrix& R) {
  std::size_t n = R.leg_dim();
  // the system decouples: M((i,l),(p,j)) = R_ij^lp for every (k,n)
  ScalarMatrix M(n * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t l = 1; l <= n; ++l)
      for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t j = 1; j <= n; ++j) M.at(i, l, p, j) = R.at(i, j, l, p);
  ScalarMatrix Minv;
  try {
    Minv = M.inverse();
  } catch (const DivisionByZero&) {
    throw NotSkewInvertible("the defining linear system is singular");
  }
  ScalarMatrix psi(n * n);
  for (std::size_t p = 1; p <= n; ++p)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t m = 1; m <= n; ++m) psi.at(p, k, j, m) = Minv.at(p, j, m, k);
  if (!check_skew_inverse(R, psi)) throw NotSkewInvertible("solution failed verification");
  return psi;
}

GenMatrix::GenMatrix(std::size_t n, AlphabetPtr alphabet)
    : n_(n), alphabet_(std::move(alphabet)), e_(n * n, NCPoly(alphabet_)) {}

std::vector<std::string> matrix_names(const std::string& stem, std::size_t N) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) out.push_back(stem + "_" + std::to_string(i) + "^" + std::to_string(j));
  return out;
}

std::vector<std::string> vector_names(const std::string& stem, std::size_t N) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= N; ++i) out.push_back(stem + "_" + std::to_string(i));
  return out;
}

GenMatrix generator_matrix(const AlphabetPtr& alphabet, const std::string& stem, std::size_t N) {
  GenMatrix m(N, alphabet);
  auto names = matrix_names(stem, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = NCPoly::generator(alphabet, names[i * N + j]);
  return m;
}

GenMatrix column_vector(const AlphabetPtr& alphabet, const std::string& stem, std::size_t N) {
  GenMatrix m(N, alphabet);
  auto names = vector_names(stem, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = NCPoly::generator(alphabet, names[i]);
  return m;
}

GenMatrix apply_entrywise(const GenMatrix& m, const std::function<NCPoly(const NCPoly&)>& f) {
  GenMatrix r(m.size(), m.alphabet());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = f(m(i, j));
  return r;
}

LegExpr LegExpr::scalar(const Scalar& c) {
  LegExpr e;
  e.scalar_ = NCPoly::constant(nullptr, c);
  return e;
}

LegExpr LegExpr::numeric(const ScalarMatrix& m) {
  LegExpr e;
  e.n_ = m.leg_dim();
  std::size_t d = m.dim();
  e.e_.resize(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) e.e_[r * d + c] = NCPoly::constant(nullptr, m(r, c));
  return e;
}

LegExpr LegExpr::leg1(const GenMatrix& x) {
  LegExpr e;
  std::size_t n = e.n_ = x.size();
  e.e_.resize(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) e.e_[(i * n + k) * n * n + j * n + k] = x(i, j);
  return e;
}

LegExpr LegExpr::leg2(const GenMatrix& x) {
  LegExpr e;
  std::size_t n = e.n_ = x.size();
  e.e_.resize(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) e.e_[(i * n + k) * n * n + i * n + l] = x(k, l);
  return e;
}

LegExpr LegExpr::widened(std::size_t n) const {
  if (!is_scalar()) return *this;
  LegExpr e;
  e.n_ = n;
  std::size_t d = n * n;
  e.e_.resize(d * d);
  for (std::size_t k = 0; k < d; ++k) e.e_[k * d + k] = scalar_;
  return e;
}

namespace {

std::size_t common_dim(const LegExpr& a, const LegExpr& b) {
  if (!a.is_scalar() && !b.is_scalar() && a.leg_dim() != b.leg_dim())
    throw LegDimensionMismatch("leg dimensions " + std::to_string(a.leg_dim()) + " and " +
                               std::to_string(b.leg_dim()));
  return std::max(a.leg_dim(), b.leg_dim());
}

}  // namespace

LegExpr operator+(const LegExpr& a, const LegExpr& b) {
  std::size_t n = common_dim(a, b);
  if (n == 0) {
    LegExpr e;
    e.scalar_ = a.scalar_ + b.scalar_;
    return e;
  }
  LegExpr x = a.widened(n);
  LegExpr y = b.widened(n);
  for (std::size_t k = 0; k < x.e_.size(); ++k) x.e_[k] += y.e_[k];
  return x;
}

LegExpr LegExpr::operator-() const {
  LegExpr e = *this;
  e.scalar_ = -e.scalar_;
  for (auto& x : e.e_) x = -x;
  return e;
}

LegExpr operator-(const LegExpr& a, const LegExpr& b) { return a + (-b); }

LegExpr operator*(const LegExpr& a, const LegExpr& b) {
  std::size_t n = common_dim(a, b);
  if (n == 0) {
    LegExpr e;
    e.scalar_ = a.scalar_ * b.scalar_;
    return e;
  }
  if (a.is_scalar()) {
    LegExpr e = b;
    for (auto& x : e.e_)
      if (!x.is_zero()) x = a.scalar_ * x;
    return e;
  }
  if (b.is_scalar()) {
    LegExpr e = a;
    for (auto& x : e.e_)
      if (!x.is_zero()) x = x * b.scalar_;
    return e;
  }
  std::size_t d = n * n;
  LegExpr e;
  e.n_ = n;
  e.e_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const NCPoly& x = a.e_[i * d + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const NCPoly& y = b.e_[k * d + j];
        if (!y.is_zero()) e.e_[i * d + j] += x * y;
      }
    }
  return e;
}

std::vector<NCPoly> expand_matrix_relation(const LegExpr& lhs, const LegExpr& rhs) {
  LegExpr diff = lhs - rhs;
  if (diff.is_scalar()) throw LegDimensionMismatch("relation has no matrix factor");
  std::size_t d = diff.leg_dim() * diff.leg_dim();
  std::vector<NCPoly> out;
  out.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.push_back(diff.entry(r, c));
  return out;
}

}  // namespace ncd
