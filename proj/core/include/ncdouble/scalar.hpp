#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "ncdouble/poly.hpp"

namespace ncd {

/// Exact element of Q(i)(params): a ratio of coprime polynomials whose
/// denominator has leading coefficient 1 in the lex order q > h > hbar.
/// Because the form is canonical, structural equality is field equality.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Canonicalizes num/den; throws DivisionByZero if den is zero.
  Scalar(Poly num, Poly den);

  static Scalar param(Param p) { return Scalar(Poly::variable(p)); }
  static Scalar q() { return param(Param::q()); }
  static Scalar h() { return param(Param::h()); }
  static Scalar hbar() { return param(Param::hbar()); }
  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar rational(long num, long den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant scalar.
  GaussianRational constant_value() const;
  bool involves(Param p) const { return num_.involves(p) || den_.involves(p); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(int e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Canonical text form, e.g. "q + 1", "(q^2 + 1)/q", "h/2", "i*h".
  std::string to_string() const;

 private:
  struct Canonical {};
  Scalar(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Poly num_;
  Poly den_;
};

using Assignment = std::map<Param, Scalar>;

/// Partial evaluation of the canonical form. Throws PoleAtSubstitution if the
/// denominator vanishes and InvalidParams if an assigned value mentions a
/// substituted parameter.
Scalar substitute(const Scalar& s, const Assignment& assignment);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Text for a polynomial with Gaussian-integer coefficients (used by printers).
std::string poly_to_string(const Poly& p);

}  // namespace ncd
