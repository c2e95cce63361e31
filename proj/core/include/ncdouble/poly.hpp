#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncdouble/gaussian.hpp"

namespace ncd {

inline constexpr std::size_t kMaxParams = 8;

/// Formal parameter of the coefficient field. The registry is process wide;
/// q, h and hbar are always present with indices 0, 1, 2, which also fixes the
/// lexicographic monomial order q > h > hbar.
class Param {
 public:
  constexpr Param() = default;
  constexpr explicit Param(std::uint8_t index) : index_(index) {}

  std::uint8_t index() const { return index_; }
  const std::string& name() const;

  /// Looks up a declared parameter by name ("ħ" is accepted for hbar).
  static std::optional<Param> find(std::string_view name);
  /// Returns the existing parameter or registers a new one.
  static Param declare(std::string_view name);
  static std::size_t count();

  static Param q() { return Param(0); }
  static Param h() { return Param(1); }
  static Param hbar() { return Param(2); }

  friend constexpr bool operator==(Param a, Param b) { return a.index_ == b.index_; }
  friend constexpr auto operator<=>(Param a, Param b) { return a.index_ <=> b.index_; }

 private:
  std::uint8_t index_ = 0;
};

struct Monomial {
  std::array<std::uint16_t, kMaxParams> exp{};

  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t k = 0; k < kMaxParams; ++k)
      if (exp[k] > o.exp[k]) return false;
    return true;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (std::size_t k = 0; k < kMaxParams; ++k) a.exp[k] = static_cast<std::uint16_t>(a.exp[k] + b.exp[k]);
    return a;
  }
  // caller guarantees b divides a
  friend Monomial operator/(Monomial a, const Monomial& b) {
    for (std::size_t k = 0; k < kMaxParams; ++k) a.exp[k] = static_cast<std::uint16_t>(a.exp[k] - b.exp[k]);
    return a;
  }
  // lexicographic, parameter 0 most significant
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Commutative polynomial in the parameters with Q(i) coefficients. Terms are
/// kept sorted by decreasing lexicographic monomial order with no zero
/// coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(GaussianRational c);
  static Poly variable(Param p, unsigned power = 1);
  static Poly term(Monomial m, GaussianRational c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }
  /// Constant term value if the polynomial is constant.
  GaussianRational constant_value() const;

  const Term& lead() const { return terms_.front(); }
  unsigned degree_in(Param p) const;
  unsigned total_degree() const;
  bool involves(Param p) const { return degree_in(p) > 0; }
  /// Componentwise minimum exponent over all terms.
  Monomial min_monomial() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const GaussianRational& c) const;
  Poly times_monomial(const Monomial& m) const;
  /// Divides every exponent vector by m (m must divide all of them).
  Poly div_monomial(const Monomial& m) const;
  /// Exact quotient; throws std::logic_error if d does not divide *this.
  Poly exact_div(const Poly& d) const;
  /// Scales so that the leading coefficient is 1.
  Poly monic() const;

  /// Coefficient of p^k, as a polynomial not involving p.
  Poly coeff_in(Param p, unsigned k) const;

 private:
  void add_scaled(const Poly& o, const GaussianRational& c);

  std::vector<Term> terms_;
};

/// Monic greatest common divisor (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace ncd
