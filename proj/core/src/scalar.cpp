#include "ncdouble/scalar.hpp"

#include <sstream>

namespace ncd {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  return Scalar(GaussianRational(mpq_class(num, den)));
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(den_.constant_value().inverse());
      den_ = Poly(1);
    }
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const GaussianRational& lc = den_.lead().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GaussianRational Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant scalar " + to_string());
  return num_.constant_value();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Canonical{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // Any common factor of the new numerator and denominator divides
  // g = gcd(den, o.den) because both inputs are reduced.
  Poly g = den_ == o.den_ ? den_ : gcd(den_, o.den_);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    Poly od = o.den_.exact_div(g);
    num_ = num_ * od + o.num_ * den_.exact_div(g);
    den_ = den_ * od;
  }
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  if (!g.is_constant()) {
    Poly c = gcd(num_, g);
    if (!c.is_one()) {
      num_ = num_.exact_div(c);
      den_ = den_.exact_div(c);
    }
  }
  const GaussianRational& lc = den_.lead().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = (g1.is_one() ? num_ : num_.exact_div(g1)) * (g2.is_one() ? o.num_ : o.num_.exact_div(g2));
  Poly d = (g2.is_one() ? den_ : den_.exact_div(g2)) * (g1.is_one() ? o.den_ : o.den_.exact_div(g1));
  num_ = std::move(n);
  den_ = std::move(d);
  const GaussianRational& lc = den_.lead().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division of " + to_string() + " by zero");
  return *this *= o.inverse();
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1);
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

Scalar eval_poly(const Poly& p, const Assignment& a) {
  Scalar acc;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    Scalar t(c);
    for (const auto& [param, value] : a) {
      auto e = rest.exp[param.index()];
      if (!e) continue;
      rest.exp[param.index()] = 0;
      t *= value.pow(e);
    }
    if (!rest.is_one()) t *= Scalar(Poly::term(rest, GaussianRational(1)));
    acc += t;
  }
  return acc;
}

mpz_class lcm_denominators(const Poly& p, mpz_class acc) {
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return acc;
}

mpz_class gcd_numerators(const Poly& p, mpz_class acc) {
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.re().get_num_mpz_t());
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.im().get_num_mpz_t());
  }
  return acc;
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (std::size_t k = 0; k < kMaxParams; ++k) {
    if (!m.exp[k]) continue;
    if (!s.empty()) s += '*';
    s += Param(static_cast<std::uint8_t>(k)).name();
    if (m.exp[k] > 1) s += '^' + std::to_string(m.exp[k]);
  }
  return s;
}

// coefficient text, possibly with a leading '-'
std::string coefficient_string(const GaussianRational& c, bool standalone) {
  auto num = [](const mpq_class& x) { return x.get_str(); };
  if (c.is_real()) {
    if (standalone) return num(c.re());
    if (c.re() == 1) return "";
    if (c.re() == -1) return "-";
    return num(c.re()) + "*";
  }
  if (sgn(c.re()) == 0) {
    std::string s;
    if (c.im() == 1) s = "i";
    else if (c.im() == -1) s = "-i";
    else s = num(c.im()) + "*i";
    return standalone ? s : s + "*";
  }
  std::string s = "(" + num(c.re()) + (sgn(c.im()) < 0 ? " - " : " + ");
  mpq_class im = abs(c.im());
  s += (im == 1 ? std::string("i") : num(im) + "*i") + ")";
  return standalone ? s : s + "*";
}

}  // namespace

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string t = m.is_one() ? coefficient_string(c, true) : coefficient_string(c, false) + monomial_string(m);
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) {
    // integer-coefficient form when possible, else "(...)/k"
    mpz_class l = lcm_denominators(num_, 1);
    if (l == 1) return poly_to_string(num_);
  }
  mpz_class l = lcm_denominators(den_, lcm_denominators(num_, 1));
  Poly n = num_.scaled(GaussianRational(mpq_class(l)));
  Poly d = den_.scaled(GaussianRational(mpq_class(l)));
  mpz_class g = gcd_numerators(d, gcd_numerators(n, 0));
  if (g != 1) {
    GaussianRational inv(mpq_class(1, 1) / mpq_class(g));
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  std::string ns = poly_to_string(n);
  std::string ds = poly_to_string(d);
  if (n.terms().size() > 1) ns = "(" + ns + ")";
  bool simple_den = d.terms().size() == 1 &&
                    (d.lead().first.is_one() ||
                     (d.lead().second.is_one() && monomial_string(d.lead().first).find('*') == std::string::npos));
  if (!simple_den) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

Scalar substitute(const Scalar& s, const Assignment& assignment) {
  for (const auto& [p, v] : assignment)
    for (const auto& [p2, v2] : assignment)
      if (v.involves(p2))
        throw InvalidParams("substituted value " + v.to_string() + " mentions substituted parameter " + p2.name());
  Scalar den = eval_poly(s.denominator(), assignment);
  if (den.is_zero()) throw PoleAtSubstitution(s.to_string());
  return eval_poly(s.numerator(), assignment) / den;
}

}  // namespace ncd
