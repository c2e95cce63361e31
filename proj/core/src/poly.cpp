#include "ncdouble/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace ncd {

namespace {

struct ParamRegistry {
  std::mutex mutex;
  std::deque<std::string> names{"q", "h", "hbar"};
};

ParamRegistry& registry() {
  static ParamRegistry r;
  return r;
}

// greater-first ordering for term vectors
bool term_before(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

}  // namespace

const std::string& Param::name() const {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.at(index_);
}

std::optional<Param> Param::find(std::string_view name) {
  if (name == "ħ") return hbar();
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  for (std::size_t k = 0; k < r.names.size(); ++k)
    if (r.names[k] == name) return Param(static_cast<std::uint8_t>(k));
  return std::nullopt;
}

Param Param::declare(std::string_view name) {
  if (auto p = find(name)) return *p;
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (r.names.size() >= kMaxParams) throw InvalidParams("too many parameters declared");
  r.names.emplace_back(name);
  return Param(static_cast<std::uint8_t>(r.names.size() - 1));
}

std::size_t Param::count() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.size();
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, GaussianRational(c));
}

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly Poly::variable(Param p, unsigned power) {
  Monomial m;
  m.exp[p.index()] = static_cast<std::uint16_t>(power);
  return term(m, GaussianRational(1));
}

Poly Poly::term(Monomial m, GaussianRational c) {
  Poly r;
  if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  return r;
}

GaussianRational Poly::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_[0].second;
}

unsigned Poly::degree_in(Param p) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp[p.index()]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Monomial Poly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial r = terms_[0].first;
  for (const auto& [m, c] : terms_)
    for (std::size_t k = 0; k < kMaxParams; ++k) r.exp[k] = std::min(r.exp[k], m.exp[k]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void Poly::add_scaled(const Poly& o, const GaussianRational& c) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      out.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      GaussianRational s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  add_scaled(o, GaussianRational(1));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  add_scaled(o, GaussianRational(-1));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  std::sort(prod.begin(), prod.end(), term_before);
  for (auto& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

Poly Poly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

Poly Poly::div_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.first = t.first / m;
  return r;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (d.is_constant()) return scaled(d.constant_value().inverse());
  if (d.is_monomial()) {
    const auto& [dm, dc] = d.lead();
    for (const auto& t : terms_)
      if (!dm.divides(t.first)) throw std::logic_error("inexact polynomial division");
    return div_monomial(dm).scaled(dc.inverse());
  }
  Poly quotient;
  Poly rem = *this;
  const auto& [dm, dc] = d.lead();
  GaussianRational inv = dc.inverse();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.lead();
    if (!dm.divides(rm)) throw std::logic_error("inexact polynomial division");
    Poly t = Poly::term(rm / dm, rc * inv);
    rem -= t * d;
    quotient += t;
  }
  return quotient;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  if (lead().second.is_one()) return *this;
  return scaled(lead().second.inverse());
}

Poly Poly::coeff_in(Param p, unsigned k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exp[p.index()] != k) continue;
    Monomial mm = m;
    mm.exp[p.index()] = 0;
    r.terms_.emplace_back(mm, c);
  }
  // zeroing one coordinate keeps relative lex order among the selected terms
  return r;
}

namespace {

std::optional<Param> first_variable(const Poly& a, const Poly& b) {
  Monomial seen;
  for (const auto* p : {&a, &b})
    for (const auto& [m, c] : p->terms())
      for (std::size_t k = 0; k < kMaxParams; ++k) seen.exp[k] = std::max(seen.exp[k], m.exp[k]);
  for (std::size_t k = 0; k < kMaxParams; ++k)
    if (seen.exp[k]) return Param(static_cast<std::uint8_t>(k));
  return std::nullopt;
}

Poly content_in(const Poly& p, Param v) {
  Poly g;
  unsigned d = p.degree_in(v);
  for (unsigned k = 0; k <= d; ++k) {
    Poly c = p.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, Param v) {
  if (p.is_zero()) return p;
  Poly c = content_in(p, v);
  return c.is_one() ? p : p.exact_div(c);
}

// pseudo-remainder of a by b viewed as univariate polynomials in v
Poly pseudo_remainder(const Poly& a, const Poly& b, Param v) {
  unsigned n = b.degree_in(v);
  Poly lcb = b.coeff_in(v, n);
  Poly r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(v);
    if (dr < n) break;
    Poly lcr = r.coeff_in(v, dr);
    r = lcb * r - (lcr * b).times_monomial(Poly::variable(v, dr - n).lead().first);
  }
  return r;
}

Poly gcd_without_monomial_content(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant() || a.is_monomial() || b.is_monomial()) return Poly(1);
  if (a == b) return a.monic();
  auto var = first_variable(a, b);
  if (!var) return Poly(1);
  Param v = *var;
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly pa = a.exact_div(ca).monic();
  Poly pb = b.exact_div(cb).monic();
  Poly c = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(v) == 0) {
      pa = Poly(1);
      break;
    }
    Poly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    // numeric content is invisible to content_in (constants have gcd 1), so
    // scale it away too or the coefficients grow exponentially
    pb = primitive_part(r, v).monic();
  }
  return (c * primitive_part(pa, v)).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  Monomial ma = a.min_monomial();
  Monomial mb = b.min_monomial();
  Monomial mg;
  for (std::size_t k = 0; k < kMaxParams; ++k) mg.exp[k] = std::min(ma.exp[k], mb.exp[k]);
  Poly g = gcd_without_monomial_content(a.div_monomial(ma), b.div_monomial(mb));
  return g.times_monomial(mg).monic();
}

}  // namespace ncd
