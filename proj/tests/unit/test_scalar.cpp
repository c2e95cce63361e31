#include <memory>
#include <optional>
#include <random>

#include "doctest.h"
#include "ncdouble/scalar.hpp"

using namespace ncd;

namespace {

// Random expression in q and h, evaluated twice: symbolically through Scalar
// and directly in mpq at a rational point.
struct Expr {
  int op;  // 0 const, 1 q, 2 h, 3 +, 4 -, 5 *, 6 /
  long c = 0;
  std::shared_ptr<Expr> a, b;
};

std::shared_ptr<Expr> random_expr(std::mt19937_64& rng, int depth) {
  auto e = std::make_shared<Expr>();
  std::uniform_int_distribution<int> leaf(0, 2), node(3, 6);
  std::uniform_int_distribution<long> cd(-4, 4);
  if (depth == 0 || rng() % 4 == 0) {
    e->op = leaf(rng);
    e->c = cd(rng);
    return e;
  }
  e->op = node(rng);
  e->a = random_expr(rng, depth - 1);
  e->b = random_expr(rng, depth - 1);
  return e;
}

std::optional<Scalar> eval_symbolic(const Expr& e) {
  switch (e.op) {
    case 0: return Scalar(e.c);
    case 1: return Scalar::q();
    case 2: return Scalar::h();
  }
  auto a = eval_symbolic(*e.a), b = eval_symbolic(*e.b);
  if (!a || !b) return std::nullopt;
  switch (e.op) {
    case 3: return *a + *b;
    case 4: return *a - *b;
    case 5: return *a * *b;
  }
  if (b->is_zero()) return std::nullopt;
  return *a / *b;
}

std::optional<mpq_class> eval_direct(const Expr& e, const mpq_class& q, const mpq_class& h) {
  switch (e.op) {
    case 0: return mpq_class(e.c);
    case 1: return q;
    case 2: return h;
  }
  auto a = eval_direct(*e.a, q, h), b = eval_direct(*e.b, q, h);
  if (!a || !b) return std::nullopt;
  switch (e.op) {
    case 3: return mpq_class(*a + *b);
    case 4: return mpq_class(*a - *b);
    case 5: return mpq_class(*a * *b);
  }
  if (sgn(*b) == 0) return std::nullopt;
  return mpq_class(*a / *b);
}

Scalar rat(long n, long d) { return Scalar::rational(n, d); }

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("random expressions agree with direct rational evaluation") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto e = random_expr(rng, 4);
      auto s = eval_symbolic(*e);
      if (!s) continue;
      for (auto [qn, hn] : {std::pair{3L, 5L}, std::pair{-2L, 7L}}) {
        mpq_class q(qn, 11), h(hn, 13);
        q.canonicalize();
        h.canonicalize();
        auto direct = eval_direct(*e, q, h);
        if (!direct) continue;
        Scalar v = substitute(*s, {{Param::q(), Scalar(GaussianRational(q))}, {Param::h(), Scalar(GaussianRational(h))}});
        REQUIRE(v.is_constant());
        CHECK(v.constant_value() == GaussianRational(*direct));
        ++checked;
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("canonical form makes equality structural") {
    Scalar q = Scalar::q();
    CHECK((q * q - 1) / (q - 1) == q + 1);
    CHECK(((q * q - 1) / (q - 1)).to_string() == "q + 1");
    CHECK((q - q.inverse()) * q == q * q - 1);
    CHECK((Scalar(2) * q) / (Scalar(4) * q * q) == rat(1, 2) / q);
    CHECK(Scalar::h() / 2 == rat(1, 2) * Scalar::h());
    CHECK((q + 1) / (q + 1) == Scalar(1));
    // denominator is normalized to leading coefficient 1
    Scalar s = Scalar(1) / (Scalar(2) * q + 4);
    CHECK(s.denominator() == Poly(Poly::variable(Param::q()) + Poly(2)));
  }

  TEST_CASE("Gaussian coefficients") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK(Scalar(1) / i == -i);
    CHECK((i * Scalar::h()).to_string() == "i*h");
  }

  TEST_CASE("sums with shared denominators stay reduced") {
    Scalar q = Scalar::q(), h = Scalar::h();
    Scalar a = q / (q + h), b = h / (q + h);
    CHECK(a + b == Scalar(1));
    Scalar c = Scalar(1) / (q * (q - 1)) - Scalar(1) / (q * q - q);
    CHECK(c.is_zero());
    CHECK(Scalar(1) / (q - 1) - Scalar(1) / q == Scalar(1) / (q * q - q));
  }

  TEST_CASE("powers and q-integers") {
    Scalar q = Scalar::q();
    CHECK(q.pow(-2) == Scalar(1) / (q * q));
    CHECK(q.pow(0) == Scalar(1));
    Scalar qint = (q.pow(5) - 1) / (q - 1);
    CHECK(qint == Scalar(1) + q + q * q + q.pow(3) + q.pow(4));
  }

  TEST_CASE("substitution and poles") {
    Scalar q = Scalar::q();
    Scalar s = (q * q - 1) / (q - 1);
    // the removable singularity is gone after canonicalization
    CHECK(substitute(s, {{Param::q(), Scalar(1)}}) == Scalar(2));
    CHECK_THROWS_AS(substitute(Scalar(1) / (q - 1), {{Param::q(), Scalar(1)}}), PoleAtSubstitution);
    // partial substitution keeps the other parameters
    Scalar t = (q + Scalar::h()) / q;
    CHECK(substitute(t, {{Param::q(), Scalar(2)}}) == (Scalar(2) + Scalar::h()) / 2);
    CHECK(substitute(t, {{Param::q(), Scalar::h()}}) == Scalar(2));
    CHECK_THROWS_AS(substitute(t, {{Param::q(), q + 1}}), InvalidParams);
  }

  TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(Poly(1), Poly(0)), DivisionByZero);
  }

  TEST_CASE("printing") {
    Scalar q = Scalar::q();
    CHECK(Scalar().to_string() == "0");
    CHECK(Scalar(-3).to_string() == "-3");
    CHECK(rat(2, 6).to_string() == "1/3");
    CHECK((q * q + 1).to_string() == "q^2 + 1");
    CHECK(((q * q + 1) / q).to_string() == "(q^2 + 1)/q");
  }

  TEST_CASE("user parameters") {
    Param a = Param::declare("alpha");
    CHECK(Param::declare("alpha") == a);
    CHECK(Param::find("ħ") == Param::hbar());
    Scalar s = Scalar::param(a) * Scalar::q();
    CHECK(s.involves(a));
    CHECK(substitute(s, {{a, Scalar(3)}}) == Scalar(3) * Scalar::q());
  }
}
