#include <random>

#include "doctest.h"
#include "ncdouble/catalog.hpp"
#include "ncdouble/text.hpp"

using namespace ncd;

namespace {

std::size_t offset_of(const std::string& text, const AlphabetPtr& a) {
  try {
    parse_expression(text, a);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("text") {
  TEST_CASE("expressions") {
    auto a = make_alphabet({"x", "y", "k_1^1", "k_1^2"});
    NCPoly x = NCPoly::generator(a, "x"), y = NCPoly::generator(a, "y");
    Scalar q = Scalar::q(), h = Scalar::h();
    CHECK(parse_expression("x*y - q*y*x - 1", a) == x * y - q * y * x - NCPoly::constant(a, 1));
    CHECK(parse_expression("x y", a) == x * y);
    CHECK(parse_expression("(q + 1) x y", a) == (q + 1) * x * y);
    CHECK(parse_expression("-h/2 x", a) == -(h / 2) * x);
    CHECK(parse_expression("x^3", a) == x * x * x);
    CHECK(parse_expression("q^-2 x", a) == q.pow(-2) * x);
    CHECK(parse_expression("(x + y)^2", a) == x * x + x * y + y * x + y * y);
    CHECK(parse_expression("i x", a) == Scalar::i() * x);
    CHECK(parse_expression("ħ^2", a) == NCPoly::constant(a, Scalar::hbar() * Scalar::hbar()));
    CHECK(parse_expression("k_1^2 k_1^1", a) ==
          NCPoly::generator(a, "k_1^2") * NCPoly::generator(a, "k_1^1"));
    CHECK(parse_scalar("(q^2 - 1)/(q - 1)") == q + 1);
  }

  TEST_CASE("generators win over parameters") {
    auto a = make_alphabet({"q", "x"});
    NCPoly q = NCPoly::generator(a, "q"), x = NCPoly::generator(a, "x");
    CHECK(parse_expression("q x - x q", a) == q * x - x * q);
  }

  TEST_CASE("canonical printing round trips") {
    std::mt19937_64 rng(17);
    for (const char* name : {"u2_calculus", "re_re", "dn_double"}) {
      CatalogParams p;
      p.N = 2;
      if (std::string(name) == "re_re") p.variant = "ii";
      DoubleSpec d = catalog_build(name, p).dbl.value();
      for (const auto& r : d.system().rules()) {
        NCPoly lhs = NCPoly::monomial(d.alphabet(), r.lhs);
        CHECK(parse_expression(r.rhs.to_string(), d.alphabet()) == r.rhs);
        CHECK(parse_expression(lhs.to_string(), d.alphabet()) == lhs);
      }
    }
    for (const auto& s : {Scalar::q() / (Scalar::q() + Scalar::h()), Scalar::rational(-3, 7) * Scalar::hbar(),
                          Scalar::i() * Scalar::h() + 1})
      CHECK(parse_scalar(s.to_string()) == s);
  }

  TEST_CASE("error offsets") {
    auto a = make_alphabet({"x", "y"});
    CHECK(offset_of("x*(y", a) == 3);
    CHECK(offset_of("x*y)", a) == 3);
    CHECK(offset_of("x + * y", a) == 4);
    CHECK(offset_of("", a) == 0);
    CHECK(offset_of("x^", a) == 2);
    CHECK(offset_of("x / y", a) == 2);
    CHECK_THROWS_AS(parse_expression("x*w", a), UnknownGenerator);
    CHECK_THROWS_AS(parse_expression("x/0", a), DivisionByZero);
  }

  TEST_CASE("two-leg expressions") {
    auto a = make_alphabet(matrix_names("k", 2));
    ScalarMatrix R = dj_hecke(2);
    std::map<std::string, ScalarMatrix> mats{{"R", R}, {"P", flip(2)}};
    LegExpr K1 = LegExpr::leg1(generator_matrix(a, "k", 2));
    LegExpr parsed = parse_leg_expression("R k[1] R k[1] - k[1] R k[1] R", a, mats, 2);
    LegExpr built = LegExpr::numeric(R) * K1 * LegExpr::numeric(R) * K1 - K1 * LegExpr::numeric(R) * K1 * LegExpr::numeric(R);
    CHECK(expand_matrix_relation(parsed, built) == expand_matrix_relation(built, built));
    // numeric parts stay exact
    LegExpr unit = parse_leg_expression("R R^-1 - 1", a, mats, 2);
    for (const auto& e : expand_matrix_relation(unit, LegExpr::scalar(Scalar())))
      CHECK(e.is_zero());
    LegExpr hecke = parse_leg_expression("(R - q)(R + 1/q)", a, mats, 2);
    for (const auto& e : expand_matrix_relation(hecke, LegExpr::scalar(Scalar()))) CHECK(e.is_zero());
    CHECK_THROWS_AS(parse_leg_expression("k[3]", a, mats, 2), SyntaxError);
    CHECK_THROWS_AS(parse_leg_expression("w[1]", a, mats, 2), UnknownGenerator);
    CHECK_THROWS_AS(parse_leg_expression("k[1]^-1", a, mats, 2), SyntaxError);
    CHECK_THROWS_AS(parse_leg_expression("R", a, {{"R", dj_hecke(3)}}, 2), LegDimensionMismatch);
  }
}
