#include <random>

#include "doctest.h"
#include "ncdouble/rewrite.hpp"

using namespace ncd;

namespace {

NCPoly power(const NCPoly& x, int n) {
  NCPoly r = NCPoly::constant(x.alphabet(), 1);
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

// [n]_q = 1 + q + ... + q^(n-1)
Scalar q_integer(int n) {
  Scalar s;
  for (int k = 0; k < n; ++k) s += Scalar::q().pow(k);
  return s;
}

struct Weyl {
  AlphabetPtr a = make_alphabet({"x", "d"});
  NCPoly x = NCPoly::generator(a, "x"), d = NCPoly::generator(a, "d");
  RewriteSystem sys = orient_relations(a, OrderSpec::deglex(*a), {d * x - x * d - NCPoly::constant(a, 1)});
};

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("orientation of the Weyl relation") {
    Weyl w;
    REQUIRE(w.sys.rules().size() == 1);
    CHECK(w.sys.rules()[0].lhs == Word{1, 0});
    CHECK(w.sys.rules()[0].rhs == w.x * w.d + NCPoly::constant(w.a, 1));
  }

  TEST_CASE("Weyl normal ordering: d x^n = x^n d + n x^(n-1)") {
    Weyl w;
    for (int n = 1; n <= 8; ++n) {
      NCPoly expected = power(w.x, n) * w.d + Scalar(n) * power(w.x, n - 1);
      CHECK(normalize(w.sys, w.d * power(w.x, n)) == expected);
    }
    // d^2 x^2 = x^2 d^2 + 4 x d + 2
    CHECK(normalize(w.sys, w.d * w.d * w.x * w.x) ==
          w.x * w.x * w.d * w.d + Scalar(4) * w.x * w.d + NCPoly::constant(w.a, 2));
  }

  TEST_CASE("Jackson normal ordering: y x^n = q^n x^n y + [n]_q x^(n-1)") {
    auto a = make_alphabet({"x", "y"});
    NCPoly x = NCPoly::generator(a, "x"), y = NCPoly::generator(a, "y");
    auto sys = orient_relations(a, OrderSpec::deglex(*a), {y * x - Scalar::q() * x * y - NCPoly::constant(a, 1)});
    for (int n = 1; n <= 6; ++n) {
      NCPoly expected = Scalar::q().pow(n) * power(x, n) * y + q_integer(n) * power(x, n - 1);
      CHECK(normalize(sys, y * power(x, n)) == expected);
    }
  }

  TEST_CASE("strategies reach the same normal form") {
    Weyl w;
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      NCPoly p(w.a);
      for (int k = 0; k < 3; ++k) {
        Word word;
        for (int len = static_cast<int>(rng() % 6); len > 0; --len) word.push_back(static_cast<Letter>(rng() % 2));
        p.add_term(word, Scalar(static_cast<long>(rng() % 5) - 2));
      }
      NormalizeOptions left, random;
      random.strategy = Strategy::RandomPosition;
      random.seed = rng();
      CHECK(normalize(w.sys, p, left) == normalize(w.sys, p, random));
    }
  }

  TEST_CASE("fuel") {
    Weyl w;
    NormalizeOptions o;
    o.fuel = 5;
    CHECK_THROWS_AS(normalize(w.sys, w.d * power(w.x, 10), o), FuelExhausted);
    NormalizeStats stats;
    normalize(w.sys, w.d * w.x, {}, &stats);
    CHECK(stats.steps == 1);
  }

  TEST_CASE("rule validation") {
    Weyl w;
    auto order = OrderSpec::deglex(*w.a);
    // x d -> d x raises the order
    CHECK_THROWS_AS(RewriteSystem(w.a, order, {{Word{0, 1}, w.d * w.x}}), RuleConstructionError);
    // duplicate left sides
    CHECK_THROWS_AS(RewriteSystem(w.a, order, {{Word{1, 0}, w.x * w.d}, {Word{1, 0}, w.x * w.d + NCPoly::constant(w.a, 1)}}),
                    RuleConstructionError);
    // 1 = 0
    CHECK_THROWS_AS(orient_relations(w.a, order, {NCPoly::constant(w.a, 1)}), RuleConstructionError);
  }

  TEST_CASE("order with colors counts inversions first") {
    std::vector<Generator> gens{{"b", Color::B}, {"a", Color::A}};
    Alphabet al(gens);
    auto order = OrderSpec::deglex(al);
    CHECK(order.inversions(Word{1, 0}) == 1);
    CHECK(order.inversions(Word{0, 1}) == 0);
    // a b is above b b b: inversions dominate degree
    CHECK(order.less(Word{0, 0, 0}, Word{1, 0}));
  }

  TEST_CASE("critical pairs") {
    Weyl w;
    CHECK(critical_pairs(w.sys, 3).confluent());

    // x x -> y, x y -> 0: x x x gives y x versus 0, x x y gives y y versus 0
    auto a = make_alphabet({"y", "x"});
    NCPoly x = NCPoly::generator(a, "x"), y = NCPoly::generator(a, "y");
    auto order = OrderSpec::deglex(*a);
    RewriteSystem sys(a, order, {{Word{1, 1}, y}, {Word{1, 0}, NCPoly(a)}});
    auto rep = critical_pairs(sys, 3);
    CHECK(rep.overlaps_examined == 2);
    REQUIRE(rep.unresolved.size() == 2);
    for (const auto& u : rep.unresolved) {
      NCPoly expected = u.overlap == Word{1, 1, 1} ? y * x : y * y;
      CHECK((u.difference == expected || u.difference == -expected));
    }

    auto done = complete(sys, 3, 4);
    CHECK(done.completed);
    CHECK(done.rules_added == 2);
    CHECK(critical_pairs(done.system, 4).confluent());
    CHECK(normalize(done.system, y * x).is_zero());
    CHECK(normalize(done.system, x * x * x).is_zero());
  }
}
