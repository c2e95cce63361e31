#include "doctest.h"
#include "ncdouble/double.hpp"

using namespace ncd;

namespace {

Presentation free_on(std::vector<std::string> names) {
  Presentation p;
  p.alphabet = make_alphabet(names);
  return p;
}

Presentation with_zero_counit(Presentation p) {
  p.counit.emplace();
  for (const auto& g : p.alphabet->generators()) (*p.counit)[g.name] = Scalar();
  return p;
}

// d x = x d + 1
DoubleSpec weyl() {
  Presentation A = with_zero_counit(free_on({"d"})), B = free_on({"x"});
  AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
  NCPoly d = NCPoly::generator(all, "d"), x = NCPoly::generator(all, "x");
  return DoubleSpec(A, B, {d * x - x * d - NCPoly::constant(all, 1)});
}

NCPoly power(const NCPoly& x, int n) {
  NCPoly r = NCPoly::constant(x.alphabet(), 1);
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

}  // namespace

TEST_SUITE("double") {
  TEST_CASE("combined alphabet puts B first") {
    DoubleSpec w = weyl();
    const Alphabet& al = *w.alphabet();
    REQUIRE(al.size() == 2);
    CHECK(al[0].name == "x");
    CHECK(al[0].color == Color::B);
    CHECK(al[1].color == Color::A);
    CHECK(w.rule("d", "x").rhs == w.gen("x") * w.gen("d") + NCPoly::constant(w.alphabet(), 1));
    CHECK(w.all_relations().size() == 1);
  }

  TEST_CASE("action of the Weyl double") {
    DoubleSpec w = weyl();
    NCPoly x = w.gen("x"), d = w.gen("d");
    for (int n = 0; n <= 6; ++n) {
      NCPoly got = act(w, d, power(x, n));
      NCPoly expected = n == 0 ? NCPoly(w.B().alphabet) : Scalar(n) * power(NCPoly::generator(w.B().alphabet, "x"), n - 1);
      CHECK(got == expected);
    }
    // d^2 ▷ x^4 = 12 x^2
    CHECK(act(w, d * d, power(x, 4)) == Scalar(12) * power(NCPoly::generator(w.B().alphabet, "x"), 2));
    // 1 ▷ b = b
    CHECK(act(w, NCPoly::constant(w.alphabet(), 1), x * x) == w.lift(x * x).with_alphabet(w.B().alphabet));
  }

  TEST_CASE("operator matrices") {
    DoubleSpec w = weyl();
    OperatorMatrix m = op_matrix(w, w.gen("d"), 3);
    REQUIRE(m.basis.size() == 4);
    CHECK(m.basis_strings() == std::vector<std::string>{"1", "x", "x x", "x x x"});
    // column c is the image of basis word c
    for (std::size_t c = 1; c < 4; ++c)
      for (std::size_t r = 0; r < 4; ++r) CHECK(m.entries(r, c) == Scalar(r + 1 == c ? static_cast<long>(c) : 0));
    OperatorMatrix one = op_matrix(w, NCPoly::constant(w.alphabet(), 1), 3);
    CHECK(one.entries == ScalarMatrix::identity(4));
    CHECK(verify_representation(w, w.gen("d"), w.gen("d"), 3));
  }

  TEST_CASE("consistency of the Weyl double") {
    CHECK(check_sigma_consistency(weyl(), 3).confluent());
  }

  TEST_CASE("degree-raising permutation rules are refused") {
    // a x = x a + x x would let images leave any truncation
    Presentation A = with_zero_counit(free_on({"a"})), B = free_on({"x"});
    AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
    NCPoly a = NCPoly::generator(all, "a"), x = NCPoly::generator(all, "x");
    CHECK_THROWS_AS(DoubleSpec(A, B, {a * x - x * a - x * x}), RuleConstructionError);
  }

  TEST_CASE("non-confluent B is refused") {
    Presentation A = with_zero_counit(free_on({"a"}));
    Presentation B = free_on({"y", "x"});
    NCPoly x = NCPoly::generator(B.alphabet, "x"), y = NCPoly::generator(B.alphabet, "y");
    B.relations = {x * x - y, x * y};
    AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
    NCPoly a = NCPoly::generator(all, "a");
    DoubleSpec d(A, B, {a * NCPoly::generator(all, "x") - NCPoly::generator(all, "x") * a,
                        a * NCPoly::generator(all, "y") - NCPoly::generator(all, "y") * a});
    CHECK_THROWS_AS(op_matrix(d, d.gen("a"), 2), NotConfluent);
  }

  TEST_CASE("counits") {
    Presentation A = free_on({"d"});
    Presentation B = free_on({"x"});
    AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
    NCPoly d = NCPoly::generator(all, "d"), x = NCPoly::generator(all, "x");
    DoubleSpec w(A, B, {d * x - x * d - NCPoly::constant(all, 1)});
    CHECK_THROWS_AS(act(w, w.gen("d"), w.gen("x")), MissingCounit);

    Presentation partial = free_on({"u", "v"});
    partial.counit = std::map<std::string, Scalar>{{"u", Scalar(1)}};
    CHECK_THROWS_AS(validate_counit(partial), MissingCounit);

    // ε(u v - v u - u) = -1 is not zero
    Presentation lie = free_on({"u", "v"});
    NCPoly u = NCPoly::generator(lie.alphabet, "u"), v = NCPoly::generator(lie.alphabet, "v");
    lie.relations = {u * v - v * u - u};
    lie.counit = std::map<std::string, Scalar>{{"u", Scalar(1)}, {"v", Scalar(0)}};
    CHECK_THROWS_AS(validate_counit(lie), InvalidParams);
    lie.counit = std::map<std::string, Scalar>{{"u", Scalar(0)}, {"v", Scalar(5)}};
    CHECK_NOTHROW(validate_counit(lie));
    CHECK(counit_of_word(*lie.counit, *lie.alphabet, Word{1, 1}) == Scalar(25));
  }

  TEST_CASE("specialization re-orients") {
    // y x = q x y + 1 at q = 1 is the Weyl double
    Presentation A = with_zero_counit(free_on({"y"})), B = free_on({"x"});
    AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
    NCPoly y = NCPoly::generator(all, "y"), x = NCPoly::generator(all, "x");
    DoubleSpec j(A, B, {y * x - Scalar::q() * x * y - NCPoly::constant(all, 1)});
    DoubleSpec one = specialize(j, {{Param::q(), Scalar(1)}});
    NCPoly xb = NCPoly::generator(one.B().alphabet, "x");
    CHECK(act(one, one.gen("y"), power(one.gen("x"), 3)) == Scalar(3) * xb * xb);
    CHECK(act(j, j.gen("y"), power(j.gen("x"), 3)) ==
          (Scalar(1) + Scalar::q() + Scalar::q() * Scalar::q()) * NCPoly::generator(j.B().alphabet, "x") *
              NCPoly::generator(j.B().alphabet, "x"));
  }

  TEST_CASE("plain presentations") {
    Presentation p = free_on({"x", "y"});
    NCPoly x = NCPoly::generator(p.alphabet, "x"), y = NCPoly::generator(p.alphabet, "y");
    p.relations = {y * x - x * y};
    RewriteSystem sys = present(p);
    CHECK(normalize(sys, y * y * x) == x * y * y);
  }
}
