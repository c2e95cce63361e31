#include "ncdouble/catalog.hpp"

namespace ncd {

namespace {

struct TableEntry {
  const char* d;
  const char* b;
  int sign;           // coefficient of h/2
  const char* image;  // derivative on the right side
  bool unit;          // right side carries + 1
};

// [d, b] = sign * h/2 * image (+ 1)
constexpr TableEntry kTable[16] = {
    {"dt", "t", 1, "dt", true},   {"dt", "x", -1, "dx", false}, {"dt", "y", -1, "dy", false}, {"dt", "z", -1, "dz", false},
    {"dx", "t", 1, "dx", false},  {"dx", "x", 1, "dt", true},   {"dx", "y", 1, "dz", false},  {"dx", "z", -1, "dy", false},
    {"dy", "t", 1, "dy", false},  {"dy", "x", -1, "dz", false}, {"dy", "y", 1, "dt", true},   {"dy", "z", 1, "dx", false},
    {"dz", "t", 1, "dz", false},  {"dz", "x", 1, "dy", false},  {"dz", "y", -1, "dx", false}, {"dz", "z", 1, "dt", true},
};

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

}  // namespace

DoubleSpec u2_calculus(bool corrupted) {
  Scalar h = Scalar::h();
  Presentation B;
  B.alphabet = make_alphabet({"t", "x", "y", "z"});
  {
    auto g = [&](const char* n) { return NCPoly::generator(B.alphabet, n); };
    B.relations = {commutator(g("t"), g("x")),           commutator(g("t"), g("y")),
                   commutator(g("t"), g("z")),           commutator(g("x"), g("y")) - h * g("z"),
                   commutator(g("y"), g("z")) - h * g("x"), commutator(g("z"), g("x")) - h * g("y")};
  }
  Presentation A;
  A.alphabet = make_alphabet({"dt", "dx", "dy", "dz"});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      A.relations.push_back(commutator(NCPoly::generator(A.alphabet, static_cast<Letter>(i)),
                                       NCPoly::generator(A.alphabet, static_cast<Letter>(j))));
  A.counit.emplace();
  for (const auto& g : A.alphabet->generators()) (*A.counit)[g.name] = Scalar();

  AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
  std::vector<NCPoly> perm;
  for (const auto& e : kTable) {
    int sign = e.sign;
    if (corrupted && std::string(e.d) == "dx" && std::string(e.b) == "y") sign = -sign;
    NCPoly rhs = (h * Scalar::rational(sign, 2)) * NCPoly::generator(all, e.image);
    if (e.unit) rhs += NCPoly::constant(all, 1);
    perm.push_back(commutator(NCPoly::generator(all, e.d), NCPoly::generator(all, e.b)) - rhs);
  }
  return DoubleSpec(std::move(A), std::move(B), std::move(perm));
}

NCPoly schrodinger_apply(const DoubleSpec& u2, const Scalar& a, const Scalar& b, const NCPoly& psi) {
  auto g = [&](const char* n) { return u2.gen(n); };
  NCPoly op = a * g("dt") + b * (g("dx") * g("dx") + g("dy") * g("dy") + g("dz") * g("dz"));
  return act(u2, op, psi);
}

std::vector<Check> u2_structures(int cutoff) {
  if (cutoff < 3) throw InvalidParams("cutoff must be at least 3");
  DoubleSpec d = u2_calculus();
  const RewriteSystem& sys = d.system();
  const AlphabetPtr& all = d.alphabet();
  Scalar h = Scalar::h();
  auto g = [&](const char* n) { return d.gen(n); };
  std::vector<Check> out;

  // (a) dt + 2/h makes every table entry homogeneous
  NCPoly dtilde = g("dt") + NCPoly::constant(all, Scalar(2) / h);
  {
    NCPoly lhs = normalize(sys, commutator(dtilde, g("t")) - (h / Scalar(2)) * dtilde);
    bool ok = lhs.is_zero();
    std::string detail = ok ? "" : "[dtilde, t] - (h/2) dtilde = " + lhs.to_string();
    for (const char* dn : {"dt", "dx", "dy", "dz"}) {
      NCPoly dd = std::string(dn) == "dt" ? dtilde : g(dn);
      for (const char* bn : {"t", "x", "y", "z"}) {
        NCPoly c = normalize(sys, commutator(dd, g(bn)));
        // rewrite dt as dtilde - 2/h and require no constant term
        Scalar constant = c.coefficient(Word{}) - c.coefficient(Word{all->at("dt")}) * (Scalar(2) / h);
        bool linear = true;
        for (const auto& [w, s] : c.terms())
          if (w.size() > 1 || (w.size() == 1 && (*all)[w[0]].color != Color::A)) linear = false;
        if (!constant.is_zero() || !linear) {
          ok = false;
          detail = std::string("[") + dn + ", " + bn + "] is not homogeneous in dtilde";
        }
      }
    }
    NCPoly nont = normalize(sys, commutator(dtilde, g("x")) - commutator(g("dt"), g("x")));
    if (!nont.is_zero()) ok = false;
    out.push_back({"dtilde homogenizes the table", ok, detail});
  }

  // (b) x^2 + y^2 + z^2 + hbar^2 is central in B
  {
    NCPoly rho = g("x") * g("x") + g("y") * g("y") + g("z") * g("z") +
                 NCPoly::constant(all, Scalar::hbar() * Scalar::hbar());
    bool ok = true;
    std::string detail;
    for (const char* bn : {"t", "x", "y", "z"}) {
      NCPoly c = normalize(d.b_system(), commutator(rho, g(bn)));
      if (!c.is_zero()) {
        ok = false;
        detail = std::string("[rho, ") + bn + "] = " + c.to_string();
      }
    }
    out.push_back({"x^2 + y^2 + z^2 + hbar^2 is central", ok, detail});
  }

  // (c) Lie-type presentation: quadratic left sides, right sides of degree <= 1
  {
    bool ok = sys.rules().size() == 28;
    std::string detail = "rules: " + std::to_string(sys.rules().size());
    for (const auto& r : sys.rules()) {
      if (r.lhs.size() != 2) {
        ok = false;
        continue;
      }
      // ab -> ba + (terms of degree <= 1)
      Word swapped{r.lhs[1], r.lhs[0]};
      NCPoly rest = r.rhs;
      rest.add_term(swapped, -Scalar(1));
      if (rest.degree() > 1) ok = false;
    }
    out.push_back({"8-generator Lie-type presentation", ok, detail});
  }

  // confluence up to the cutoff
  {
    auto rep = critical_pairs(sys, static_cast<std::size_t>(cutoff));
    out.push_back({"u(2) double is locally confluent", rep.confluent(),
                   std::to_string(rep.overlaps_examined) + " overlaps"});
  }
  return out;
}

}  // namespace ncd
