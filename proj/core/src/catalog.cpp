#include "ncdouble/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>

namespace ncd {

namespace {

Scalar kron(std::size_t a, std::size_t b) { return Scalar(a == b ? 1 : 0); }

std::vector<NCPoly> nonzero(std::vector<NCPoly> v) {
  std::vector<NCPoly> out;
  for (auto& p : v)
    if (!p.is_zero()) out.push_back(std::move(p));
  return out;
}

std::vector<NCPoly> commuting(const AlphabetPtr& a) {
  std::vector<NCPoly> out;
  for (std::size_t i = 0; i < a->size(); ++i)
    for (std::size_t j = i + 1; j < a->size(); ++j) {
      auto x = NCPoly::generator(a, static_cast<Letter>(i));
      auto y = NCPoly::generator(a, static_cast<Letter>(j));
      out.push_back(x * y - y * x);
    }
  return out;
}

std::map<std::string, Scalar> constant_counit(const Alphabet& a, const Scalar& v) {
  std::map<std::string, Scalar> c;
  for (const auto& g : a.generators()) c[g.name] = v;
  return c;
}

std::map<std::string, Scalar> diagonal_counit(const std::string& stem, std::size_t N, const Scalar& v) {
  std::map<std::string, Scalar> c;
  auto names = matrix_names(stem, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c[names[i * N + j]] = i == j ? v : Scalar();
  return c;
}

LegExpr num(const ScalarMatrix& m) { return LegExpr::numeric(m); }
LegExpr sc(const Scalar& s) { return LegExpr::scalar(s); }

std::vector<NCPoly> rtt_relations(const ScalarMatrix& R, const GenMatrix& T) {
  auto T1 = LegExpr::leg1(T), T2 = LegExpr::leg2(T);
  return nonzero(expand_matrix_relation(num(R) * T1 * T2, T1 * T2 * num(R)));
}

std::vector<NCPoly> re_relations(const ScalarMatrix& R, const GenMatrix& L) {
  auto L1 = LegExpr::leg1(L);
  auto r = num(R);
  return nonzero(expand_matrix_relation(r * L1 * r * L1, L1 * r * L1 * r));
}

LegExpr mre_expr(const ScalarMatrix& R, const GenMatrix& K) {
  auto K1 = LegExpr::leg1(K);
  auto r = num(R);
  return r * K1 * r * K1 - K1 * r * K1 * r - sc(Scalar::h()) * (r * K1 - K1 * r);
}

std::vector<NCPoly> mre_relations(const ScalarMatrix& R, const GenMatrix& K) {
  return nonzero(expand_matrix_relation(mre_expr(R, K), sc(Scalar())));
}

// L1 L2 - L2 L1 = c (L1 P - L2 P)
std::vector<NCPoly> ugl_relations(const GenMatrix& L, const Scalar& c) {
  std::size_t N = L.size();
  auto L1 = LegExpr::leg1(L), L2 = LegExpr::leg2(L);
  auto P = num(flip(N));
  return nonzero(expand_matrix_relation(L1 * L2 - L2 * L1, sc(c) * (L1 * P - L2 * P)));
}

// D relations shared by the two braided derivative doubles
std::vector<NCPoly> dinv_relations(const ScalarMatrix& Rinv, const GenMatrix& D) {
  auto D1 = LegExpr::leg1(D);
  auto ri = num(Rinv);
  return nonzero(expand_matrix_relation(ri * D1 * ri * D1, D1 * ri * D1 * ri));
}

Presentation make_presentation(const std::vector<std::string>& names,
                               const std::function<std::vector<NCPoly>(const AlphabetPtr&)>& relations,
                               std::optional<std::map<std::string, Scalar>> counit = std::nullopt) {
  Presentation p;
  p.alphabet = make_alphabet(names);
  p.relations = relations(p.alphabet);
  p.counit = std::move(counit);
  return p;
}

std::vector<std::string> upper_names(const std::string& stem, std::size_t N) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= N; ++i) out.push_back(stem + "^" + std::to_string(i));
  return out;
}

using PermBuilder = std::function<std::vector<NCPoly>(const AlphabetPtr&)>;

DoubleSpec make_double(Presentation A, Presentation B, const PermBuilder& perm, bool diagonal_first = true) {
  AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
  DoubleOptions options;
  if (diagonal_first) options.precedence = matrix_precedence(*all);
  return DoubleSpec(std::move(A), std::move(B), nonzero(perm(all)), std::move(options));
}

const std::string& require_variant(const CatalogParams& p, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (p.variant == a) return p.variant;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + (*a ? a : "(none)");
  throw InvalidParams("variant '" + p.variant + "' not one of: " + list);
}

void require_n(const CatalogParams& p) {
  if (p.N == 0) throw InvalidParams("N must be at least 1");
}

// --- entries -------------------------------------------------------------

DoubleSpec build_hw(const CatalogParams& p) {
  if (p.m == 0) throw InvalidParams("m must be at least 1");
  std::size_t m = p.m;
  auto A = make_presentation(upper_names("x", m), commuting);
  A.counit = constant_counit(*A.alphabet, Scalar());
  auto B = make_presentation(vector_names("x", m), commuting);
  return make_double(std::move(A), std::move(B), [m](const AlphabetPtr& all) {
    std::vector<NCPoly> out;
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t i = 1; i <= m; ++i) {
        auto up = NCPoly::generator(all, "x^" + std::to_string(j));
        auto lo = NCPoly::generator(all, "x_" + std::to_string(i));
        out.push_back(up * lo - lo * up - NCPoly::constant(all, kron(i, j)));
      }
    return out;
  });
}

DoubleSpec build_jackson() {
  auto A = make_presentation({"y"}, [](const AlphabetPtr&) { return std::vector<NCPoly>{}; });
  A.counit = constant_counit(*A.alphabet, Scalar());
  auto B = make_presentation({"x"}, [](const AlphabetPtr&) { return std::vector<NCPoly>{}; });
  return make_double(std::move(A), std::move(B), [](const AlphabetPtr& all) {
    auto x = NCPoly::generator(all, "x"), y = NCPoly::generator(all, "y");
    return std::vector<NCPoly>{y * x - Scalar::q() * x * y - NCPoly::constant(all, 1)};
  });
}

DoubleSpec build_matrix_hw(const CatalogParams& p) {
  require_n(p);
  std::size_t N = p.N;
  auto A = make_presentation(matrix_names("d", N), commuting);
  A.counit = constant_counit(*A.alphabet, Scalar());
  auto B = make_presentation(matrix_names("m", N), commuting);
  return make_double(std::move(A), std::move(B), [N](const AlphabetPtr& all) {
    auto D1 = LegExpr::leg1(generator_matrix(all, "d", N));
    auto M2 = LegExpr::leg2(generator_matrix(all, "m", N));
    return expand_matrix_relation(D1 * M2, M2 * D1 + num(flip(N)));
  });
}

DoubleSpec build_ugl_tv(const CatalogParams& p) {
  require_n(p);
  std::size_t N = p.N;
  auto A = make_presentation(matrix_names("l", N),
                             [N](const AlphabetPtr& a) { return ugl_relations(generator_matrix(a, "l", N), 1); });
  A.counit = constant_counit(*A.alphabet, Scalar());
  auto B = make_presentation(vector_names("x", N), [](const AlphabetPtr&) { return std::vector<NCPoly>{}; });
  return make_double(std::move(A), std::move(B), [N](const AlphabetPtr& all) {
    auto L2 = LegExpr::leg2(generator_matrix(all, "l", N));
    auto X1 = LegExpr::leg1(column_vector(all, "x", N));
    return expand_matrix_relation(L2 * X1, X1 * L2 + num(flip(N)) * X1);
  });
}

// vector-field doubles of U(gl(N)) on U(gl(N)) (commutative_b = false) or Sym(gl(N))
DoubleSpec build_ugl_fields(const CatalogParams& p, bool commutative_b) {
  require_n(p);
  const std::string& v = require_variant(p, {"i", "ii"});
  std::size_t N = p.N;
  auto A = make_presentation(matrix_names("l", N),
                             [N](const AlphabetPtr& a) { return ugl_relations(generator_matrix(a, "l", N), 1); });
  A.counit = constant_counit(*A.alphabet, Scalar());
  auto B = make_presentation(matrix_names("m", N), [N, commutative_b](const AlphabetPtr& a) {
    return commutative_b ? commuting(a) : ugl_relations(generator_matrix(a, "m", N), 1);
  });
  bool adjoint = v == "i";
  return make_double(std::move(A), std::move(B), [N, adjoint](const AlphabetPtr& all) {
    auto L1 = LegExpr::leg1(generator_matrix(all, "l", N));
    auto M = generator_matrix(all, "m", N);
    auto M1 = LegExpr::leg1(M), M2 = LegExpr::leg2(M);
    auto P = num(flip(N));
    LegExpr rhs = M2 * L1 + M1 * P;
    if (adjoint) rhs = rhs - M2 * P;
    return expand_matrix_relation(L1 * M2, rhs);
  });
}

DoubleSpec build_dn_double(const CatalogParams& p) {
  require_n(p);
  const std::string& v = require_variant(p, {"", "tilde"});
  std::size_t N = p.N;
  Scalar h = Scalar::h();
  auto B = make_presentation(matrix_names("n", N),
                             [N, h](const AlphabetPtr& a) { return ugl_relations(generator_matrix(a, "n", N), h); });
  if (v == "tilde") {
    auto A = make_presentation(matrix_names("dtil", N), commuting);
    A.counit = diagonal_counit("dtil", N, h.inverse());
    return make_double(std::move(A), std::move(B), [N, h](const AlphabetPtr& all) {
      auto D1 = LegExpr::leg1(generator_matrix(all, "dtil", N));
      auto N2 = LegExpr::leg2(generator_matrix(all, "n", N));
      return expand_matrix_relation(D1 * N2, N2 * D1 + sc(h) * D1 * num(flip(N)));
    });
  }
  auto A = make_presentation(matrix_names("d", N), commuting);
  A.counit = constant_counit(*A.alphabet, Scalar());
  return make_double(std::move(A), std::move(B), [N, h](const AlphabetPtr& all) {
    auto D1 = LegExpr::leg1(generator_matrix(all, "d", N));
    auto N2 = LegExpr::leg2(generator_matrix(all, "n", N));
    auto P = num(flip(N));
    return expand_matrix_relation(D1 * N2, N2 * D1 + P + sc(h) * D1 * P);
  });
}

DoubleSpec build_rtt_rtt(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  auto A = make_presentation(matrix_names("t", N),
                             [&](const AlphabetPtr& a) { return rtt_relations(R, generator_matrix(a, "t", N)); });
  A.counit = diagonal_counit("t", N, 1);
  auto B = make_presentation(matrix_names("m", N),
                             [&](const AlphabetPtr& a) { return rtt_relations(R, generator_matrix(a, "m", N)); });
  return make_double(std::move(A), std::move(B), [&](const AlphabetPtr& all) {
    auto T = generator_matrix(all, "t", N), M = generator_matrix(all, "m", N);
    return expand_matrix_relation(num(R) * LegExpr::leg1(T) * LegExpr::leg2(M),
                                  LegExpr::leg1(M) * LegExpr::leg2(T) * num(R));
  }, false);
}

DoubleSpec build_rtt_tv(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  auto A = make_presentation(matrix_names("t", N),
                             [&](const AlphabetPtr& a) { return rtt_relations(R, generator_matrix(a, "t", N)); });
  A.counit = diagonal_counit("t", N, 1);
  auto B = make_presentation(vector_names("x", N), [](const AlphabetPtr&) { return std::vector<NCPoly>{}; });
  return make_double(std::move(A), std::move(B), [&](const AlphabetPtr& all) {
    auto T = generator_matrix(all, "t", N);
    auto x = vector_names("x", N);
    std::vector<NCPoly> out;
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = 1; j <= N; ++j)
        for (std::size_t k = 1; k <= N; ++k) {
          NCPoly rel = T(i - 1, j - 1) * NCPoly::generator(all, x[k - 1]);
          for (std::size_t m = 1; m <= N; ++m)
            for (std::size_t n = 1; n <= N; ++n) {
              const Scalar& r = R.at(i, k, m, n);
              if (!r.is_zero()) rel -= r * (NCPoly::generator(all, x[m - 1]) * T(n - 1, j - 1));
            }
          out.push_back(rel);
        }
    return out;
  }, false);
}

DoubleSpec build_fock(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  Scalar q = symmetry_q(R);
  auto lower = vector_names("x", N), upper = upper_names("x", N);
  auto B = make_presentation(lower, [&](const AlphabetPtr& a) {
    std::vector<NCPoly> out;
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = 1; j <= N; ++j) {
        NCPoly rel = q * (NCPoly::generator(a, lower[i - 1]) * NCPoly::generator(a, lower[j - 1]));
        for (std::size_t k = 1; k <= N; ++k)
          for (std::size_t l = 1; l <= N; ++l)
            if (!R.at(i, j, k, l).is_zero())
              rel -= R.at(i, j, k, l) * (NCPoly::generator(a, lower[k - 1]) * NCPoly::generator(a, lower[l - 1]));
        out.push_back(rel);
      }
    return nonzero(out);
  });
  auto A = make_presentation(upper, [&](const AlphabetPtr& a) {
    std::vector<NCPoly> out;
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = 1; j <= N; ++j) {
        NCPoly rel = q * (NCPoly::generator(a, upper[i - 1]) * NCPoly::generator(a, upper[j - 1]));
        for (std::size_t k = 1; k <= N; ++k)
          for (std::size_t l = 1; l <= N; ++l)
            if (!R.at(k, l, j, i).is_zero())
              rel -= R.at(k, l, j, i) * (NCPoly::generator(a, upper[l - 1]) * NCPoly::generator(a, upper[k - 1]));
        out.push_back(rel);
      }
    return nonzero(out);
  });
  A.counit = constant_counit(*A.alphabet, Scalar());
  return make_double(std::move(A), std::move(B), [&](const AlphabetPtr& all) {
    std::vector<NCPoly> out;
    for (std::size_t k = 1; k <= N; ++k)
      for (std::size_t l = 1; l <= N; ++l) {
        NCPoly rel(all);
        for (std::size_t i = 1; i <= N; ++i)
          for (std::size_t j = 1; j <= N; ++j)
            if (!R.at(j, k, i, l).is_zero())
              rel += R.at(j, k, i, l) * (NCPoly::generator(all, upper[j - 1]) * NCPoly::generator(all, lower[i - 1]));
        rel -= NCPoly::constant(all, Scalar::h() * kron(k, l));
        rel -= q.inverse() * (NCPoly::generator(all, lower[k - 1]) * NCPoly::generator(all, upper[l - 1]));
        out.push_back(rel);
      }
    return out;
  });
}

Presentation mre_presentation(const ScalarMatrix& R, const std::string& stem) {
  std::size_t N = R.leg_dim();
  auto K = make_presentation(matrix_names(stem, N),
                             [&](const AlphabetPtr& a) { return mre_relations(R, generator_matrix(a, stem, N)); });
  K.counit = constant_counit(*K.alphabet, Scalar());
  return K;
}

Presentation re_presentation(const ScalarMatrix& R, const std::string& stem) {
  std::size_t N = R.leg_dim();
  return make_presentation(matrix_names(stem, N),
                           [&](const AlphabetPtr& a) { return re_relations(R, generator_matrix(a, stem, N)); });
}

DoubleSpec build_mre_tv(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  auto B = make_presentation(vector_names("x", N), [](const AlphabetPtr&) { return std::vector<NCPoly>{}; });
  return make_double(mre_presentation(R, "k"), std::move(B), [&](const AlphabetPtr& all) {
    auto K1 = LegExpr::leg1(generator_matrix(all, "k", N));
    auto K2 = LegExpr::leg2(generator_matrix(all, "k", N));
    auto X1 = LegExpr::leg1(column_vector(all, "x", N));
    auto r = num(R);
    return expand_matrix_relation(r * K1 * r * X1, X1 * K2 + sc(Scalar::h()) * r * X1);
  });
}

DoubleSpec build_re_re(const ScalarMatrix& R, const CatalogParams& p) {
  const std::string& v = require_variant(p, {"i", "ii", "i-literal", "ii-literal"});
  std::size_t N = R.leg_dim();
  ScalarMatrix Rinv = R.inverse();
  return make_double(mre_presentation(R, "k"), re_presentation(R, "m"), [&](const AlphabetPtr& all) {
    auto K1 = LegExpr::leg1(generator_matrix(all, "k", N));
    auto M = generator_matrix(all, "m", N);
    auto M1 = LegExpr::leg1(M);
    auto r = num(R);
    // The literal forms close only for involutive R; the default forms agree
    // with them there and stay consistent for Hecke R.
    LegExpr extra = r * M1;
    LegExpr tail = r;
    if (v == "i") extra = extra - M1 * r;
    if (v == "i-literal") extra = extra - r * LegExpr::leg2(M);
    if (v == "ii") tail = num(Rinv);
    return expand_matrix_relation(r * K1 * r * M1, M1 * r * K1 * tail + sc(Scalar::h()) * extra);
  });
}

DoubleSpec build_dm_double(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  ScalarMatrix Rinv = R.inverse();
  auto A = make_presentation(matrix_names("d", N),
                             [&](const AlphabetPtr& a) { return dinv_relations(Rinv, generator_matrix(a, "d", N)); });
  A.counit = constant_counit(*A.alphabet, Scalar());
  return make_double(std::move(A), re_presentation(R, "m"), [&](const AlphabetPtr& all) {
    auto D1 = LegExpr::leg1(generator_matrix(all, "d", N));
    auto M1 = LegExpr::leg1(generator_matrix(all, "m", N));
    auto r = num(R), ri = num(Rinv);
    return expand_matrix_relation(D1 * r * M1 * r, r * M1 * ri * D1 + r);
  });
}

DoubleSpec build_dn_braided(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  ScalarMatrix Rinv = R.inverse();
  auto A = make_presentation(matrix_names("d", N),
                             [&](const AlphabetPtr& a) { return dinv_relations(Rinv, generator_matrix(a, "d", N)); });
  A.counit = constant_counit(*A.alphabet, Scalar());
  Presentation B = mre_presentation(R, "n");
  B.counit.reset();
  return make_double(std::move(A), std::move(B), [&](const AlphabetPtr& all) {
    auto D1 = LegExpr::leg1(generator_matrix(all, "d", N));
    auto N1 = LegExpr::leg1(generator_matrix(all, "n", N));
    auto r = num(R), ri = num(Rinv);
    return expand_matrix_relation(D1 * r * N1 * r - r * N1 * ri * D1, r + sc(Scalar::h()) * D1 * r);
  });
}

}  // namespace

std::vector<std::string> matrix_precedence(const Alphabet& alphabet) {
  struct Key {
    int block;
    std::size_t stem_first;
    long rank;
    std::size_t index;
  };
  const auto& gens = alphabet.generators();
  std::map<std::string, std::size_t> stem_first;
  std::vector<Key> keys;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string& n = gens[k].name;
    long rank = 0;
    std::string stem = n;
    auto us = n.rfind('_'), up = n.rfind('^');
    if (us != std::string::npos && up != std::string::npos && us < up) {
      long i = std::strtol(n.c_str() + us + 1, nullptr, 10), j = std::strtol(n.c_str() + up + 1, nullptr, 10);
      stem = n.substr(0, us);
      if (i == j) rank = -i;
      else if (i < j) rank = 1000 * i + j;
      else rank = 1000000 + 1000 * i + j;
    } else {
      rank = static_cast<long>(k);
    }
    auto it = stem_first.try_emplace(stem, k).first;
    keys.push_back({gens[k].color == Color::A ? 1 : 0, it->second, rank, k});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::tie(a.block, a.stem_first, a.rank, a.index) < std::tie(b.block, b.stem_first, b.rank, b.index);
  });
  std::vector<std::string> out;
  for (const auto& k : keys) out.push_back(gens[k.index].name);
  return out;
}

Scalar symmetry_q(const ScalarMatrix& R) {
  return check_symmetry_type(R) == SymmetryType::Involutive ? Scalar(1) : Scalar::q();
}

ScalarMatrix resolve_r(const CatalogParams& p) {
  ScalarMatrix R;
  if (p.R) {
    R = *p.R;
  } else {
    require_n(p);
    if (p.r == "dj_hecke") R = dj_hecke(p.N);
    else if (p.r == "flip") R = flip(p.N);
    else throw InvalidParams("unknown R '" + p.r + "' (expected dj_hecke or flip)");
  }
  R.leg_dim();
  if (!check_braid(R)) throw InvalidParams("R does not satisfy the braid relation");
  if (check_symmetry_type(R) == SymmetryType::Neither) throw InvalidParams("R is neither involutive nor Hecke");
  return R;
}

std::pair<Presentation, Presentation> sym_skew_presentations(const ScalarMatrix& R) {
  std::size_t N = R.leg_dim();
  SymmetryType type = check_symmetry_type(R);
  if (type == SymmetryType::Neither) throw InvalidParams("R is neither involutive nor Hecke");
  Scalar q = type == SymmetryType::Involutive ? Scalar(1) : Scalar::q();
  ScalarMatrix I = ScalarMatrix::identity(R.dim());
  auto build = [&](const ScalarMatrix& image) {
    return make_presentation(vector_names("x", N), [&](const AlphabetPtr& a) {
      std::vector<NCPoly> rels;
      for (const auto& row : image.row_basis()) {
        NCPoly rel(a);
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (row[c].is_zero()) continue;
          Word w{static_cast<Letter>(c / N), static_cast<Letter>(c % N)};
          rel.add_term(w, row[c]);
        }
        rels.push_back(rel);
      }
      return rels;
    });
  };
  return {build(q * I - R), build(q.inverse() * I + R)};
}

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> list = {
      {"hw", "hw(m)", "Heisenberg-Weyl double, x^j x_i = x_i x^j + δ", {""}, true},
      {"jackson", "jackson", "y x = q x y + 1 (Jackson derivative)", {""}, true},
      {"matrix_hw", "matrix_hw(N)", "commuting d_i^j, m_i^j with D1 M2 = M2 D1 + P", {""}, true},
      {"ugl_tv", "ugl_tv(N)", "U(gl(N)) acting on the free algebra T(V)", {""}, true},
      {"ugl_ugl", "ugl_ugl(N, i|ii)", "U(gl(N)) acting on U(gl(N)): adjoint (i) or left (ii) fields", {"i", "ii"}, true},
      {"ugl_sym", "ugl_sym(N, i|ii)", "U(gl(N)) acting on Sym(gl(N)): adjoint (i) or left (ii) fields", {"i", "ii"}, true},
      {"dn_double", "dn_double(N[, tilde])", "commuting D acting on U(gl(N)_h)", {"", "tilde"}, true},
      {"rtt_rtt", "rtt_rtt(R)", "RTT algebra acting on a second RTT algebra", {""}, true},
      {"rtt_tv", "rtt_tv(R)", "RTT algebra acting on T(V)", {""}, true},
      {"fock", "fock(R)", "R-bosonic Fock space: Sym_R(V*) acting on Sym_R(V)", {""}, true},
      {"sym_skew", "sym_skew(R)", "R-symmetric and R-skew-symmetric algebras", {""}, false},
      {"mre", "mre(R)", "modified reflection equation algebra", {""}, false},
      {"mre_tv", "mre_tv(R)", "modified RE algebra acting on T(V)", {""}, true},
      {"re_re", "re_re(R, i|ii|i-literal|ii-literal)", "modified RE algebra acting on an RE algebra", {"i", "ii"}, true},
      {"dm_double", "dm_double(R)", "braided derivatives D on an RE algebra", {""}, true},
      {"dn_braided", "dn_braided(R)", "braided derivatives D on a modified RE algebra", {""}, true},
      {"u2_calculus", "u2_calculus[(corrupted)]", "partial derivatives on U(u(2)_h)", {""}, true},
  };
  return list;
}

CatalogEntry catalog_build(const std::string& name, const CatalogParams& params) {
  CatalogEntry e;
  e.name = name;
  e.params = params;
  auto R = [&] { return resolve_r(params); };
  if (name == "hw") e.dbl = build_hw(params);
  else if (name == "jackson") e.dbl = build_jackson();
  else if (name == "matrix_hw") e.dbl = build_matrix_hw(params);
  else if (name == "ugl_tv") e.dbl = build_ugl_tv(params);
  else if (name == "ugl_ugl") e.dbl = build_ugl_fields(params, false);
  else if (name == "ugl_sym") e.dbl = build_ugl_fields(params, true);
  else if (name == "dn_double") e.dbl = build_dn_double(params);
  else if (name == "rtt_rtt") e.dbl = build_rtt_rtt(R());
  else if (name == "rtt_tv") e.dbl = build_rtt_tv(R());
  else if (name == "fock") e.dbl = build_fock(R());
  else if (name == "mre_tv") e.dbl = build_mre_tv(R());
  else if (name == "re_re") e.dbl = build_re_re(R(), params);
  else if (name == "dm_double") e.dbl = build_dm_double(R());
  else if (name == "dn_braided") e.dbl = build_dn_braided(R());
  else if (name == "u2_calculus") e.dbl = u2_calculus(require_variant(params, {"", "corrupted"}) == "corrupted");
  else if (name == "sym_skew") {
    auto [sym, skew] = sym_skew_presentations(R());
    e.algebras = {{"sym", std::move(sym)}, {"skew", std::move(skew)}};
  } else if (name == "mre") {
    e.algebras = {{"mre", mre_presentation(R(), "k")}};
  } else {
    throw UnknownEntry(name);
  }
  return e;
}

bool EntryVerdicts::all_member() const {
  for (auto m : entries)
    if (m != Membership::Member) return false;
  return true;
}

EntryVerdicts verify_proposition3(const ScalarMatrix& R, int degree_bound, const MembershipOptions& options) {
  std::size_t N = R.leg_dim();
  DoubleSpec fock = build_fock(R);
  const AlphabetPtr& all = fock.alphabet();
  GenMatrix K(N, all);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      K(i, j) = fock.gen("x_" + std::to_string(i + 1)) * fock.gen("x^" + std::to_string(j + 1));
  auto entries = expand_matrix_relation(mre_expr(R, K), sc(Scalar()));
  EntryVerdicts v;
  v.degree_bound = degree_bound;
  v.options = options;
  IdealSpan span(fock.all_relations(), degree_bound, options);
  for (const auto& p : entries) v.entries.push_back(span.contains(p.with_alphabet(all)));
  return v;
}

IsoVerdicts verify_iso_re(const ScalarMatrix& R, int degree_bound, const MembershipOptions& options) {
  if (check_symmetry_type(R) != SymmetryType::Hecke) throw InvalidParams("the isomorphism needs a Hecke symmetry");
  std::size_t N = R.leg_dim();
  Scalar q = Scalar::q(), h = Scalar::h();
  Scalar c = q - q.inverse();
  // forward: L = hI - cK inside the RE relation, tested in the mRE ideal;
  // backward: K = (hI - L)/c inside the mRE relation, tested in the RE ideal
  auto run = [&](bool forward) {
    Presentation target = forward ? mre_presentation(R, "k") : re_presentation(R, "l");
    const AlphabetPtr& a = target.alphabet;
    GenMatrix src = generator_matrix(a, forward ? "k" : "l", N);
    GenMatrix image(N, a);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        NCPoly id = NCPoly::constant(a, h * kron(i, j));
        image(i, j) = forward ? id - c * src(i, j) : (id - src(i, j)) * c.inverse();
      }
    LegExpr expr = mre_expr(R, image);
    if (forward) {
      auto L1 = LegExpr::leg1(image);
      auto r = num(R);
      expr = r * L1 * r * L1 - L1 * r * L1 * r;
    }
    EntryVerdicts v;
    v.degree_bound = degree_bound;
    v.options = options;
    IdealSpan span(target.relations, degree_bound, options);
    for (const auto& p : expand_matrix_relation(expr, sc(Scalar()))) v.entries.push_back(span.contains(p.with_alphabet(a)));
    return v;
  };
  return {run(true), run(false)};
}

// --- coproduct -----------------------------------------------------------

NCPoly coproduct_apply(const DoubleSpec& dn, std::size_t i, std::size_t j, const Word& w, CoproductForm form) {
  const AlphabetPtr& all = dn.alphabet();
  std::size_t N = 0;
  while (N * N < dn.B().alphabet->size()) ++N;
  if (w.empty()) return NCPoly(all);
  // value on one generator n_k^l: δ_il δ_kj
  auto on_letter = [&](std::size_t a, std::size_t b, Letter l) {
    return NCPoly::constant(all, kron(a, l % N) * kron(l / N, b));
  };
  if (w.size() == 1) return on_letter(i, j, w[0]);
  Letter u = w[0];
  Word v = w.sub(1);
  NCPoly r = on_letter(i, j, u) * NCPoly::monomial(all, v) +
             NCPoly::monomial(all, Word{u}) * coproduct_apply(dn, i, j, v, form);
  for (std::size_t k = 0; k < N; ++k) {
    if (form == CoproductForm::Consistent)
      r += Scalar::h() * (on_letter(k, j, u) * coproduct_apply(dn, i, k, v, form));
    else
      r -= Scalar::h() * (on_letter(i, k, u) * coproduct_apply(dn, k, j, v, form));
  }
  return normalize(dn.b_system(), r);
}

namespace {

std::vector<Word> all_words(std::size_t letters, int min_len, int max_len) {
  std::vector<Word> level{Word{}}, out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (std::size_t l = 0; l < letters; ++l) {
        Word x = w;
        x.push_back(static_cast<Letter>(l));
        next.push_back(std::move(x));
      }
    level = std::move(next);
    if (len >= min_len) out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

NCPoly as_b(const DoubleSpec& d, const NCPoly& p) {
  NCPoly out(d.B().alphabet);
  for (const auto& [w, c] : p.terms()) out.add_term(w, c);
  return out;
}

}  // namespace

bool verify_coproduct_leibniz(std::size_t N, int cutoff, CoproductForm form) {
  if (cutoff < 2) throw InvalidParams("cutoff must be at least 2");
  CatalogParams p;
  p.N = N;
  DoubleSpec dn = build_dn_double(p);
  std::size_t nb = dn.B().alphabet->size();
  auto dnames = matrix_names("d", N);
  for (const Word& w : all_words(nb, 2, cutoff))
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        NCPoly direct = act(dn, dn.gen(dnames[i * N + j]), NCPoly::monomial(dn.B().alphabet, w));
        NCPoly via = as_b(dn, coproduct_apply(dn, i, j, w, form));
        if (!(direct == via)) return false;
      }
  return true;
}

bool verify_coproduct_classical_limit(std::size_t N, int cutoff) {
  CatalogParams p;
  p.N = N;
  DoubleSpec dn0 = specialize(build_dn_double(p), {{Param::h(), Scalar()}});
  std::size_t nb = dn0.B().alphabet->size();
  auto dnames = matrix_names("d", N);
  const AlphabetPtr& B = dn0.B().alphabet;
  for (const Word& w : all_words(nb, 1, cutoff))
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        // classical derivative of a commutative monomial
        NCPoly classical(dn0.alphabet());
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          std::size_t k = w[pos] / N, l = w[pos] % N;
          if (k != j || l != i) continue;
          Word rest = w.sub(0, pos) + w.sub(pos + 1);
          classical.add_term(rest, Scalar(1));
        }
        NCPoly expected = as_b(dn0, normalize(dn0.b_system(), classical));
        NCPoly direct = act(dn0, dn0.gen(dnames[i * N + j]), NCPoly::monomial(B, w));
        // the coproduct carries its own h, specialised here
        Assignment h0{{Param::h(), Scalar()}};
        NCPoly via = as_b(dn0, substitute(coproduct_apply(dn0, i, j, w, CoproductForm::Consistent), h0));
        NCPoly literal = as_b(dn0, substitute(coproduct_apply(dn0, i, j, w, CoproductForm::Literal), h0));
        if (!(direct == expected) || !(via == expected) || !(literal == expected)) return false;
      }
  return true;
}

// --- limits --------------------------------------------------------------

bool same_rules(const RewriteSystem& a, const RewriteSystem& b) {
  if (a.rules().size() != b.rules().size()) return false;
  std::map<std::string, std::string> ra, rb;
  for (const auto& r : a.rules()) ra[r.lhs.to_string(*a.alphabet())] = r.rhs.is_zero() ? "0" : r.rhs.to_string();
  for (const auto& r : b.rules()) rb[r.lhs.to_string(*b.alphabet())] = r.rhs.is_zero() ? "0" : r.rhs.to_string();
  return ra == rb;
}

bool dm_to_dn_substitution(std::size_t N, bool rescale_d) {
  ScalarMatrix R = dj_hecke(N);
  DoubleSpec dm = build_dm_double(R);
  DoubleSpec dn = build_dn_braided(R);
  Scalar q = Scalar::q(), h = Scalar::h();
  Scalar c = q - q.inverse();
  Scalar lambda = rescale_d ? -c.inverse() : Scalar(1);
  const AlphabetPtr& target = dn.alphabet();
  std::map<Letter, NCPoly> images;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) {
      std::string ij = std::to_string(i) + "^" + std::to_string(j);
      images[dm.alphabet()->at("m_" + ij)] =
          NCPoly::constant(target, h * kron(i, j)) - c * NCPoly::generator(target, "n_" + ij);
      images[dm.alphabet()->at("d_" + ij)] = lambda * NCPoly::generator(target, "d_" + ij);
    }
  auto compare = [&](const std::vector<NCPoly>& from, const std::vector<NCPoly>& to, const Scalar& factor) {
    std::vector<NCPoly> mapped;
    for (const auto& p : from) mapped.push_back(apply_linear(images, dm.lift(p), target));
    std::vector<NCPoly> expected;
    for (const auto& p : to) expected.push_back(factor * dn.lift(p));
    return mapped == expected;
  };
  return compare(dm.permutation(), dn.permutation(), Scalar(1)) &&
         compare(dm.A().relations, dn.A().relations, lambda * lambda) &&
         compare(dm.B().relations, dn.B().relations, c * c);
}

std::vector<Check> verify_limits(std::size_t N) {
  std::vector<Check> out;
  Assignment q1{{Param::q(), Scalar(1)}};
  ScalarMatrix R = dj_hecke(N);
  auto tnames = matrix_names("t", N);

  for (const char* name : {"rtt_tv", "rtt_rtt"}) {
    DoubleSpec d = specialize(std::string(name) == "rtt_tv" ? build_rtt_tv(R) : build_rtt_rtt(R), q1);
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < N && ok; ++i)
      for (std::size_t j = 0; j < N && ok; ++j) {
        auto m = op_matrix(d, d.gen(tnames[i * N + j]), 2);
        if (!(m.entries == Scalar(i == j ? 1 : 0) * ScalarMatrix::identity(m.basis.size()))) {
          ok = false;
          detail = "Op(" + tnames[i * N + j] + ") is not trivial";
        }
      }
    out.push_back({std::string(name) + " at q=1: Op(t_i^j) = δ_ij I", ok, detail});
  }

  {
    DoubleSpec d = specialize(build_mre_tv(R), q1);
    bool ok = true;
    std::string detail;
    auto knames = matrix_names("k", N);
    auto x = vector_names("x", N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
          NCPoly got = act(d, d.gen(knames[i * N + j]), NCPoly::generator(d.B().alphabet, x[k]));
          NCPoly want = (Scalar::h() * kron(j, k)) * NCPoly::generator(d.B().alphabet, x[i]);
          if (!(got == want)) {
            ok = false;
            detail = knames[i * N + j] + " ▷ " + x[k] + " = " + got.to_string();
          }
        }
    out.push_back({"mre_tv at q=1: k_i^j ▷ x_k = h δ_jk x_i", ok, detail});
  }

  {
    CatalogParams p;
    p.N = N;
    DoubleSpec limit = specialize(build_dn_braided(R), q1);
    DoubleSpec classic = build_dn_double(p);
    bool ok = same_rules(limit.system(), classic.system());
    out.push_back({"dn_braided at q=1 equals dn_double", ok, ok ? "" : "rule sets differ"});
  }

  out.push_back({"dm_double under M = hI - (q - 1/q)N, D -> -D/(q - 1/q) equals dn_braided",
                 dm_to_dn_substitution(N, true), ""});
  return out;
}

}  // namespace ncd
