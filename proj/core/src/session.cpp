#include "ncdouble/session.hpp"

#include <functional>

#include "json.hpp"
#include "ncdouble/text.hpp"

namespace ncd {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultDegreeBound = 4;

// Stops the run with the error's exit code.
struct Abort {
  ExitCode code;
  std::string message;
};

[[noreturn]] void input_error(const std::string& what) { throw InvalidParams(what); }

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) input_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) input_error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

template <typename T>
T value_or(const json& obj, const char* key, T fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    input_error(std::string("field '") + key + "' has the wrong type");
  }
}

// Scalars may be written as JSON numbers (integers) or expression strings.
Scalar scalar_of(const json& v) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  input_error("scalar must be an integer or a string");
}

json strings(const std::vector<std::string>& v) { return json(v); }

json poly_json(const NCPoly& p) { return p.to_string(); }

json matrix_json(const ScalarMatrix& m) {
  json rows = json::array();
  auto e = m.entry_strings();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(e[r * m.dim() + c]);
    rows.push_back(row);
  }
  return rows;
}

json rules_json(const RewriteSystem& sys) {
  json out = json::array();
  for (const auto& r : sys.rules()) out.push_back(r.lhs.to_string(*sys.alphabet()) + " -> " + r.rhs.to_string());
  return out;
}

json report_json(const ConfluenceReport& rep, const Alphabet& alphabet) {
  json un = json::array();
  for (const auto& u : rep.unresolved)
    un.push_back({{"overlap", u.overlap.to_string(alphabet)}, {"difference", u.difference.to_string()}});
  return {{"overlaps", rep.overlaps_examined}, {"unresolved", un}};
}

json presentation_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.alphabet->generators()) gens.push_back(g.name);
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(r.to_string());
  json out = {{"generators", gens}, {"relations", rels}};
  if (p.counit) {
    json c = json::object();
    for (const auto& g : p.alphabet->generators()) c[g.name] = p.counit->at(g.name).to_string();
    out["counit"] = c;
  }
  return out;
}

// Permutation relations and rule lists over the combined alphabet.
json double_json(const DoubleSpec& d) {
  json perm = json::array();
  for (const auto& r : d.permutation()) perm.push_back(r.to_string());
  json out = {{"A", presentation_json(d.A())}, {"B", presentation_json(d.B())}, {"permutation", perm}};
  if (!d.options().precedence.empty()) out["precedence"] = d.options().precedence;
  return out;
}

MembershipMode mode_of(const std::string& s) {
  if (s == "symbolic") return MembershipMode::Symbolic;
  if (s == "specialized") return MembershipMode::Specialized;
  input_error("mode must be 'symbolic' or 'specialized'");
}

ExitCode exit_for(const Error& e) {
  return e.error_class() == ErrorClass::Resource ? ExitCode::ResourceExceeded : ExitCode::InputError;
}

class Session {
 public:
  Session(const json& doc, const SessionOptions& cli) : doc_(doc) {
    const json& opts = doc.contains("options") ? doc.at("options") : json::object();
    normalize_.fuel = cli.fuel.value_or(value_or<std::uint64_t>(opts, "fuel", kDefaultFuel));
    degree_bound_ = cli.degree_bound.value_or(value_or<int>(opts, "degree_bound", kDefaultDegreeBound));
    membership_.mode = cli.mode.value_or(mode_of(value_or<std::string>(opts, "mode", "specialized")));
    membership_.seed = cli.seed.value_or(value_or<std::uint64_t>(doc, "seed", kDefaultSeed));
    membership_.trials = value_or<unsigned>(opts, "trials", membership_.trials);
    long_suites_ = cli.long_suites || value_or<bool>(opts, "long", false);
  }

  SessionResult run() {
    json results = json::array();
    ExitCode code = ExitCode::Pass;
    std::string abort_message;
    try {
      declare_params();
      load_matrices();
      load_algebras();
      load_doubles();
      if (doc_.contains("commands")) {
        if (!doc_.at("commands").is_array()) input_error("'commands' must be an array");
        for (const json& cmd : doc_.at("commands")) {
          json r = execute(cmd);
          if (!r.value("passed", true)) code = ExitCode::VerificationFailed;
          results.push_back(std::move(r));
        }
      }
    } catch (const Abort& a) {
      code = a.code;
      abort_message = a.message;
    } catch (const Error& e) {
      code = exit_for(e);
      abort_message = e.what();
    } catch (const json::exception& e) {
      code = ExitCode::InputError;
      abort_message = std::string("malformed document: ") + e.what();
    }
    json report;
    report["seed"] = membership_.seed;
    report["mode"] = to_string(membership_.mode);
    report["trials"] = membership_.trials;
    report["degree_bound"] = degree_bound_;
    report["fuel"] = normalize_.fuel;
    report["results"] = results;
    if (!abort_message.empty()) report["error"] = abort_message;
    report["exit_code"] = static_cast<int>(code);
    return {report.dump(2) + "\n", code};
  }

 private:
  // --- document sections ----------------------------------------------------

  void declare_params() {
    if (!doc_.contains("params")) return;
    for (const json& p : doc_.at("params")) {
      if (!p.is_string()) input_error("parameter names must be strings");
      Param::declare(p.get<std::string>());
    }
  }

  void load_matrices() {
    if (!doc_.contains("matrices")) return;
    for (const auto& [name, def] : doc_.at("matrices").items()) matrices_[name] = matrix_from(def);
  }

  ScalarMatrix matrix_from(const json& def) {
    if (def.contains("builtin")) {
      std::string b = require_string(def, "builtin");
      std::size_t N = value_or<std::size_t>(def, "N", 2);
      if (N == 0) input_error("N must be positive");
      if (b == "flip") return flip(N);
      if (b == "dj_hecke") return dj_hecke(N);
      if (b == "identity") return ScalarMatrix::identity(N * N);
      input_error("unknown builtin matrix '" + b + "'");
    }
    if (def.contains("entries")) {
      const json& rows = def.at("entries");
      std::size_t n = rows.size();
      ScalarMatrix m(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) throw DimensionNotSquare("matrix rows must all have length " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_of(rows[r][c]);
      }
      return m;
    }
    if (def.contains("expr")) {
      std::size_t N = value_or<std::size_t>(def, "N", 2);
      // multiplying by I widens a bare scalar to a full matrix
      LegExpr e = parse_leg_expression(require_string(def, "expr"), nullptr, matrix_scope(N), N) *
                  LegExpr::numeric(ScalarMatrix::identity(N * N));
      ScalarMatrix m(N * N);
      for (std::size_t r = 0; r < N * N; ++r)
        for (std::size_t c = 0; c < N * N; ++c) {
          const NCPoly& p = e.entry(r, c);
          if (p.degree() > 0) input_error("matrix expression involves generators");
          m(r, c) = p.coefficient(Word{});
        }
      return m;
    }
    input_error("matrix needs 'builtin', 'entries' or 'expr'");
  }

  // Declared matrices of the right size plus the flip P and identity I.
  std::map<std::string, ScalarMatrix> matrix_scope(std::size_t N) const {
    std::map<std::string, ScalarMatrix> scope;
    scope["P"] = flip(N);
    scope["I"] = ScalarMatrix::identity(N * N);
    for (const auto& [n, m] : matrices_)
      if (m.dim() == N * N) scope[n] = m;
    return scope;
  }

  // A relation is an expression string or {"lhs", "rhs"} two-leg matrix
  // relation expanded entrywise (needs "N").
  void append_relations(const json& list, const AlphabetPtr& alphabet, std::size_t N, std::vector<NCPoly>& out) {
    if (!list.is_array()) input_error("relations must be an array");
    for (const json& r : list) {
      if (r.is_string()) {
        out.push_back(parse_expression(r.get<std::string>(), alphabet));
      } else if (r.is_object()) {
        if (N == 0) input_error("matrix relations need 'N'");
        auto scope = matrix_scope(N);
        auto lhs = parse_leg_expression(require_string(r, "lhs"), alphabet, scope, N);
        auto rhs = parse_leg_expression(require_string(r, "rhs"), alphabet, scope, N);
        for (auto& p : expand_matrix_relation(lhs, rhs))
          if (!p.is_zero()) out.push_back(p);
      } else {
        input_error("a relation must be a string or an object");
      }
    }
  }

  Presentation algebra_from(const json& def) {
    if (def.is_string()) {
      auto it = algebras_.find(def.get<std::string>());
      if (it == algebras_.end()) input_error("unknown algebra '" + def.get<std::string>() + "'");
      return it->second;
    }
    if (def.contains("catalog")) {
      CatalogEntry e = catalog_build(require_string(def, "catalog"), catalog_params(def.value("params", json::object())));
      std::string part = value_or<std::string>(def, "part", e.algebras.empty() ? "B" : e.algebras.front().first);
      if (e.dbl && part == "A") return e.dbl->A();
      if (e.dbl && part == "B") return e.dbl->B();
      for (auto& [n, p] : e.algebras)
        if (n == part) return p;
      input_error("catalog entry has no algebra '" + part + "'");
    }
    Presentation p;
    const json& gens = require(def, "generators");
    if (!gens.is_array()) input_error("'generators' must be an array");
    p.alphabet = make_alphabet(gens.get<std::vector<std::string>>());
    std::size_t N = value_or<std::size_t>(def, "N", 0);
    if (def.contains("relations")) append_relations(def.at("relations"), p.alphabet, N, p.relations);
    if (def.contains("counit")) {
      p.counit.emplace();
      for (const auto& [g, v] : def.at("counit").items()) {
        p.alphabet->at(g);
        (*p.counit)[g] = scalar_of(v);
      }
    }
    return p;
  }

  void load_algebras() {
    if (!doc_.contains("algebras")) return;
    for (const auto& [name, def] : doc_.at("algebras").items()) algebras_.insert_or_assign(name, algebra_from(def));
  }

  CatalogParams catalog_params(const json& j) {
    CatalogParams p;
    p.N = value_or<std::size_t>(j, "N", p.N);
    p.m = value_or<std::size_t>(j, "m", p.m);
    p.r = value_or<std::string>(j, "r", p.r);
    p.variant = value_or<std::string>(j, "variant", p.variant);
    if (j.contains("R")) p.R = matrix_ref(j.at("R"));
    return p;
  }

  ScalarMatrix matrix_ref(const json& v) {
    if (v.is_string()) {
      auto it = matrices_.find(v.get<std::string>());
      if (it == matrices_.end()) input_error("unknown matrix '" + v.get<std::string>() + "'");
      return it->second;
    }
    return matrix_from(v);
  }

  DoubleSpec double_from(const json& def) {
    if (def.contains("catalog")) {
      CatalogEntry e = catalog_build(require_string(def, "catalog"), catalog_params(def.value("params", json::object())));
      if (!e.dbl) input_error("catalog entry '" + e.name + "' is not a double");
      return *e.dbl;
    }
    Presentation A = algebra_from(require(def, "A"));
    Presentation B = algebra_from(require(def, "B"));
    AlphabetPtr all = combined_alphabet(*A.alphabet, *B.alphabet);
    std::vector<NCPoly> perm;
    append_relations(require(def, "permutation"), all, value_or<std::size_t>(def, "N", 0), perm);
    DoubleOptions o;
    o.precedence = value_or<std::vector<std::string>>(def, "precedence", {});
    o.completion_rules = value_or<std::size_t>(def, "completion_rules", 0);
    o.completion_overlap = value_or<std::size_t>(def, "completion_overlap", o.completion_overlap);
    return DoubleSpec(std::move(A), std::move(B), std::move(perm), std::move(o));
  }

  void load_doubles() {
    if (!doc_.contains("doubles")) return;
    for (const auto& [name, def] : doc_.at("doubles").items()) doubles_.insert_or_assign(name, double_from(def));
  }

  const DoubleSpec& double_ref(const json& cmd) {
    std::string n = require_string(cmd, "double");
    auto it = doubles_.find(n);
    if (it == doubles_.end()) input_error("unknown double '" + n + "'");
    return it->second;
  }

  // --- commands ---------------------------------------------------------------

  json execute(const json& cmd) {
    std::string op = require_string(cmd, "op");
    json r;
    r["op"] = op;
    if (cmd.contains("label")) r["label"] = cmd.at("label");
    bool expect = value_or<bool>(cmd, "expect", true);
    bool ok = true;
    try {
      ok = dispatch(op, cmd, r);
    } catch (const Error& e) {
      if (e.error_class() != ErrorClass::Math) throw Abort{exit_for(e), "command '" + op + "': " + e.what()};
      ok = false;
      r["error"] = e.what();
    }
    r["ok"] = ok;
    if (!expect) r["expect"] = false;
    r["passed"] = ok == expect;
    return r;
  }

  MembershipOptions membership_for(const json& cmd) const {
    MembershipOptions o = membership_;
    if (cmd.contains("mode")) o.mode = mode_of(cmd.at("mode").get<std::string>());
    o.seed = value_or<std::uint64_t>(cmd, "seed", o.seed);
    o.trials = value_or<unsigned>(cmd, "trials", o.trials);
    return o;
  }

  static json verdicts_json(const EntryVerdicts& v) {
    json e = json::array();
    for (auto m : v.entries) e.push_back(to_string(m));
    return {{"degree_bound", v.degree_bound},
            {"mode", to_string(v.options.mode)},
            {"seed", v.options.seed},
            {"trials", v.options.trials},
            {"entries", e}};
  }

  bool dispatch(const std::string& op, const json& cmd, json& r) {
    using Handler = bool (Session::*)(const json&, json&);
    static const std::map<std::string, Handler> handlers = {
        {"check-braid", &Session::cmd_check_braid},   {"symmetry-type", &Session::cmd_symmetry_type},
        {"skew-inverse", &Session::cmd_skew_inverse}, {"expand", &Session::cmd_expand},
        {"build-double", &Session::cmd_build_double}, {"consistency", &Session::cmd_consistency},
        {"normalize", &Session::cmd_normalize},       {"act", &Session::cmd_act},
        {"opmat", &Session::cmd_opmat},               {"verify-rep", &Session::cmd_verify_rep},
        {"specialize", &Session::cmd_specialize},     {"catalog", &Session::cmd_catalog},
        {"verify", &Session::cmd_verify},             {"ideal-member", &Session::cmd_ideal_member},
    };
    auto it = handlers.find(op);
    if (it == handlers.end()) input_error("unknown op '" + op + "'");
    return (this->*(it->second))(cmd, r);
  }

  bool cmd_check_braid(const json& cmd, json& r) {
    bool ok = check_braid(matrix_ref(require(cmd, "matrix")));
    r["braid"] = ok;
    return ok;
  }

  bool cmd_symmetry_type(const json& cmd, json& r) {
    SymmetryType t = check_symmetry_type(matrix_ref(require(cmd, "matrix")));
    r["type"] = to_string(t);
    if (cmd.contains("want")) return cmd.at("want").get<std::string>() == to_string(t);
    return t != SymmetryType::Neither;
  }

  bool cmd_skew_inverse(const json& cmd, json& r) {
    ScalarMatrix R = matrix_ref(require(cmd, "matrix"));
    ScalarMatrix psi = skew_inverse(R);
    r["psi"] = matrix_json(psi);
    return check_skew_inverse(R, psi);
  }

  AlphabetPtr scope_alphabet(const json& cmd) {
    if (cmd.contains("double")) return double_ref(cmd).alphabet();
    if (cmd.contains("algebra")) return algebra_from(cmd.at("algebra")).alphabet;
    input_error("command needs 'double' or 'algebra'");
  }

  bool cmd_expand(const json& cmd, json& r) {
    AlphabetPtr a = scope_alphabet(cmd);
    std::size_t N = value_or<std::size_t>(cmd, "N", 2);
    auto scope = matrix_scope(N);
    auto lhs = parse_leg_expression(require_string(cmd, "lhs"), a, scope, N);
    auto rhs = parse_leg_expression(value_or<std::string>(cmd, "rhs", "0"), a, scope, N);
    json e = json::array();
    for (const auto& p : expand_matrix_relation(lhs, rhs)) e.push_back(poly_json(p));
    r["entries"] = e;
    return true;
  }

  bool cmd_build_double(const json& cmd, json& r) {
    const DoubleSpec& d = double_ref(cmd);
    r["rules"] = rules_json(d.system());
    r["b_rules"] = d.b_system().rules().size();
    return true;
  }

  bool cmd_consistency(const json& cmd, json& r) {
    const DoubleSpec& d = double_ref(cmd);
    auto rep = check_sigma_consistency(d, value_or<std::size_t>(cmd, "overlap", 3), normalize_);
    json j = report_json(rep, *d.alphabet());
    r["overlaps"] = j["overlaps"];
    r["unresolved"] = j["unresolved"];
    return rep.confluent();
  }

  bool cmd_normalize(const json& cmd, json& r) {
    std::string text = require_string(cmd, "expr");
    NormalizeStats stats;
    NCPoly nf;
    if (cmd.contains("double")) {
      const DoubleSpec& d = double_ref(cmd);
      nf = normalize(d.system(), parse_expression(text, d.alphabet()), normalize_, &stats);
    } else {
      Presentation p = algebra_from(require(cmd, "algebra"));
      RewriteSystem sys = present(p, value_or<std::vector<std::string>>(cmd, "precedence", {}));
      nf = normalize(sys, parse_expression(text, p.alphabet), normalize_, &stats);
    }
    r["normal_form"] = poly_json(nf);
    r["steps"] = stats.steps;
    return true;
  }

  bool cmd_act(const json& cmd, json& r) {
    const DoubleSpec& d = double_ref(cmd);
    NCPoly a = parse_expression(require_string(cmd, "a"), d.alphabet());
    NCPoly b = parse_expression(require_string(cmd, "b"), d.alphabet());
    NCPoly out = act(d, a, b, normalize_);
    r["result"] = poly_json(out);
    if (cmd.contains("want")) return out == parse_expression(cmd.at("want").get<std::string>(), d.B().alphabet);
    return true;
  }

  bool cmd_opmat(const json& cmd, json& r) {
    const DoubleSpec& d = double_ref(cmd);
    NCPoly a = parse_expression(require_string(cmd, "a"), d.alphabet());
    auto m = op_matrix(d, a, value_or<int>(cmd, "cutoff", 2), normalize_);
    r["basis"] = strings(m.basis_strings());
    r["entries"] = matrix_json(m.entries);
    return true;
  }

  bool cmd_verify_rep(const json& cmd, json& r) {
    const DoubleSpec& d = double_ref(cmd);
    int cutoff = value_or<int>(cmd, "cutoff", 3);
    json pairs = json::array();
    bool ok = true;
    // Either one explicit pair or every pair of A generators.
    std::vector<std::pair<std::string, std::string>> todo;
    if (cmd.contains("a1")) {
      todo.emplace_back(require_string(cmd, "a1"), require_string(cmd, "a2"));
    } else {
      for (const auto& g1 : d.A().alphabet->generators())
        for (const auto& g2 : d.A().alphabet->generators()) todo.emplace_back(g1.name, g2.name);
    }
    for (const auto& [x, y] : todo) {
      bool v = verify_representation(d, parse_expression(x, d.alphabet()), parse_expression(y, d.alphabet()), cutoff,
                                     normalize_);
      if (!v) pairs.push_back(x + " , " + y);
      ok = ok && v;
    }
    auto unit = op_matrix(d, NCPoly::constant(d.alphabet(), Scalar(1)), cutoff, normalize_);
    bool unit_ok = unit.entries == ScalarMatrix::identity(unit.entries.dim());
    r["pairs_checked"] = todo.size();
    r["failing_pairs"] = pairs;
    r["unit_is_identity"] = unit_ok;
    return ok && unit_ok;
  }

  Assignment assignment_of(const json& j) {
    Assignment a;
    for (const auto& [n, v] : j.items()) {
      auto p = Param::find(n);
      if (!p) input_error("unknown parameter '" + n + "'");
      a[*p] = scalar_of(v);
    }
    return a;
  }

  bool cmd_specialize(const json& cmd, json& r) {
    const DoubleSpec& d = double_ref(cmd);
    DoubleSpec s = specialize(d, assignment_of(require(cmd, "assign")));
    r["rules"] = rules_json(s.system());
    std::string as = value_or<std::string>(cmd, "as", "");
    if (!as.empty()) doubles_.insert_or_assign(as, std::move(s));
    return true;
  }

  bool cmd_catalog(const json& cmd, json& r) {
    std::string action = value_or<std::string>(cmd, "action", "list");
    if (action == "list") {
      r["entries"] = json::parse(catalog_list_json());
      return true;
    }
    if (action == "build" || action == "export") {
      std::string name = require_string(cmd, "name");
      CatalogParams p = catalog_params(cmd.value("params", json::object()));
      CatalogEntry e = catalog_build(name, p);
      if (action == "export") r["definition"] = json::parse(catalog_export_json(name, p));
      if (e.dbl) r["rules"] = e.dbl->system().rules().size();
      std::string as = value_or<std::string>(cmd, "as", "");
      if (!as.empty()) {
        if (e.dbl) doubles_.insert_or_assign(as, *e.dbl);
        for (auto& [n, a] : e.algebras) algebras_.insert_or_assign(as + "." + n, a);
      }
      return true;
    }
    if (action == "check") return catalog_check(cmd, r);
    input_error("catalog action must be list, build, export or check");
  }

  // σ-consistency of every catalog double at every size in the sweep.
  bool catalog_check(const json& cmd, json& r) {
    std::vector<std::size_t> sizes{1, 2};
    if (long_suites_) sizes.push_back(3);
    std::vector<std::string> rs = value_or<std::vector<std::string>>(cmd, "r", {"dj_hecke"});
    std::size_t overlap = value_or<std::size_t>(cmd, "overlap", 3);
    json rows = json::array();
    bool ok = true;
    for (const auto& info : catalog_list()) {
      if (!info.is_double) continue;
      for (const auto& v : info.variants)
        for (std::size_t N : sizes)
          for (const auto& rname : rs) {
            if (info.name == "u2_calculus" || info.name == "jackson") {
              if (N != 2 || rname != rs.front()) continue;
            }
            CatalogParams p;
            p.N = N;
            p.m = N;
            p.variant = v;
            p.r = rname;
            DoubleSpec d = *catalog_build(info.name, p).dbl;
            auto rep = check_sigma_consistency(d, overlap, normalize_);
            json row = {{"entry", info.name}, {"variant", v}, {"N", N}, {"r", rname},
                        {"unresolved", rep.unresolved.size()}};
            if (!rep.confluent())
              row["first"] = rep.unresolved.front().overlap.to_string(*d.alphabet()) + " : " +
                             rep.unresolved.front().difference.to_string();
            ok = ok && rep.confluent();
            rows.push_back(row);
          }
    }
    r["checks"] = rows;
    return ok;
  }

  bool cmd_verify(const json& cmd, json& r) {
    std::string what = require_string(cmd, "what");
    if (what == "proposition3" || what == "iso-re") {
      ScalarMatrix R = cmd.contains("matrix") ? matrix_ref(cmd.at("matrix")) : dj_hecke(value_or<std::size_t>(cmd, "N", 2));
      int bound = value_or<int>(cmd, "degree_bound", what == "iso-re" ? std::min(degree_bound_, 3) : degree_bound_);
      MembershipOptions o = membership_for(cmd);
      if (what == "proposition3") {
        auto v = verify_proposition3(R, bound, o);
        r["verdicts"] = verdicts_json(v);
        return v.all_member();
      }
      auto v = verify_iso_re(R, bound, o);
      r["forward"] = verdicts_json(v.forward);
      r["backward"] = verdicts_json(v.backward);
      return v.forward.all_member() && v.backward.all_member();
    }
    if (what == "coproduct") {
      std::size_t N = value_or<std::size_t>(cmd, "N", 2);
      int cutoff = value_or<int>(cmd, "cutoff", 3);
      std::string form = value_or<std::string>(cmd, "form", "consistent");
      if (form != "consistent" && form != "literal") input_error("form must be 'consistent' or 'literal'");
      bool leibniz = verify_coproduct_leibniz(
          N, cutoff, form == "literal" ? CoproductForm::Literal : CoproductForm::Consistent);
      bool classical = verify_coproduct_classical_limit(N, cutoff);
      r["leibniz"] = leibniz;
      r["classical_limit"] = classical;
      return leibniz && classical;
    }
    if (what == "u2" || what == "limits") {
      auto checks = what == "u2" ? u2_structures(value_or<int>(cmd, "cutoff", 3))
                                 : verify_limits(value_or<std::size_t>(cmd, "N", 2));
      json rows = json::array();
      bool ok = true;
      for (const auto& c : checks) {
        json row = {{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(row);
        ok = ok && c.ok;
      }
      r["checks"] = rows;
      return ok;
    }
    input_error("verify 'what' must be proposition3, iso-re, coproduct, u2 or limits");
  }

  bool cmd_ideal_member(const json& cmd, json& r) {
    std::vector<NCPoly> rels;
    AlphabetPtr a;
    if (cmd.contains("double")) {
      const DoubleSpec& d = double_ref(cmd);
      rels = d.all_relations();
      a = d.alphabet();
    } else {
      Presentation p = algebra_from(require(cmd, "algebra"));
      rels = p.relations;
      a = p.alphabet;
    }
    NCPoly e = parse_expression(require_string(cmd, "element"), a);
    MembershipOptions o = membership_for(cmd);
    int bound = value_or<int>(cmd, "degree_bound", degree_bound_);
    Membership m = ideal_membership(rels, e, bound, o);
    r["verdict"] = to_string(m);
    r["degree_bound"] = bound;
    r["mode"] = to_string(o.mode);
    r["seed"] = o.seed;
    return m == Membership::Member;
  }

  const json& doc_;
  NormalizeOptions normalize_;
  MembershipOptions membership_;
  int degree_bound_ = kDefaultDegreeBound;
  bool long_suites_ = false;
  std::map<std::string, ScalarMatrix> matrices_;
  std::map<std::string, Presentation> algebras_;
  std::map<std::string, DoubleSpec> doubles_;
};

}  // namespace

SessionResult run_session(std::string_view document, const SessionOptions& options) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    json report = {{"error", std::string("malformed document: ") + e.what()},
                   {"exit_code", static_cast<int>(ExitCode::InputError)}};
    return {report.dump(2) + "\n", ExitCode::InputError};
  }
  if (!doc.is_object()) {
    json report = {{"error", "document must be a JSON object"}, {"exit_code", static_cast<int>(ExitCode::InputError)}};
    return {report.dump(2) + "\n", ExitCode::InputError};
  }
  // Settings are read before any command runs; bad settings are input errors.
  try {
    Session s(doc, options);
    return s.run();
  } catch (const Error& e) {
    json report = {{"error", e.what()}, {"exit_code", static_cast<int>(exit_for(e))}};
    return {report.dump(2) + "\n", exit_for(e)};
  }
}

std::string catalog_list_json() {
  json out = json::array();
  for (const auto& c : catalog_list())
    out.push_back({{"name", c.name}, {"signature", c.signature}, {"summary", c.summary}, {"variants", c.variants}});
  return out.dump();
}

std::string catalog_export_json(const std::string& name, const CatalogParams& params) {
  CatalogEntry e = catalog_build(name, params);
  json out;
  out["name"] = name;
  out["params"] = {{"N", params.N}, {"m", params.m}, {"r", params.r}, {"variant", params.variant}};
  if (e.dbl) out["double"] = double_json(*e.dbl);
  if (!e.algebras.empty()) {
    json algs = json::object();
    for (const auto& [n, p] : e.algebras) algs[n] = presentation_json(p);
    out["algebras"] = algs;
  }
  return out.dump(2);
}

}  // namespace ncd
