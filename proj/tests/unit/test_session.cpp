#include "doctest.h"
#include "json.hpp"
#include "ncdouble/session.hpp"

using namespace ncd;
using nlohmann::json;

namespace {

const char* kWeyl = R"({
  "algebras": {
    "B": {"generators": ["x"], "relations": []},
    "A": {"generators": ["d"], "relations": [], "counit": {"d": 0}}
  },
  "doubles": {"W": {"A": "A", "B": "B", "permutation": ["d*x - x*d - 1"]}},
  "commands": [
    {"op": "normalize", "double": "W", "expr": "d x^4"},
    {"op": "act", "double": "W", "a": "d^2", "b": "x^4", "want": "12 x^2"},
    {"op": "ideal-member", "double": "W", "element": "d x x - x x d - 2 x", "degree_bound": 3}
  ]
})";

json report_of(const SessionResult& r) { return json::parse(r.report); }

}  // namespace

TEST_SUITE("session") {
  TEST_CASE("a passing document") {
    SessionResult r = run_session(kWeyl);
    CHECK(r.exit_code == ExitCode::Pass);
    json rep = report_of(r);
    CHECK(rep["exit_code"] == 0);
    CHECK(rep["seed"] == kDefaultSeed);
    REQUIRE(rep["results"].size() == 3);
    CHECK(rep["results"][0]["normal_form"] == "x x x x d + 4 x x x");
    CHECK(rep["results"][1]["result"] == "12 x x");
    CHECK(rep["results"][2]["verdict"] == "Member");
  }

  TEST_CASE("reports are byte-identical across runs") {
    std::string doc = R"({
      "doubles": {"U": {"catalog": "u2_calculus"}, "R": {"catalog": "re_re", "params": {"N": 2, "variant": "ii"}}},
      "commands": [
        {"op": "consistency", "double": "U", "overlap": 3},
        {"op": "consistency", "double": "R", "overlap": 3},
        {"op": "verify", "what": "proposition3", "N": 2}
      ]
    })";
    SessionResult a = run_session(doc), b = run_session(doc);
    CHECK(a.exit_code == ExitCode::Pass);
    CHECK(a.report == b.report);
    SessionOptions o;
    o.seed = 5;
    SessionResult c = run_session(doc, o);
    CHECK(report_of(c)["seed"] == 5);
  }

  TEST_CASE("a failed verification gives exit code 1") {
    SessionResult r = run_session(R"({
      "doubles": {"U": {"catalog": "u2_calculus", "params": {"variant": "corrupted"}}},
      "commands": [{"op": "consistency", "double": "U", "overlap": 3}]
    })");
    CHECK(r.exit_code == ExitCode::VerificationFailed);
    json rep = report_of(r);
    CHECK(rep["results"][0]["ok"] == false);
  }

  TEST_CASE("expected failures pass") {
    SessionResult r = run_session(R"({
      "doubles": {"U": {"catalog": "u2_calculus", "params": {"variant": "corrupted"}}},
      "commands": [{"op": "consistency", "double": "U", "overlap": 3, "expect": false}]
    })");
    CHECK(r.exit_code == ExitCode::Pass);
  }

  TEST_CASE("mathematical errors fail only their command") {
    SessionResult r = run_session(R"({
      "matrices": {"Z": {"entries": [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]}},
      "commands": [
        {"op": "skew-inverse", "matrix": "Z"},
        {"op": "check-braid", "matrix": {"builtin": "dj_hecke", "N": 2}}
      ]
    })");
    CHECK(r.exit_code == ExitCode::VerificationFailed);
    json rep = report_of(r);
    REQUIRE(rep["results"].size() == 2);
    CHECK(rep["results"][0]["passed"] == false);
    CHECK(rep["results"][1]["passed"] == true);
  }

  TEST_CASE("input errors give exit code 2") {
    for (const char* doc : {
             "{",
             R"({"commands": [{"op": "frobnicate"}]})",
             R"({"algebras": {"A": {"generators": ["x"], "relations": ["x*w"]}}})",
             R"({"algebras": {"A": {"generators": ["x", "x"], "relations": []}}})",
             R"({"algebras": {"A": {"generators": ["x"], "relations": ["x*(x"]}}})",
             R"({"doubles": {"D": {"catalog": "nope"}}})",
         }) {
      CAPTURE(doc);
      SessionResult r = run_session(doc);
      CHECK(r.exit_code == ExitCode::InputError);
      CHECK(report_of(r).contains("error"));
    }
  }

  TEST_CASE("resource errors give exit code 3") {
    SessionOptions o;
    o.fuel = 5;
    SessionResult r = run_session(kWeyl, o);
    CHECK(r.exit_code == ExitCode::ResourceExceeded);
    CHECK(report_of(r)["error"].get<std::string>().find("FuelExhausted") != std::string::npos);

    SessionResult b = run_session(R"({
      "algebras": {"A": {"generators": ["x"], "relations": ["x x"]}},
      "commands": [{"op": "ideal-member", "algebra": "A", "element": "x x x x", "degree_bound": 2}]
    })");
    CHECK(b.exit_code == ExitCode::ResourceExceeded);
  }

  TEST_CASE("catalog export re-imports") {
    CatalogParams p;
    p.N = 2;
    json def = json::parse(catalog_export_json("matrix_hw", p));
    json doc = {{"doubles", {{"D", def["double"]}}},
                {"commands", json::array({{{"op", "consistency"}, {"double", "D"}, {"overlap", 3}},
                                          {{"op", "verify-rep"}, {"double", "D"}, {"cutoff", 2}}})}};
    SessionResult r = run_session(doc.dump());
    CHECK(r.exit_code == ExitCode::Pass);
    CHECK(json::parse(catalog_list_json()).size() == catalog_list().size());
  }
}
