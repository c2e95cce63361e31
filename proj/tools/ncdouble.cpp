// Command line front end: runs JSON session documents and queries the catalog.
#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "ncdouble/session.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubles of associative algebras: rewriting, consistency and operator checks"};
  app.require_subcommand(0, 1);

  ncd::SessionOptions opts;
  std::uint64_t fuel = 0, seed = 0;
  int degree_bound = 0;
  std::string mode;
  std::string input = "-";

  auto* run = app.add_subcommand("run", "run a session document (the default)");
  for (CLI::App* a : {static_cast<CLI::App*>(&app), run}) {
    a->add_option("--fuel", fuel, "rewrite steps allowed per normalization");
    a->add_option("--degree-bound", degree_bound, "degree bound for ideal membership");
    a->add_option("--mode", mode, "membership mode")->check(CLI::IsMember({"symbolic", "specialized"}));
    a->add_option("--seed", seed, "seed for specialized membership");
    a->add_flag("--long", opts.long_suites, "include N = 3 in catalog sweeps");
  }
  run->add_option("file", input, "session document, '-' for stdin");

  auto* catalog = app.add_subcommand("catalog", "list or export catalog entries");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list entries as JSON");
  auto* exp = catalog->add_subcommand("export", "export an entry as a document definition");
  std::string name;
  ncd::CatalogParams params;
  exp->add_option("name", name, "entry name")->required();
  exp->add_option("--N", params.N, "matrix size");
  exp->add_option("--m", params.m, "number of variables (hw)");
  exp->add_option("--r", params.r, "R-matrix")->check(CLI::IsMember({"dj_hecke", "flip"}));
  exp->add_option("--variant", params.variant, "entry variant");

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) {
      if (exp->parsed()) std::cout << ncd::catalog_export_json(name, params) << "\n";
      else std::cout << ncd::catalog_list_json() << "\n";
      return 0;
    }
  } catch (const ncd::Error& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(ncd::ExitCode::InputError);
  }

  if (app.count("--fuel") || run->count("--fuel")) opts.fuel = fuel;
  if (app.count("--seed") || run->count("--seed")) opts.seed = seed;
  if (app.count("--degree-bound") || run->count("--degree-bound")) opts.degree_bound = degree_bound;
  if (!mode.empty()) opts.mode = mode == "symbolic" ? ncd::MembershipMode::Symbolic : ncd::MembershipMode::Specialized;

  std::string doc;
  if (input == "-") {
    doc = read_all(std::cin);
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "cannot open " << input << "\n";
      return static_cast<int>(ncd::ExitCode::InputError);
    }
    doc = read_all(f);
  }
  ncd::SessionResult r = ncd::run_session(doc, opts);
  std::cout << r.report;
  return static_cast<int>(r.exit_code);
}
