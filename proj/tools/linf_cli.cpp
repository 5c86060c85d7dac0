#include "linf/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"linf: exact checks of L-infinity structures, morphisms and homotopy comoment maps"};
  app.require_subcommand(1);

  linf::JobConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", cfg.inputs, "JSON instance file")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-arity", cfg.max_arity, "highest arity to check");
    sub->add_option("--poly-degree", cfg.poly_degree, "polynomial degree bound D");
    sub->add_option("--samples", cfg.samples, "tuples sampled per arity above the exhaustive limit");
    sub->add_option("--exhaustive-limit", cfg.exhaustive_limit, "largest tuple count checked exhaustively");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
  };
  add_common(app.add_subcommand("check-linfty", "check the generalized Jacobi identities"), true);
  add_common(app.add_subcommand("check-morphism", "check the embedding of the observables"), true);
  add_common(app.add_subcommand("comoment", "verify a homotopy comoment map"), true);
  add_common(app.add_subcommand("pentagon", "check the gauge compatibility of comoments"), true);
  auto* tables = app.add_subcommand("tables", "Bernoulli numbers and embedding coefficients");
  add_common(tables, false);
  tables->add_option("--trunc", cfg.trunc, "largest index K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  linf::JobResult r = linf::run_job(cfg);
  std::string text = r.report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    out << text;
  }
  if (r.exit_code == 2 && r.report.contains("error")) std::cerr << "error: " << r.report["error"].get<std::string>() << "\n";
  return r.exit_code;
}
