// Batch verification runner: executes the configured check suites and emits
// structured reports (json/csv/text) plus the scattering phase/witness table.
//
// Exit codes: 0 all hard checks pass, 1 at least one hard failure,
// 2 configuration or usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "warpcon/config.hpp"
#include "warpcon/report_io.hpp"
#include "warpcon/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "warpcon: verification batteries for warped-convolution deformations on finite spectral "
      "models"};
  std::string config_path;
  std::string suite_name = "all";
  std::string out_path;
  std::string format_name = "text";
  std::uint64_t seed = 0;
  std::vector<double> kappas;
  int dim = 0;

  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--suite", suite_name, "geometry|lemmas|axioms|scattering|germ|all")
      ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "random seed override");
  app.add_option("--kappa", kappas, "deformation strength override (repeatable)");
  auto* dim_opt = app.add_option("--dim", dim, "spacetime dimension override");
  app.add_option("--out", out_path, "output file (stdout when omitted)");
  app.add_option("--format", format_name, "json|csv|text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    warpcon::RunConfig cfg;
    if (!config_path.empty()) cfg = warpcon::load_config(config_path);
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (!kappas.empty()) cfg.kappas = kappas;
    if (dim_opt->count() > 0) cfg.dimension = dim;
    cfg.validate();

    const auto suite = warpcon::suites::suite_from_string(suite_name);
    const auto format = warpcon::format_from_string(format_name);
    const auto result = warpcon::suites::run_suite(cfg, suite);
    const std::string rendered = warpcon::render_report(result.reports, format);

    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      warpcon::write_file(out_path, rendered);
      if (!result.phase_table.empty()) {
        std::string stem = out_path;
        if (const auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
        warpcon::write_file(stem + "_phases.csv",
                            warpcon::render_phase_csv(result.phase_table));
      }
    }
    return warpcon::all_hard_checks_pass(result.reports) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
