#include <iostream>

#include "CLI11.hpp"

#include "fluctua/acceptance.hpp"
#include "fluctua/cli_config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance gate: one pass/fail line per criterion"};
  fluctua::AcceptanceOptions opt;
  opt.seed = fluctua::default_master_seed(opt.seed);
  app.add_option("--seed", opt.seed, "master seed");
  app.add_option("--epsilon", opt.epsilon, "stopping-rule residual budget");
  app.add_option("--paths-scale", opt.paths_scale, "scale every path count");
  app.add_option("--workers", opt.workers, "simulation worker threads");
  app.add_option("--only", opt.only, "run only the named criteria")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  try {
    auto results = fluctua::run_acceptance(opt, std::cout);
    return fluctua::all_passed(results) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
