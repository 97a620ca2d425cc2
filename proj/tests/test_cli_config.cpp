#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"

#include "fluctua/cli_config.hpp"

using namespace fluctua;

TEST_SUITE("cli_config") {

TEST_CASE("json overlay") {
  McRunConfig cfg;
  nlohmann::json j = {{"family.kind", "normal"},
                      {"family.delta", 0.25},
                      {"functional", "min"},
                      {"n_paths", 5000},
                      {"seed", 42},
                      {"rule.epsilon", 1e-6},
                      {"target.law", "exp1"},
                      {"target.scale", 0.5}};
  apply_json(cfg, j);
  CHECK(cfg.family_kind == "normal");
  CHECK(cfg.family_delta == 0.25);
  CHECK(cfg.functional == "min");
  CHECK(cfg.n_paths == 5000);
  CHECK(cfg.seed == 42);
  CHECK(cfg.rule_epsilon == 1e-6);
  CHECK(cfg.target_law == "exp1");
  CHECK(cfg.target_scale == 0.5);
  // untouched fields keep their defaults
  CHECK(cfg.family_p == 0.6);
  CHECK(cfg.workers == 1);
}

TEST_CASE("unknown keys are rejected") {
  McRunConfig cfg;
  CHECK_THROWS_AS(apply_json(cfg, {{"n_path", 10}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_json(cfg, nlohmann::json::array()),
                  std::invalid_argument);
}

TEST_CASE("round trip through json") {
  McRunConfig cfg;
  cfg.family_kind = "lattice";
  cfg.family_offsets = {-1, 2};
  cfg.family_probs = {0.7, 0.3};
  cfg.functional = "z_level";
  cfg.level = 2.0;
  cfg.n_paths = 777;
  cfg.target_law = "A";
  cfg.target_spacing = 1.0;
  McRunConfig back;
  apply_json(back, to_json(cfg));
  CHECK(config_digest(back) == config_digest(cfg));
  CHECK(back.family_offsets == cfg.family_offsets);
  CHECK(back.family_probs == cfg.family_probs);
  // defaults serialize without the optional vectors
  nlohmann::json plain = to_json(McRunConfig{});
  CHECK_FALSE(plain.contains("family.offsets"));
  CHECK_FALSE(plain.contains("target.law"));
  CHECK(plain.contains("family.kind"));
}

TEST_CASE("digest tracks content") {
  McRunConfig a, b;
  CHECK(config_digest(a) == config_digest(b));
  b.seed = 1;
  CHECK(config_digest(a) != config_digest(b));
}

TEST_CASE("environment seed") {
  unsetenv("FLUCTUA_SEED");
  CHECK(default_master_seed(7) == 7);
  setenv("FLUCTUA_SEED", "12345", 1);
  CHECK(default_master_seed(7) == 12345);
  setenv("FLUCTUA_SEED", "0x10", 1);
  CHECK(default_master_seed(7) == 16);
  setenv("FLUCTUA_SEED", "grit", 1);
  CHECK(default_master_seed(7) == 7);
  unsetenv("FLUCTUA_SEED");
}

TEST_CASE("family and simulation builders") {
  McRunConfig cfg;
  cfg.family_kind = "pm1";
  cfg.family_p = 0.58;
  StepFamily f = build_family(cfg);
  CHECK(f.kind == StepFamily::Kind::pm1);
  CHECK(f.delta == doctest::Approx(0.16).epsilon(1e-14));
  cfg.family_kind = "warp";
  CHECK_THROWS_AS(build_family(cfg), unsupported_family_error);

  McRunConfig sim;
  sim.functional = "min";
  SimulationConfig built = build_simulation(sim);
  CHECK(built.functional == Functional::min_depth);
  CHECK(built.rule.theta_star > 0.0);
  CHECK(built.n_paths == sim.n_paths);
  sim.functional = "levitate";
  CHECK_THROWS_AS(build_simulation(sim), std::invalid_argument);
  // horizon-bounded zero functionals skip the stopping rule
  McRunConfig lz;
  lz.functional = "last_zero";
  lz.horizon = 10;
  SimulationConfig built_lz = build_simulation(lz);
  CHECK(built_lz.horizon == 10);
}

TEST_CASE("named comparison laws") {
  CHECK(named_cdf("exp1")(1.0) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(named_cdf("gamma_half")(0.5) ==
        doctest::Approx(std::erf(std::sqrt(0.5))));
  CHECK(named_cdf("A")(1.0) == doctest::Approx(0.943209876270).epsilon(1e-9));
  CHECK(named_cdf("arcsine")(0.5) == doctest::Approx(0.5));
  CHECK(named_cdf("half_normal")(1.0) ==
        doctest::Approx(std::erf(1.0 / std::sqrt(2.0))));
  CHECK_THROWS_AS(named_cdf("cauchy"), std::invalid_argument);
}

TEST_CASE("grid parsing") {
  auto g = parse_grid("0:1:5");
  REQUIRE(g.size() == 5);
  CHECK(g[0] == 0.0);
  CHECK(g[1] == doctest::Approx(0.25));
  CHECK(g[4] == 1.0);
  auto single = parse_grid("2.5:9:1");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 2.5);
  CHECK_THROWS_AS(parse_grid("oops"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2:3:4"), std::invalid_argument);
}

}  // TEST_SUITE
