#include "fluctua/cli_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "fluctua/laws.hpp"
#include "fluctua/special.hpp"

namespace fluctua {

std::uint64_t default_master_seed(std::uint64_t fallback) {
  const char* env = std::getenv("FLUCTUA_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 0);
  if (end == env || *end != '\0') return fallback;
  return v;
}

void apply_json(McRunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("config root must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "family.kind")
      cfg.family_kind = value.get<std::string>();
    else if (key == "family.p")
      cfg.family_p = value.get<double>();
    else if (key == "family.delta")
      cfg.family_delta = value.get<double>();
    else if (key == "family.sigma2")
      cfg.family_sigma2 = value.get<double>();
    else if (key == "family.half_width")
      cfg.family_half_width = value.get<double>();
    else if (key == "family.offsets")
      cfg.family_offsets = value.get<std::vector<int>>();
    else if (key == "family.probs")
      cfg.family_probs = value.get<std::vector<double>>();
    else if (key == "functional")
      cfg.functional = value.get<std::string>();
    else if (key == "level")
      cfg.level = value.get<double>();
    else if (key == "horizon")
      cfg.horizon = value.get<std::uint64_t>();
    else if (key == "n_paths")
      cfg.n_paths = value.get<std::uint64_t>();
    else if (key == "seed")
      cfg.seed = value.get<std::uint64_t>();
    else if (key == "workers")
      cfg.workers = value.get<unsigned>();
    else if (key == "rule.epsilon")
      cfg.rule_epsilon = value.get<double>();
    else if (key == "rule.max_steps")
      cfg.rule_max_steps = value.get<std::uint64_t>();
    else if (key == "target.law")
      cfg.target_law = value.get<std::string>();
    else if (key == "target.scale")
      cfg.target_scale = value.get<double>();
    else if (key == "target.spacing")
      cfg.target_spacing = value.get<double>();
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
}

nlohmann::json to_json(const McRunConfig& cfg) {
  nlohmann::json j;
  j["family.kind"] = cfg.family_kind;
  j["family.p"] = cfg.family_p;
  j["family.delta"] = cfg.family_delta;
  j["family.sigma2"] = cfg.family_sigma2;
  j["family.half_width"] = cfg.family_half_width;
  if (!cfg.family_offsets.empty()) {
    j["family.offsets"] = cfg.family_offsets;
    j["family.probs"] = cfg.family_probs;
  }
  j["functional"] = cfg.functional;
  j["level"] = cfg.level;
  j["horizon"] = cfg.horizon;
  j["n_paths"] = cfg.n_paths;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["rule.epsilon"] = cfg.rule_epsilon;
  j["rule.max_steps"] = cfg.rule_max_steps;
  if (!cfg.target_law.empty()) {
    j["target.law"] = cfg.target_law;
    j["target.scale"] = cfg.target_scale;
    j["target.spacing"] = cfg.target_spacing;
  }
  return j;
}

std::uint64_t config_digest(const McRunConfig& cfg) {
  return fnv1a(std::string_view(to_json(cfg).dump()));
}

StepFamily build_family(const McRunConfig& cfg) {
  if (cfg.family_kind == "pm1") return StepFamily::pm1(cfg.family_p);
  if (cfg.family_kind == "normal")
    return StepFamily::shift_normal(cfg.family_delta, cfg.family_sigma2);
  if (cfg.family_kind == "uniform")
    return StepFamily::shift_uniform(cfg.family_delta, cfg.family_half_width);
  if (cfg.family_kind == "tilted_normal")
    return StepFamily::tilted_normal(cfg.family_p);
  if (cfg.family_kind == "lattice" || cfg.family_kind == "tilted_lattice") {
    LatticeStepLaw base(cfg.family_offsets, cfg.family_probs);
    return cfg.family_kind == "lattice"
               ? StepFamily::lattice(base)
               : StepFamily::tilted_lattice(base, cfg.family_p);
  }
  throw unsupported_family_error("unknown family kind: " + cfg.family_kind);
}

SimulationConfig build_simulation(const McRunConfig& cfg) {
  SimulationConfig sim;
  sim.family = build_family(cfg);
  if (cfg.functional == "z0")
    sim.functional = Functional::z0;
  else if (cfg.functional == "z_level")
    sim.functional = Functional::z_level;
  else if (cfg.functional == "min")
    sim.functional = Functional::min_depth;
  else if (cfg.functional == "last_zero")
    sim.functional = Functional::last_zero;
  else if (cfg.functional == "zeros_count")
    sim.functional = Functional::zeros_count;
  else if (cfg.functional == "last_return")
    sim.functional = Functional::last_return;
  else
    throw std::invalid_argument("unknown functional: " + cfg.functional);
  sim.level = cfg.level;
  sim.horizon = cfg.horizon;
  sim.n_paths = cfg.n_paths;
  sim.seed = cfg.seed;
  sim.workers = cfg.workers;
  bool needs_rule = sim.functional == Functional::z0 ||
                    sim.functional == Functional::z_level ||
                    sim.functional == Functional::min_depth ||
                    ((sim.functional == Functional::zeros_count ||
                      sim.functional == Functional::last_return) &&
                     sim.horizon == 0);
  if (needs_rule)
    sim.rule = StoppingRule::for_family(sim.family, cfg.rule_epsilon,
                                        cfg.rule_max_steps);
  return sim;
}

std::function<double(double)> named_cdf(const std::string& name) {
  if (name == "A") return [](double x) { return LawA::cdf(x); };
  if (name == "gamma_half")
    return [](double x) { return GammaHalfLaw::cdf(x); };
  if (name == "arcsine") return [](double x) { return ArcsineLaw::cdf(x); };
  if (name == "exp1")
    return [](double x) { return ExponentialLaw{1.0}.cdf(x); };
  if (name == "half_normal")
    return [](double x) { return HalfNormalLaw::cdf(x); };
  throw std::invalid_argument("unknown target law: " + name);
}

std::vector<double> parse_grid(const std::string& pattern) {
  double a = 0.0, b = 0.0;
  long n = 0;
  char tail = '\0';
  int got = std::sscanf(pattern.c_str(), "%lf:%lf:%ld%c", &a, &b, &n, &tail);
  if (got != 3 || n < 1)
    throw std::invalid_argument("grid must look like a:b:n with n >= 1");
  std::vector<double> xs(std::size_t(n), 0.0);
  if (n == 1) {
    xs[0] = a;
    return xs;
  }
  for (long i = 0; i < n; ++i)
    xs[std::size_t(i)] = a + (b - a) * double(i) / double(n - 1);
  return xs;
}

}  // namespace fluctua
