#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fluctua/mc.hpp"

namespace fluctua {

// Run configuration for the simulation subcommand.  Fields mirror the flat
// dotted JSON keys one-to-one ("family.kind", "rule.epsilon", ...); command
// line flags carry the same names and override file values.
struct McRunConfig {
  std::string family_kind = "pm1";
  double family_p = 0.6;  // pm1 up-probability, or tilt parameter
  double family_delta = 0.05;
  double family_sigma2 = 1.0;
  double family_half_width = 1.0;
  std::vector<int> family_offsets;
  std::vector<double> family_probs;
  std::string functional = "z0";
  double level = 0.0;
  std::uint64_t horizon = 0;
  std::uint64_t n_paths = 10000;
  std::uint64_t seed = 0x5eedba5e;
  unsigned workers = 1;
  double rule_epsilon = 1e-9;
  std::uint64_t rule_max_steps = 100'000'000;
  std::string target_law;  // empty disables the comparison
  double target_scale = 1.0;
  double target_spacing = 0.0;
};

// FLUCTUA_SEED environment variable, or the fallback when unset/unparsable
std::uint64_t default_master_seed(std::uint64_t fallback = 0x5eedba5e);

// overlays flat dotted keys onto cfg; unknown keys throw invalid_argument
void apply_json(McRunConfig& cfg, const nlohmann::json& j);

nlohmann::json to_json(const McRunConfig& cfg);

// digest of the canonical dump of the resolved config
std::uint64_t config_digest(const McRunConfig& cfg);

// throws unsupported_family_error for an unknown kind
StepFamily build_family(const McRunConfig& cfg);

// full simulation setup, including the stopping rule where the functional
// needs one; throws on unknown functional names
SimulationConfig build_simulation(const McRunConfig& cfg);

// cdf of a named comparison law: A, gamma_half, arcsine, exp1, half_normal
std::function<double(double)> named_cdf(const std::string& name);

// "a:b:n" -> n evenly spaced points from a to b inclusive
std::vector<double> parse_grid(const std::string& pattern);

}  // namespace fluctua
