#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fluctua/lattice.hpp"
#include "fluctua/rng.hpp"
#include "fluctua/stats.hpp"

namespace fluctua {

struct unsupported_family_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Step distribution of the walk.  Tilted constructors reweight a base law
// by e^{p x} (exact mean shift for the normal base; pmf reweighting for
// lattice bases); other bases have no exact tilted sampler and are
// rejected.
struct StepFamily {
  enum class Kind { normal, uniform, pm1, lattice };

  Kind kind = Kind::normal;
  double delta = 0.0;   // step mean
  double sigma2 = 1.0;  // step variance
  double shift = 0.0;       // normal mean / uniform center
  double half_width = 0.0;  // uniform
  double p_up = 0.0;        // pm1
  std::optional<LatticeStepLaw> law;

  static StepFamily shift_normal(double delta, double sigma2);
  static StepFamily shift_uniform(double delta, double half_width);
  static StepFamily pm1(double p);
  static StepFamily lattice(const LatticeStepLaw& law);
  static StepFamily tilted_normal(double p);
  static StepFamily tilted_lattice(const LatticeStepLaw& base, double p);

  double sample(Rng& rng) const;
  bool integer_valued() const { return kind == Kind::pm1 || kind == Kind::lattice; }
  std::string describe() const;
};

// tilt parameter hitting a target drift, by bisection on the tilted mean
// (monotone in the tilt)
double tilt_for_drift(const LatticeStepLaw& base, double target_delta);
double tilt_for_drift_normal(double target_delta);

// Positive root of E e^{-theta Y} = 1.  Requires positive drift and some
// negative support; families with almost surely positive steps return
// +infinity (nothing below zero to bound).  e^{-theta* x} bounds the
// probability that the walk ever drops x below its running maximum.
double lundberg_exponent(const StepFamily& family);

struct StoppingRule {
  double theta_star = 0.0;
  double epsilon = 1e-9;
  std::uint64_t max_steps = 100'000'000;

  // stop height: a path this far above the level returns below it with
  // probability at most epsilon
  double barrier() const;

  static StoppingRule for_family(const StepFamily& family,
                                 double epsilon = 1e-9,
                                 std::uint64_t max_steps = 100'000'000);
};

// last_zero / zeros_count / last_return walk on the integer lattice and
// need the pm1 family; zeros_count doubles as the joint (count, last time)
// observable through SimResult::secondary
enum class Functional {
  z0,          // #{n : S_n < 0}
  z_level,     // #{n : S_n < level}
  min_depth,   // -min_n S_n  (>= 0)
  last_zero,   // max{k <= horizon : S_k = 0}
  zeros_count, // #{n : S_n = 0}; horizon 0 means run to the barrier
  last_return  // max{n : S_n = 0}; horizon 0 means run to the barrier
};

struct SimulationConfig {
  StepFamily family;
  Functional functional = Functional::z0;
  double level = 0.0;         // z_level
  std::uint64_t horizon = 0;  // last_zero / zeros_count / last_return
  std::size_t n_paths = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  StoppingRule rule;
};

struct SimResult {
  std::vector<double> primary;    // one value per path, in path index order
  std::vector<double> secondary;  // zeros_count/last_return: the other half
                                  // of the (count, last time) pair
  std::size_t exhausted = 0;      // paths that hit max_steps before stopping
};

// Per-path randomness depends only on (seed, path index): results are
// bit-identical for any worker count.
SimResult simulate(const SimulationConfig& cfg);

std::uint64_t sample_digest(const std::vector<double>& values);

// (value + spacing * U) * scale with U drawn from a jitter-only stream of
// the same master seed; spacing 0 leaves lattice values as they are
EmpiricalSample scaled_sample(const SimResult& result,
                              const SimulationConfig& cfg, double spacing,
                              double scale, bool use_secondary = false);

struct StudyPoint {
  SimulationConfig config;
  double spacing = 0.0;  // jitter grid spacing of the raw functional
  double scale = 1.0;    // multiplier taking the raw functional to limit units
};

// one KS report per point, in order, against the limit cdf
std::vector<KSReport> convergence_study(
    const std::vector<StudyPoint>& points,
    const std::function<double(double)>& target_cdf);

}  // namespace fluctua
