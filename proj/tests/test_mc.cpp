#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fluctua/fluctuation.hpp"
#include "fluctua/mc.hpp"
#include "fluctua/special.hpp"

using namespace fluctua;

namespace {

SimulationConfig base_config(StepFamily family, Functional fn,
                             std::size_t n_paths, std::uint64_t seed) {
  SimulationConfig cfg;
  cfg.family = family;
  cfg.functional = fn;
  cfg.n_paths = n_paths;
  cfg.seed = seed;
  cfg.rule = StoppingRule::for_family(family);
  return cfg;
}

// root of E e^{-theta Y} = 1 found by plain bisection, as a cross-check
double bisect_root(const std::function<double(double)>& mgf_neg) {
  double lo = 1e-12, hi = 1.0;
  while (mgf_neg(hi) < 1.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (mgf_neg(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("mc") {

TEST_CASE("family factories") {
  StepFamily n = StepFamily::shift_normal(0.3, 2.0);
  CHECK(n.delta == 0.3);
  CHECK(n.sigma2 == 2.0);
  StepFamily u = StepFamily::shift_uniform(0.1, 0.6);
  CHECK(u.delta == doctest::Approx(0.1));
  CHECK(u.sigma2 == doctest::Approx(0.36 / 3.0).epsilon(1e-14));
  StepFamily w = StepFamily::pm1(0.6);
  CHECK(w.delta == doctest::Approx(0.2));
  CHECK(w.integer_valued());
  CHECK_FALSE(n.integer_valued());
  StepFamily t = StepFamily::tilted_normal(0.25);
  CHECK(t.delta == 0.25);
  CHECK(t.sigma2 == 1.0);
  // lattice tilt: reweighting +/-1(1/2) by e^{tx}
  StepFamily tl = StepFamily::tilted_lattice(LatticeStepLaw::pm1(0.5), 0.25);
  double expect = std::exp(0.25) / (std::exp(0.25) + std::exp(-0.25));
  REQUIRE(tl.law.has_value());
  CHECK(tl.law->prob(1) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(tl.delta == doctest::Approx(tl.law->mean()).epsilon(1e-14));
}

TEST_CASE("family sampling moments") {
  for (StepFamily f :
       {StepFamily::shift_normal(0.2, 1.5), StepFamily::shift_uniform(0.1, 1.0),
        StepFamily::pm1(0.58),
        StepFamily::lattice(LatticeStepLaw({-2, 1, 3},
                                           {0.3, 0.5, 0.2}))}) {
    Rng rng(51, 0);
    std::size_t n = 200000;
    double acc = 0.0, acc2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double x = f.sample(rng);
      acc += x;
      acc2 += x * x;
    }
    double mean = acc / double(n);
    double var = acc2 / double(n) - mean * mean;
    CHECK(std::abs(mean - f.delta) <
          5.0 * std::sqrt(f.sigma2 / double(n)));
    CHECK(var == doctest::Approx(f.sigma2).epsilon(0.05));
  }
}

TEST_CASE("tilt solves for a target drift") {
  LatticeStepLaw half = LatticeStepLaw::pm1(0.5);
  double t = tilt_for_drift(half, 0.1);
  CHECK(half.tilt(t).mean() == doctest::Approx(0.1).epsilon(1e-10));
  // the tilted mean is the cumulant derivative at the tilt
  auto cumulant = [&half](double s) {
    return std::log(half.tilt(0.0).prob(1) * std::exp(s) +
                    half.tilt(0.0).prob(-1) * std::exp(-s));
  };
  double h = 1e-5;
  CHECK((cumulant(t + h) - cumulant(t - h)) / (2.0 * h) ==
        doctest::Approx(0.1).epsilon(1e-8));
  CHECK(tilt_for_drift_normal(0.3) == 0.3);
  // drift outside the closed support range has no tilt
  CHECK_THROWS_AS(tilt_for_drift(half, 1.5), unsupported_family_error);
}

TEST_CASE("decay rate closed forms") {
  CHECK(lundberg_exponent(StepFamily::pm1(0.6)) ==
        doctest::Approx(std::log(1.5)).epsilon(1e-14));
  CHECK(lundberg_exponent(StepFamily::shift_normal(0.1, 1.0)) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK(lundberg_exponent(StepFamily::shift_normal(0.3, 2.0)) ==
        doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("decay rate by root finding") {
  StepFamily u = StepFamily::shift_uniform(0.15, 1.0);
  auto mgf = [&u](double th) {
    // uniform on [d-h, d+h]: E e^{-th Y} = e^{-th d} sinh(th h)/(th h)
    double a = th * 1.0;
    return std::exp(-th * 0.15) * std::sinh(a) / a;
  };
  CHECK(lundberg_exponent(u) == doctest::Approx(bisect_root(mgf)).epsilon(1e-9));

  LatticeStepLaw law({-1, 0, 2}, {0.3, 0.3, 0.4});
  StepFamily lf = StepFamily::lattice(law);
  auto mgf_l = [&law](double th) { return law.mgf_neg(th); };
  CHECK(lundberg_exponent(lf) ==
        doctest::Approx(bisect_root(mgf_l)).epsilon(1e-9));

  // no negative support: nothing ever returns below the start
  StepFamily pos = StepFamily::lattice(LatticeStepLaw({1, 2}, {0.5, 0.5}));
  CHECK(std::isinf(lundberg_exponent(pos)));
  StoppingRule rule = StoppingRule::for_family(pos);
  CHECK(rule.barrier() == 0.0);
  CHECK_THROWS_AS(lundberg_exponent(StepFamily::pm1(0.5)), std::domain_error);
}

TEST_CASE("paths with positive steps never dip below zero") {
  StepFamily pos = StepFamily::lattice(LatticeStepLaw({1, 2}, {0.5, 0.5}));
  auto cfg = base_config(pos, Functional::z0, 500, 71);
  SimResult res = simulate(cfg);
  CHECK(res.exhausted == 0);
  for (double v : res.primary) CHECK(v == 0.0);
}

TEST_CASE("worker count does not change the draw") {
  auto cfg = base_config(StepFamily::pm1(0.6), Functional::z0, 3000, 72);
  SimResult one = simulate(cfg);
  cfg.workers = 3;
  SimResult three = simulate(cfg);
  CHECK(one.primary == three.primary);
  CHECK(sample_digest(one.primary) == sample_digest(three.primary));
  // per-path streams: a longer run extends the same sample
  cfg.workers = 2;
  cfg.n_paths = 6000;
  SimResult six = simulate(cfg);
  CHECK(std::equal(one.primary.begin(), one.primary.end(),
                   six.primary.begin()));
}

TEST_CASE("time below zero matches the exact mean") {
  double p = 0.6;
  auto provider =
      SignProbProvider::from_lattice(LatticeStepLaw::pm1(p), 2000);
  double exact = provider.below_sum();  // truncation under tail_bound
  auto cfg = base_config(StepFamily::pm1(p), Functional::z0, 100000, 73);
  SimResult res = simulate(cfg);
  CHECK(res.exhausted == 0);
  double acc = 0.0, acc2 = 0.0;
  std::size_t zero = 0;
  for (double v : res.primary) {
    acc += v;
    acc2 += v * v;
    if (v == 0.0) ++zero;
  }
  double n = double(res.primary.size());
  double mean = acc / n;
  double se = std::sqrt((acc2 / n - mean * mean) / (n - 1.0));
  CHECK(std::abs(mean - exact) < 4.0 * se + provider.tail_bound());
  // no strict descent ever: pmf mass at zero is 1 - q/p
  OccupationSeries occ = occupation_gf(provider, 10);
  double p0 = double(zero) / n;
  double band = 4.0 * std::sqrt(occ.pmf[0] * (1.0 - occ.pmf[0]) / n);
  CHECK(std::abs(p0 - occ.pmf[0]) < band + occ.tail_bound);
}

TEST_CASE("time below a positive level") {
  // level below the start contributes nothing beyond the level-zero count
  auto cfg = base_config(StepFamily::pm1(0.6), Functional::z_level, 20000, 74);
  cfg.level = 3.0;
  SimResult res = simulate(cfg);
  auto cfg0 = base_config(StepFamily::pm1(0.6), Functional::z0, 20000, 74);
  SimResult res0 = simulate(cfg0);
  double m = 0.0, m0 = 0.0;
  for (double v : res.primary) m += v;
  for (double v : res0.primary) m0 += v;
  CHECK(m / 20000.0 > m0 / 20000.0);  // more room below a higher level
}

TEST_CASE("depth of the running minimum") {
  double p = 0.6, q = 0.4;
  auto cfg = base_config(StepFamily::pm1(p), Functional::min_depth, 100000,
                         75);
  SimResult res = simulate(cfg);
  // ruin probabilities: P(min <= -k) = (q/p)^k
  for (int k : {1, 2, 4}) {
    double freq = 0.0;
    for (double v : res.primary)
      if (v >= double(k)) freq += 1.0;
    freq /= double(res.primary.size());
    double target = std::pow(q / p, double(k));
    double band =
        4.5 * std::sqrt(target * (1.0 - target) / double(res.primary.size()));
    CHECK(std::abs(freq - target) < band + 1e-6);
  }
}

TEST_CASE("last zero within a horizon") {
  double p = 0.6;
  std::uint64_t horizon = 12;
  auto cfg =
      base_config(StepFamily::pm1(p), Functional::last_zero, 200000, 76);
  cfg.horizon = horizon;
  SimResult res = simulate(cfg);
  std::vector<double> freq(horizon + 1, 0.0);
  for (double v : res.primary) freq[std::size_t(v)] += 1.0;
  for (auto& f : freq) f /= double(res.primary.size());
  auto pmf = last_zero_pmf(p, horizon);
  for (std::size_t k = 0; k <= horizon; ++k) {
    double band =
        4.5 * std::sqrt(pmf[k] * (1.0 - pmf[k]) / double(res.primary.size()));
    CHECK(std::abs(freq[k] - pmf[k]) < band + 1e-6);
  }
}

TEST_CASE("zero count and last return to the barrier") {
  double p = 0.6, q = 0.4;
  auto cfg =
      base_config(StepFamily::pm1(p), Functional::zeros_count, 100000, 77);
  SimResult res = simulate(cfg);
  REQUIRE(res.secondary.size() == res.primary.size());
  double acc = 0.0, acc2 = 0.0;
  for (std::size_t i = 0; i < res.primary.size(); ++i) {
    double count = res.primary[i], last = res.secondary[i];
    acc += count;
    acc2 += count * count;
    // each return needs two steps, and the clock is even
    CHECK(last >= 2.0 * count);
    CHECK(std::fmod(last, 2.0) == 0.0);
    if (count == 0.0) CHECK(last == 0.0);
  }
  double n = double(res.primary.size());
  double mean = acc / n;
  double se = std::sqrt((acc2 / n - mean * mean) / (n - 1.0));
  // E #returns = 1/(p-q) - 1
  CHECK(std::abs(mean - (1.0 / (p - q) - 1.0)) < 4.0 * se + 1e-4);
  // last_return reverses the (primary, secondary) roles
  auto cfg2 =
      base_config(StepFamily::pm1(p), Functional::last_return, 5000, 77);
  SimResult swapped = simulate(cfg2);
  CHECK(std::equal(swapped.primary.begin(), swapped.primary.end(),
                   res.secondary.begin()));
  CHECK(std::equal(swapped.secondary.begin(), swapped.secondary.end(),
                   res.primary.begin()));
  (void)q;
}

TEST_CASE("exhaustion is counted") {
  auto cfg = base_config(StepFamily::pm1(0.51), Functional::z0, 200, 78);
  cfg.rule.max_steps = 10;  // far below the barrier
  SimResult res = simulate(cfg);
  CHECK(res.exhausted == 200);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(
      simulate(base_config(StepFamily::pm1(0.5), Functional::z0, 10, 1)),
      std::domain_error);
  auto no_paths = base_config(StepFamily::pm1(0.6), Functional::z0, 0, 1);
  CHECK_THROWS_AS(simulate(no_paths), std::domain_error);
  auto wrong_family =
      base_config(StepFamily::shift_normal(0.1, 1.0), Functional::last_zero,
                  10, 1);
  wrong_family.horizon = 8;
  CHECK_THROWS_AS(simulate(wrong_family), unsupported_family_error);
  auto no_horizon =
      base_config(StepFamily::pm1(0.6), Functional::last_zero, 10, 1);
  CHECK_THROWS_AS(simulate(no_horizon), std::domain_error);
  auto neg_level =
      base_config(StepFamily::pm1(0.6), Functional::z_level, 10, 1);
  neg_level.level = -1.0;
  CHECK_THROWS_AS(simulate(neg_level), std::domain_error);
}

TEST_CASE("jitter and digests") {
  auto cfg = base_config(StepFamily::pm1(0.6), Functional::z0, 4000, 79);
  SimResult res = simulate(cfg);
  EmpiricalSample plain = scaled_sample(res, cfg, 0.0, 1.0);
  // digest is over the raw unjittered functional
  CHECK(plain.config_digest == sample_digest(res.primary));
  EmpiricalSample jittered = scaled_sample(res, cfg, 1.0, 0.5);
  CHECK(jittered.config_digest == plain.config_digest);
  // jitter stays inside the lattice cell: floor(2x) recovers the raw value
  std::vector<double> recovered(jittered.n());
  for (std::size_t i = 0; i < jittered.n(); ++i)
    recovered[i] = std::floor(jittered.values[i] / 0.5);
  std::vector<double> raw = res.primary;
  std::sort(raw.begin(), raw.end());
  CHECK(recovered == raw);
  // same jitter stream for a fixed seed
  EmpiricalSample again = scaled_sample(res, cfg, 1.0, 0.5);
  CHECK(again.values == jittered.values);
}

TEST_CASE("convergence study needs two points") {
  std::vector<StudyPoint> single(1);
  single[0].config = base_config(StepFamily::pm1(0.6), Functional::z0, 10, 1);
  CHECK_THROWS_AS(convergence_study(single, [](double) { return 0.5; }),
                  std::invalid_argument);
}

}  // TEST_SUITE
