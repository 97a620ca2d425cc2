#include "fluctua/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "fluctua/fluctuation.hpp"
#include "fluctua/lattice.hpp"
#include "fluctua/laws.hpp"
#include "fluctua/mc.hpp"
#include "fluctua/quadrature.hpp"
#include "fluctua/sparre.hpp"
#include "fluctua/special.hpp"
#include "fluctua/stats.hpp"

namespace fluctua {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", v);
  return buf;
}

void check(CriterionResult& res, bool ok, const std::string& line) {
  res.details.push_back((ok ? "ok: " : "FAIL: ") + line);
  res.pass = res.pass && ok;
}

void note(CriterionResult& res, const std::string& line) {
  res.details.push_back("note: " + line);
}

std::size_t scaled_paths(const AcceptanceOptions& opt, std::size_t base) {
  double v = double(base) * opt.paths_scale;
  return std::size_t(std::max(1.0, v));
}

SimulationConfig make_config(const StepFamily& fam, Functional fn,
                             std::size_t n_paths, std::uint64_t seed,
                             const AcceptanceOptions& opt) {
  SimulationConfig cfg;
  cfg.family = fam;
  cfg.functional = fn;
  cfg.n_paths = n_paths;
  cfg.seed = seed;
  cfg.workers = opt.workers;
  if (fn == Functional::z0 || fn == Functional::z_level ||
      fn == Functional::min_depth)
    cfg.rule = StoppingRule::for_family(fam, opt.epsilon);
  return cfg;
}

// ---- 1: duality of the descent/ascent generating functions ----
void crit_duality(const AcceptanceOptions& opt, CriterionResult& res) {
  Rng rng(opt.seed ^ 0xd1, 0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> offs;
    std::vector<double> probs;
    for (;;) {
      offs.clear();
      probs.clear();
      for (int o = -3; o <= 3; ++o)
        if (rng.uniform() < 0.5) {
          offs.push_back(o);
          probs.push_back(0.05 + rng.uniform());
        }
      bool neg = false, pos = false;
      for (int o : offs) {
        neg = neg || o < 0;
        pos = pos || o > 0;
      }
      if (offs.size() >= 2 && neg && pos) break;
    }
    double sum = 0.0;
    for (double p : probs) sum += p;
    for (double& p : probs) p /= sum;
    LatticeStepLaw law(offs, probs);
    auto provider = SignProbProvider::from_lattice(law, 60);
    LadderSummary lad = ladder_series(provider, 60);
    TruncatedSeries one = TruncatedSeries::constant(1.0, 60);
    TruncatedSeries prod = (one - lad.r) * (one - lad.a);
    TruncatedSeries target = TruncatedSeries::one_minus_z(60);
    for (std::size_t i = 0; i <= 60; ++i)
      worst = std::max(worst, std::abs(prod[i] - target[i]));
  }
  check(res, worst <= 1e-10,
        "coefficient residual of (1-r)(1-a) vs 1-z: " + fmt(worst) +
            " <= 1e-10 (20 random step laws, order 60)");
}

// ---- 2: rearrangement bijection ----
void crit_rearrangement(const AcceptanceOptions& opt, CriterionResult& res) {
  Rng rng(opt.seed ^ 0xd2, 0);
  std::size_t bad_roundtrip = 0, bad_place = 0;
  for (int t = 0; t < 10000; ++t) {
    std::size_t len = 1 + std::size_t(rng.next_u64() % 12);
    std::vector<double> x(len);
    for (double& v : x) v = rng.normal();
    std::vector<double> y = sparre_transform(x);
    if (sparre_inverse(y) != x) ++bad_roundtrip;
    if (first_min_place(y) != negative_partial_sum_indices(x).size())
      ++bad_place;
  }
  check(res, bad_roundtrip == 0,
        "inverse(transform(x)) == x exactly on 10000 sequences (failures: " +
            std::to_string(bad_roundtrip) + ")");
  check(res, bad_place == 0,
        "first minimum place == negative partial sum count (failures: " +
            std::to_string(bad_place) + ")");
}

// ---- 3: three equal forms of the occupation generating function ----
void crit_three_form(const AcceptanceOptions&, CriterionResult& res) {
  for (double p : {0.55, 0.6, 0.7}) {
    auto provider =
        SignProbProvider::from_lattice(LatticeStepLaw::pm1(p), 2000);
    LadderSummary lad = ladder_series(provider, 60);
    OccupationSeries occ = occupation_gf(provider, 60);
    TruncatedSeries one = TruncatedSeries::constant(1.0, 60);
    TruncatedSeries form1 =
        TruncatedSeries::constant(1.0 - lad.r1, 60) / (one - lad.r);
    TruncatedSeries form2 =
        (1.0 / lad.mu) * ((one - lad.a) / TruncatedSeries::one_minus_z(60));
    double worst = 0.0;
    for (std::size_t i = 0; i <= 60; ++i) {
      worst = std::max(worst, std::abs(form1[i] - form2[i]));
      worst = std::max(worst, std::abs(form1[i] - occ.pmf[i]));
    }
    check(res, worst <= 1e-9,
          "p=" + fmt(p) + ": three forms agree, max diff " + fmt(worst) +
              " <= 1e-9 (order 60)");
  }
}

// ---- 4: occupation pmf vs simulation ----
void crit_occupation_pmf(const AcceptanceOptions& opt, CriterionResult& res) {
  StepFamily fam = StepFamily::pm1(0.6);
  SimulationConfig cfg = make_config(fam, Functional::z0,
                                     scaled_paths(opt, 100000),
                                     opt.seed ^ 0xd4, opt);
  SimResult sim = simulate(cfg);
  check(res, sim.exhausted == 0,
        "no path hit the step cap (" + std::to_string(sim.exhausted) + ")");
  auto provider = SignProbProvider::from_lattice(LatticeStepLaw::pm1(0.6), 2000);
  OccupationSeries occ = occupation_gf(provider, 60);
  double n = double(cfg.n_paths);
  std::vector<double> freq(11, 0.0);
  for (double v : sim.primary)
    if (v <= 10.0) freq[std::size_t(v)] += 1.0;
  double worst_gap = 0.0;
  bool all_in = true;
  for (std::size_t k = 0; k <= 10; ++k) {
    freq[k] /= n;
    double pmf = occ.pmf[k];
    double band = 3.0 * std::sqrt(pmf * (1.0 - pmf) / n);
    double gap = std::abs(freq[k] - pmf);
    worst_gap = std::max(worst_gap, gap - band);
    all_in = all_in && gap <= band;
  }
  check(res, all_in,
        "empirical frequencies within 3 binomial SEs of the pmf for k <= 10 "
        "(worst excess " + fmt(worst_gap) + ")");
  double band0 = 3.0 * std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / n);
  check(res, std::abs(freq[0] - 1.0 / 3.0) <= band0,
        "P(count=0) = " + fmt(freq[0]) + " within " + fmt(band0) +
            " of 1/3");
}

// ---- 5: rescaled occupation counts vs the limit law ----
void crit_occupation_limit(const AcceptanceOptions& opt,
                           CriterionResult& res) {
  const double ps[] = {0.6, 0.55, 0.52, 0.51};
  const double thr[] = {0.08, 0.05, 0.03, 0.02};
  std::vector<StudyPoint> pts;
  for (int i = 0; i < 4; ++i) {
    StepFamily fam = StepFamily::pm1(ps[i]);
    StudyPoint pt;
    pt.config = make_config(fam, Functional::z0, scaled_paths(opt, 100000),
                            opt.seed ^ (0xd500 + std::uint64_t(i)), opt);
    pt.spacing = 1.0;
    pt.scale = 2.0 * (ps[i] - 0.5) * (ps[i] - 0.5);
    pts.push_back(pt);
  }
  std::vector<KSReport> reports = convergence_study(pts, LawA::cdf);
  for (int i = 0; i < 4; ++i)
    check(res, reports[i].ks < thr[i],
          "p=" + fmt(ps[i]) + ": KS " + fmt(reports[i].ks) + " < " +
              fmt(thr[i]));
}

// ---- 6: tilted standard-normal family ----
void crit_tilted_limit(const AcceptanceOptions& opt, CriterionResult& res) {
  const double tilts[] = {0.1, 0.05};
  const double thr[] = {0.03, 0.02};
  std::vector<StudyPoint> pts;
  for (int i = 0; i < 2; ++i) {
    StepFamily fam = StepFamily::tilted_normal(tilts[i]);
    StudyPoint pt;
    pt.config = make_config(fam, Functional::z0, scaled_paths(opt, 100000),
                            opt.seed ^ (0xd600 + std::uint64_t(i)), opt);
    pt.spacing = 1.0;
    pt.scale = tilts[i] * tilts[i] / 2.0;
    pts.push_back(pt);
  }
  std::vector<KSReport> reports = convergence_study(pts, LawA::cdf);
  for (int i = 0; i < 2; ++i)
    check(res, reports[i].ks < thr[i],
          "tilt p=" + fmt(tilts[i]) + ": KS " + fmt(reports[i].ks) + " < " +
              fmt(thr[i]));
}

// ---- 7: tail of the scaled all-time minimum ----
void crit_min_tail(const AcceptanceOptions& opt, CriterionResult& res) {
  double delta = 0.05;
  StepFamily fam = StepFamily::shift_normal(delta, 1.0);
  SimulationConfig cfg = make_config(fam, Functional::min_depth,
                                     scaled_paths(opt, 100000),
                                     opt.seed ^ 0xd7, opt);
  SimResult sim = simulate(cfg);
  EmpiricalSample s = scaled_sample(sim, cfg, 0.0, delta);
  double sup = 0.0;
  for (int i = 1; i <= 20; ++i) {
    double x = 0.1 * double(i);
    double surv = 1.0 - s.ecdf(x);
    sup = std::max(sup, std::abs(surv - std::exp(-2.0 * x)));
  }
  check(res, sup < 0.02,
        "sup_x |P(scaled depth > x) - e^{-2x}| = " + fmt(sup) +
            " < 0.02 over x in {0.1,...,2}");
}

// ---- 8: last zero within a horizon vs the finite-horizon last-exit law ----
void crit_last_exit(const AcceptanceOptions& opt, CriterionResult& res) {
  const std::uint64_t N = 10000;
  double p = 0.5 + 0.5 / std::sqrt(double(N));
  StepFamily fam = StepFamily::pm1(p);
  SimulationConfig cfg = make_config(fam, Functional::last_zero,
                                     scaled_paths(opt, 100000),
                                     opt.seed ^ 0xd8, opt);
  cfg.horizon = N;
  SimResult sim = simulate(cfg);

  LastExitLaw limit(1.0, 1.0, 1.0);
  std::size_t m = scaled_paths(opt, 1000000);
  Rng target_rng(opt.seed ^ 0xd8f, 0);
  std::vector<double> draws(m);
  for (double& v : draws) v = limit.sample(target_rng);
  EmpiricalSample target = EmpiricalSample::from_values(std::move(draws));

  EmpiricalSample s = scaled_sample(sim, cfg, 2.0, 1.0 / double(N));
  KSReport ks = ks_against(
      s, [&](double x) { return target.ecdf_interpolated(x); });
  check(res, ks.ks < 0.02,
        "KS vs smoothed target ECDF (10^6 draws): " + fmt(ks.ks) + " < 0.02");

  EmpiricalSample raw = scaled_sample(sim, cfg, 0.0, 1.0 / double(N));
  MomentReport mr = moment_report(raw, 1);
  double want = limit.mean();
  check(res, std::abs(mr.estimate - want) <= 3.0 * mr.se,
        "mean " + fmt(mr.estimate) + " within 3 SE (" + fmt(3.0 * mr.se) +
            ") of " + fmt(want));
}

// ---- 9: last-zero pmf vs exhaustive enumeration ----
void crit_last_zero_pmf(const AcceptanceOptions&, CriterionResult& res) {
  for (double p : {0.5, 0.6, 0.7}) {
    double worst = 0.0;
    for (std::size_t N = 0; N <= 12; ++N) {
      std::vector<double> pmf = last_zero_pmf(p, N);
      std::vector<double> brute(N + 1, 0.0);
      for (std::uint64_t mask = 0; mask < (1ull << N); ++mask) {
        double prob = 1.0;
        long long S = 0;
        std::size_t last = 0;
        for (std::size_t k = 0; k < N; ++k) {
          bool up = (mask >> k) & 1;
          prob *= up ? p : 1.0 - p;
          S += up ? 1 : -1;
          if (S == 0) last = k + 1;
        }
        brute[last] += prob;
      }
      for (std::size_t k = 0; k <= N; ++k)
        worst = std::max(worst, std::abs(pmf[k] - brute[k]));
    }
    check(res, worst <= 1e-12,
          "p=" + fmt(p) + ": pmf equals path enumeration for N <= 12, max diff " +
              fmt(worst));
  }
  double worst_oe = 0.0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<double> even = last_zero_pmf(0.6, 2 * n);
    std::vector<double> odd = last_zero_pmf(0.6, 2 * n + 1);
    for (std::size_t k = 0; k <= 2 * n; ++k)
      worst_oe = std::max(worst_oe, std::abs(even[k] - odd[k]));
    worst_oe = std::max(worst_oe, std::abs(odd[2 * n + 1]));
  }
  check(res, worst_oe <= 1e-12,
        "horizons 2n and 2n+1 give identical pmfs, max diff " + fmt(worst_oe));
}

// ---- 10: the closed-form value of the sojourn log integral ----
void crit_log_integral(const AcceptanceOptions&, CriterionResult& res) {
  for (double s : {0.5, 1.0, 2.0}) {
    auto [lhs, rhs] = sojourn_integral_identity(s, 1e-10);
    check(res, std::abs(lhs - rhs) < 1e-8,
          "s=" + fmt(s) + ": |quadrature - closed form| = " +
              fmt(std::abs(lhs - rhs)) + " < 1e-8");
  }
}

// ---- 11: normal-walk descent gf, quadrature route vs series route ----
void crit_normal_walk(const AcceptanceOptions&, CriterionResult& res) {
  for (double d : {0.5, 0.1}) {
    auto provider = SignProbProvider::normal(d, 1.0, 400);
    double worst = 0.0;
    for (double z : {0.3, 0.6, 0.9}) {
      double rq = normal_walk_r(z, d, 1.0, 1e-9);
      double rs = ladder_r_at(provider, z);
      worst = std::max(worst, std::abs(rq - rs));
    }
    check(res, worst < 1e-6,
          "drift " + fmt(d) + ": |quadrature r - series r| <= " + fmt(worst) +
              " < 1e-6 at z in {0.3, 0.6, 0.9}");
  }
  double q = 1e-4, s = 1.0;
  double d = std::sqrt(2.0 * q);
  double r = normal_walk_r(std::exp(-q * s), -d, 1.0, 1e-9);
  double val = std::pow(r, 1.0 / std::sqrt(q));
  double want = std::exp(-(std::sqrt(1.0 + s) - 1.0));
  check(res, std::abs(val - want) < 0.01,
        "small-drift limit: |r(e^{-qs})^{1/sqrt q} - e^{-(sqrt(1+s)-1)}| = " +
            fmt(std::abs(val - want)) + " < 0.01 (q=1e-4, s=1)");
}

// ---- 12: rescaled last return time vs Gamma(1/2, 1) ----
void crit_last_return_limit(const AcceptanceOptions& opt,
                            CriterionResult& res) {
  double p = 0.52, q = 1.0 - p;
  StepFamily fam = StepFamily::pm1(p);
  SimulationConfig cfg = make_config(fam, Functional::last_return,
                                     scaled_paths(opt, 100000),
                                     opt.seed ^ 0xdc, opt);
  cfg.rule = StoppingRule::for_family(fam, opt.epsilon);
  SimResult sim = simulate(cfg);
  double scale = 0.5 * (p - q) * (p - q);
  EmpiricalSample s = scaled_sample(sim, cfg, 2.0, scale);
  KSReport ks = ks_against(s, [](double t) { return GammaHalfLaw::cdf(t); });
  check(res, ks.ks < 0.03, "KS vs Gamma(shape 1/2, rate 1): " + fmt(ks.ks) +
                               " < 0.03 at p=0.52");
  SimpleWalkForms forms = simple_walk_closed_forms(p, 8);
  check(res, forms.last_return[0] == p - q,
        "never-return mass: constant term of the last-return gf equals p-q "
        "exactly");
}

// ---- 13: joint law of (zero count, last return) ----
void crit_zeros_joint(const AcceptanceOptions& opt, CriterionResult& res) {
  {
    double p = 0.6;
    auto table = zeros_joint_table(p, 20);
    double total = 2.0 * p - 1.0;  // zero-count-zero mass
    for (const auto& row : table)
      for (double v : row) total += v;
    check(res, std::abs(total - 1.0) < 1e-6,
          "mass at cap n <= 20 (p=0.6): |" + fmt(total) + " - 1| < 1e-6");
    auto big = zeros_joint_table(p, 400);
    double total_big = 2.0 * p - 1.0;
    for (const auto& row : big)
      for (double v : row) total_big += v;
    note(res,
         "at cap n <= 400 the defect shrinks to " + fmt(1.0 - total_big));
  }
  {
    double p = 0.52, delta = 2.0 * p - 1.0;
    StepFamily fam = StepFamily::pm1(p);
    SimulationConfig cfg = make_config(fam, Functional::zeros_count,
                                       scaled_paths(opt, 100000),
                                       opt.seed ^ 0xdd, opt);
    cfg.rule = StoppingRule::for_family(fam, opt.epsilon);
    SimResult sim = simulate(cfg);
    EmpiricalSample sy = scaled_sample(sim, cfg, 1.0, delta);
    KSReport ky = ks_against(sy, [](double y) {
      return ExponentialLaw{1.0}.cdf(y);
    });
    check(res, ky.ks < 0.03,
          "count marginal: KS vs Exp(1) = " + fmt(ky.ks) + " < 0.03");
    EmpiricalSample st =
        scaled_sample(sim, cfg, 2.0, 0.5 * delta * delta, true);
    KSReport kt = ks_against(st, [](double t) { return GammaHalfLaw::cdf(t); });
    check(res, kt.ks < 0.03,
          "time marginal: KS vs Gamma(1/2, 1) = " + fmt(kt.ks) + " < 0.03");
  }
  {
    auto inner_mass = [&](double t) {
      return integrate_half_line(
                 [&](double y) { return JointZeroLaw::pdf_unnormalized(y, t); },
                 1e-10)
          .value;
    };
    double mass = integrate_half_line(
                      [&](double v) { return 2.0 * v * inner_mass(v * v); },
                      1e-9)
                      .value;
    check(res, std::abs(mass - 1.0 / kSqrt2) < 1e-6,
          "as-printed density mass " + fmt(mass) +
              " equals 1/sqrt(2) within 1e-6");
  }
}

// ---- 14: scaled zero count of the symmetric walk ----
void crit_zero_count_scaling(const AcceptanceOptions& opt,
                             CriterionResult& res) {
  const std::uint64_t n = 10000;
  StepFamily fam = StepFamily::pm1(0.5);
  SimulationConfig cfg = make_config(fam, Functional::zeros_count,
                                     scaled_paths(opt, 100000),
                                     opt.seed ^ 0xde, opt);
  cfg.horizon = 2 * n;
  SimResult sim = simulate(cfg);
  EmpiricalSample s =
      scaled_sample(sim, cfg, 1.0, std::sqrt(2.0 / double(n)));
  KSReport ks = ks_against(s, [](double x) { return HalfNormalLaw::cdf(x); });
  check(res, ks.ks < 0.02,
        "KS of sqrt(2/n) * zero count vs |N(0,1)|: " + fmt(ks.ks) + " < 0.02");
  EmpiricalSample s2 =
      scaled_sample(sim, cfg, 1.0, 1.0 / std::sqrt(2.0 * double(n)));
  KSReport ks2 = ks_against(s2, [](double x) { return HalfNormalLaw::cdf(x); });
  note(res, "normalization count/sqrt(2n) gives KS " + fmt(ks2.ks) +
                " against the same target");
}

// ---- 15: occupation below a positive level ----
void crit_occupation_level_limit(const AcceptanceOptions& opt,
                                 CriterionResult& res) {
  double delta = 0.05, z = 1.0;
  StepFamily fam = StepFamily::shift_normal(delta, 1.0);
  SimulationConfig cfg = make_config(fam, Functional::z_level,
                                     scaled_paths(opt, 100000),
                                     opt.seed ^ 0xdf, opt);
  cfg.level = z / delta;
  SimResult sim = simulate(cfg);
  EmpiricalSample scaled = scaled_sample(sim, cfg, 0.0, delta * delta);
  MomentReport mean = moment_report(scaled, 1);
  double want_mean = z + 0.5;  // z/delta + sigma^2/(2 delta^2), limit units
  check(res, std::abs(mean.estimate - want_mean) <= 3.0 * mean.se,
        "mean " + fmt(mean.estimate) + " within 3 SE (" + fmt(3.0 * mean.se) +
            ") of " + fmt(want_mean));
  std::vector<double> lt(sim.primary.size());
  for (std::size_t i = 0; i < lt.size(); ++i)
    lt[i] = std::exp(-delta * delta * sim.primary[i]);
  MomentReport ltm = moment_report(EmpiricalSample::from_values(std::move(lt)), 1);
  double want_lt = OccupationLaw(z, 1.0, 1.0).laplace(1.0);
  check(res, std::abs(ltm.estimate - want_lt) <= 3.0 * ltm.se,
        "Laplace transform at s=1: " + fmt(ltm.estimate) + " within 3 SE (" +
            fmt(3.0 * ltm.se) + ") of " + fmt(want_lt));
}

// ---- 16: worker-count invariance ----
void crit_reproducibility(const AcceptanceOptions& opt, CriterionResult& res) {
  std::vector<SimulationConfig> cfgs;
  {
    AcceptanceOptions small = opt;
    small.paths_scale = 1.0;
    auto add = [&](SimulationConfig c) {
      c.n_paths = 10000;
      cfgs.push_back(c);
    };
    add(make_config(StepFamily::pm1(0.6), Functional::z0, 0, opt.seed ^ 0xd4,
                    small));
    add(make_config(StepFamily::pm1(0.51), Functional::z0, 0,
                    opt.seed ^ 0xd503, small));
    add(make_config(StepFamily::tilted_normal(0.05), Functional::z0, 0,
                    opt.seed ^ 0xd601, small));
    add(make_config(StepFamily::shift_normal(0.05, 1.0), Functional::min_depth,
                    0, opt.seed ^ 0xd7, small));
    {
      SimulationConfig c = make_config(StepFamily::pm1(0.505),
                                       Functional::last_zero, 0,
                                       opt.seed ^ 0xd8, small);
      c.horizon = 10000;
      add(c);
    }
    {
      SimulationConfig c = make_config(StepFamily::pm1(0.52),
                                       Functional::last_return, 0,
                                       opt.seed ^ 0xdc, small);
      c.rule = StoppingRule::for_family(c.family, opt.epsilon);
      add(c);
    }
    {
      SimulationConfig c = make_config(StepFamily::pm1(0.5),
                                       Functional::zeros_count, 0,
                                       opt.seed ^ 0xde, small);
      c.horizon = 20000;
      add(c);
    }
    {
      SimulationConfig c = make_config(StepFamily::shift_normal(0.05, 1.0),
                                       Functional::z_level, 0,
                                       opt.seed ^ 0xdf, small);
      c.level = 20.0;
      add(c);
    }
  }
  bool all_same = true;
  for (SimulationConfig& cfg : cfgs) {
    cfg.workers = 1;
    SimResult a = simulate(cfg);
    cfg.workers = 3;
    SimResult b = simulate(cfg);
    bool same = a.primary == b.primary && a.secondary == b.secondary &&
                sample_digest(a.primary) == sample_digest(b.primary);
    all_same = all_same && same;
    if (!same) note(res, "mismatch for " + cfg.family.describe());
  }
  check(res, all_same,
        "all " + std::to_string(cfgs.size()) +
            " configurations are bit-identical with 1 and 3 workers (10^4 "
            "paths each)");
  {
    SimulationConfig cfg = cfgs[0];
    cfg.workers = 2;
    cfg.n_paths = 10000;
    SimResult a = simulate(cfg);
    cfg.n_paths = 20000;
    SimResult b = simulate(cfg);
    bool prefix = std::equal(a.primary.begin(), a.primary.end(),
                             b.primary.begin());
    check(res, prefix,
          "a longer run extends a shorter one path-for-path (prefix of 2*10^4 "
          "equals the 10^4 run)");
  }
}

struct Entry {
  const char* name;
  void (*fn)(const AcceptanceOptions&, CriterionResult&);
};

const Entry kRegistry[] = {
    {"duality", crit_duality},
    {"rearrangement", crit_rearrangement},
    {"three-form", crit_three_form},
    {"occupation-pmf", crit_occupation_pmf},
    {"occupation-limit", crit_occupation_limit},
    {"tilted-limit", crit_tilted_limit},
    {"min-tail", crit_min_tail},
    {"last-exit", crit_last_exit},
    {"last-zero-pmf", crit_last_zero_pmf},
    {"log-integral", crit_log_integral},
    {"normal-walk", crit_normal_walk},
    {"last-return-limit", crit_last_return_limit},
    {"zeros-joint", crit_zeros_joint},
    {"zero-count-scaling", crit_zero_count_scaling},
    {"occupation-level-limit", crit_occupation_level_limit},
    {"reproducibility", crit_reproducibility},
};

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kRegistry) v.push_back(e.name);
    return v;
  }();
  return names;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream& out) {
  for (const std::string& name : opt.only) {
    bool known = false;
    for (const Entry& e : kRegistry) known = known || name == e.name;
    if (!known) throw std::invalid_argument("unknown criterion: " + name);
  }
  std::vector<CriterionResult> results;
  std::size_t total = sizeof(kRegistry) / sizeof(kRegistry[0]);
  std::size_t index = 0;
  for (const Entry& e : kRegistry) {
    ++index;
    if (!opt.only.empty() &&
        std::find(opt.only.begin(), opt.only.end(), e.name) == opt.only.end())
      continue;
    CriterionResult res;
    res.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    e.fn(opt, res);
    auto t1 = std::chrono::steady_clock::now();
    res.seconds = std::chrono::duration<double>(t1 - t0).count();
    char head[128];
    std::snprintf(head, sizeof head, "[%2zu/%zu] %-24s %s  %7.2fs", index,
                  total, res.name.c_str(), res.pass ? "PASS" : "FAIL",
                  res.seconds);
    out << head << "\n";
    for (const std::string& d : res.details) out << "        " << d << "\n";
    results.push_back(std::move(res));
  }
  std::size_t passed = 0;
  for (const CriterionResult& r : results) passed += r.pass ? 1 : 0;
  out << passed << "/" << results.size() << " criteria passed\n";
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace fluctua
