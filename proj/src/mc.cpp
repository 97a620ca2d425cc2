#include "fluctua/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "fluctua/special.hpp"

namespace fluctua {

namespace {

constexpr std::uint64_t kJitterSalt = 0xd1b54a32d192ed03ull;
constexpr std::size_t kChunk = 1024;

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// log E e^{-theta Y} and its derivative for the families without a closed
// form root
double cumulant_neg(const StepFamily& f, double theta) {
  switch (f.kind) {
    case StepFamily::Kind::uniform: {
      double a = f.half_width;
      double t = theta * a;
      // log(sinh t / t), expanded near 0 to dodge 0/0
      double ls = t < 1e-6 ? std::log1p(t * t / 6.0)
                           : std::log(std::sinh(t) / t);
      return -theta * f.shift + ls;
    }
    case StepFamily::Kind::lattice:
      return std::log(f.law->mgf_neg(theta));
    default:
      break;
  }
  return -theta * f.delta + 0.5 * theta * theta * f.sigma2;
}

double cumulant_neg_deriv(const StepFamily& f, double theta) {
  switch (f.kind) {
    case StepFamily::Kind::uniform: {
      double a = f.half_width;
      double t = theta * a;
      double d = t < 1e-6 ? a * (t / 3.0) : a * (1.0 / std::tanh(t) - 1.0 / t);
      return -f.shift + d;
    }
    case StepFamily::Kind::lattice: {
      const auto& pr = f.law->probs();
      int lo = f.law->min_offset();
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < pr.size(); ++i) {
        double x = double(lo + int(i));
        double w = pr[i] * std::exp(-theta * x);
        num += -x * w;
        den += w;
      }
      return num / den;
    }
    default:
      break;
  }
  return -f.delta + theta * f.sigma2;
}

bool steps_can_go_negative(const StepFamily& f) {
  switch (f.kind) {
    case StepFamily::Kind::normal:
      return true;
    case StepFamily::Kind::uniform:
      return f.shift - f.half_width < 0.0;
    case StepFamily::Kind::pm1:
      return f.p_up < 1.0;
    case StepFamily::Kind::lattice:
      return f.law->has_negative_support();
  }
  return true;
}

}  // namespace

StepFamily StepFamily::shift_normal(double delta, double sigma2) {
  require(sigma2 > 0.0, "normal steps need positive variance");
  StepFamily f;
  f.kind = Kind::normal;
  f.delta = delta;
  f.sigma2 = sigma2;
  f.shift = delta;
  return f;
}

StepFamily StepFamily::shift_uniform(double delta, double half_width) {
  require(half_width > 0.0, "uniform steps need positive width");
  StepFamily f;
  f.kind = Kind::uniform;
  f.delta = delta;
  f.sigma2 = half_width * half_width / 3.0;
  f.shift = delta;
  f.half_width = half_width;
  return f;
}

StepFamily StepFamily::pm1(double p) {
  require(p > 0.0 && p < 1.0, "up-probability must lie in (0, 1)");
  StepFamily f;
  f.kind = Kind::pm1;
  f.p_up = p;
  f.delta = 2.0 * p - 1.0;
  f.sigma2 = 4.0 * p * (1.0 - p);
  return f;
}

StepFamily StepFamily::lattice(const LatticeStepLaw& law) {
  StepFamily f;
  f.kind = Kind::lattice;
  f.law = law;
  f.delta = law.mean();
  f.sigma2 = law.variance();
  return f;
}

// base m(s) = e^{s^2/2}: tilting by p shifts the mean to p, variance stays 1
StepFamily StepFamily::tilted_normal(double p) { return shift_normal(p, 1.0); }

StepFamily StepFamily::tilted_lattice(const LatticeStepLaw& base, double p) {
  return lattice(base.tilt(p));
}

double StepFamily::sample(Rng& rng) const {
  switch (kind) {
    case Kind::normal:
      return shift + std::sqrt(sigma2) * rng.normal();
    case Kind::uniform:
      return shift + half_width * (2.0 * rng.uniform() - 1.0);
    case Kind::pm1:
      return rng.uniform() < p_up ? 1.0 : -1.0;
    case Kind::lattice: {
      double u = rng.uniform();
      const auto& pr = law->probs();
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < pr.size(); ++i) {
        acc += pr[i];
        if (u < acc) return double(law->min_offset() + int(i));
      }
      return double(law->max_offset());
    }
  }
  return 0.0;
}

std::string StepFamily::describe() const {
  switch (kind) {
    case Kind::normal:
      return "normal(mean=" + std::to_string(shift) +
             ", var=" + std::to_string(sigma2) + ")";
    case Kind::uniform:
      return "uniform(center=" + std::to_string(shift) +
             ", half_width=" + std::to_string(half_width) + ")";
    case Kind::pm1:
      return "pm1(p=" + std::to_string(p_up) + ")";
    case Kind::lattice:
      return "lattice(mean=" + std::to_string(delta) + ")";
  }
  return "?";
}

double tilt_for_drift_normal(double target_delta) { return target_delta; }

double tilt_for_drift(const LatticeStepLaw& base, double target_delta) {
  require(base.has_negative_support() && base.has_positive_support(),
          "tilting to a target drift needs support on both sides");
  auto mean_at = [&](double t) { return base.tilt(t).mean(); };
  double lo = 0.0, hi = 0.0;
  if (mean_at(0.0) < target_delta) {
    hi = 1.0;
    while (mean_at(hi) < target_delta) {
      hi *= 2.0;
      if (hi > 1e6)
        throw unsupported_family_error("target drift is outside the range of the tilted family");
    }
  } else {
    lo = -1.0;
    while (mean_at(lo) > target_delta) {
      lo *= 2.0;
      if (lo < -1e6)
        throw unsupported_family_error("target drift is outside the range of the tilted family");
    }
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (mean_at(mid) < target_delta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double lundberg_exponent(const StepFamily& family) {
  require(family.delta > 0.0, "the decay rate needs positive drift");
  if (!steps_can_go_negative(family))
    return std::numeric_limits<double>::infinity();
  switch (family.kind) {
    case StepFamily::Kind::pm1:
      return std::log(family.p_up / (1.0 - family.p_up));
    case StepFamily::Kind::normal:
      return 2.0 * family.delta / family.sigma2;
    default:
      break;
  }
  // cumulant is convex with slope -delta < 0 at the origin; bracket the
  // positive root, then Newton with bisection fallback
  double hi = 1.0;
  while (cumulant_neg(family, hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e8)
      throw unsupported_family_error("no positive root of the decay-rate equation in the bracket");
  }
  double lo = hi * 0.5 >= 1.0 ? hi * 0.5 : 0.0;
  if (cumulant_neg(family, lo) > 0.0) lo = 0.0;
  double theta = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    double val = cumulant_neg(family, theta);
    (val < 0.0 ? lo : hi) = theta;
    double step = val / cumulant_neg_deriv(family, theta);
    double next = theta - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - theta) <= 1e-15 * theta) return next;
    theta = next;
  }
  return theta;
}

double StoppingRule::barrier() const {
  if (std::isinf(theta_star)) return 0.0;
  return std::log(1.0 / epsilon) / theta_star;
}

StoppingRule StoppingRule::for_family(const StepFamily& family, double epsilon,
                                      std::uint64_t max_steps) {
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
  StoppingRule r;
  r.theta_star = lundberg_exponent(family);
  r.epsilon = epsilon;
  r.max_steps = max_steps;
  return r;
}

namespace {

double path_count_below(const SimulationConfig& cfg, Rng& rng, bool& ex) {
  const StepFamily& f = cfg.family;
  double level = cfg.functional == Functional::z0 ? 0.0 : cfg.level;
  double stop = level + cfg.rule.barrier();
  std::uint64_t cap = cfg.rule.max_steps;
  std::uint64_t cnt = 0;
  if (f.kind == StepFamily::Kind::pm1) {
    double p = f.p_up;
    long long S = 0;
    long long B = (long long)std::ceil(stop);
    if (B < 1) B = 1;
    for (std::uint64_t k = 0; k < cap; ++k) {
      S += rng.uniform() < p ? 1 : -1;
      if (double(S) < level)
        ++cnt;
      else if (S >= B)
        return double(cnt);
    }
  } else if (f.kind == StepFamily::Kind::normal) {
    double sd = std::sqrt(f.sigma2), mu = f.shift;
    double S = 0.0;
    for (std::uint64_t k = 0; k < cap; ++k) {
      S += mu + sd * rng.normal();
      if (S < level)
        ++cnt;
      else if (S >= stop)
        return double(cnt);
    }
  } else {
    double S = 0.0;
    for (std::uint64_t k = 0; k < cap; ++k) {
      S += f.sample(rng);
      if (S < level)
        ++cnt;
      else if (S >= stop)
        return double(cnt);
    }
  }
  ex = true;
  return double(cnt);
}

double path_min_depth(const SimulationConfig& cfg, Rng& rng, bool& ex) {
  const StepFamily& f = cfg.family;
  double barrier = cfg.rule.barrier();
  std::uint64_t cap = cfg.rule.max_steps;
  double S = 0.0, m = 0.0;
  if (f.kind == StepFamily::Kind::normal) {
    double sd = std::sqrt(f.sigma2), mu = f.shift;
    for (std::uint64_t k = 0; k < cap; ++k) {
      S += mu + sd * rng.normal();
      if (S < m)
        m = S;
      else if (S - m >= barrier)
        return -m;
    }
  } else {
    for (std::uint64_t k = 0; k < cap; ++k) {
      S += f.sample(rng);
      if (S < m)
        m = S;
      else if (S - m >= barrier)
        return -m;
    }
  }
  ex = true;
  return -m;
}

double path_last_zero(const SimulationConfig& cfg, Rng& rng) {
  double p = cfg.family.p_up;
  std::uint64_t N = cfg.horizon;
  long long S = 0;
  std::uint64_t last = 0;
  for (std::uint64_t k = 1; k <= N; ++k) {
    S += rng.uniform() < p ? 1 : -1;
    if (S == 0) {
      last = k;
    } else {
      long long rem = (long long)(N - k);
      if (S > rem || -S > rem) break;  // cannot return within the horizon
    }
  }
  return double(last);
}

void path_zeros(const SimulationConfig& cfg, Rng& rng, double& count,
                double& last, bool& ex) {
  double p = cfg.family.p_up;
  long long S = 0;
  std::uint64_t cnt = 0, lastk = 0;
  if (cfg.horizon > 0) {
    std::uint64_t N = cfg.horizon;
    for (std::uint64_t k = 1; k <= N; ++k) {
      S += rng.uniform() < p ? 1 : -1;
      if (S == 0) {
        ++cnt;
        lastk = k;
      } else {
        long long rem = (long long)(N - k);
        if (S > rem || -S > rem) break;
      }
    }
  } else {
    long long B = (long long)std::ceil(cfg.rule.barrier());
    if (B < 1) B = 1;
    std::uint64_t cap = cfg.rule.max_steps;
    std::uint64_t k = 1;
    for (; k <= cap; ++k) {
      S += rng.uniform() < p ? 1 : -1;
      if (S == 0) {
        ++cnt;
        lastk = k;
      } else if (S >= B) {
        break;
      }
    }
    if (k > cap) ex = true;
  }
  count = double(cnt);
  last = double(lastk);
}

void run_one(const SimulationConfig& cfg, std::size_t path, SimResult& out,
             std::atomic<std::size_t>& exhausted) {
  Rng rng(cfg.seed, path);
  bool ex = false;
  switch (cfg.functional) {
    case Functional::z0:
    case Functional::z_level:
      out.primary[path] = path_count_below(cfg, rng, ex);
      break;
    case Functional::min_depth:
      out.primary[path] = path_min_depth(cfg, rng, ex);
      break;
    case Functional::last_zero:
      out.primary[path] = path_last_zero(cfg, rng);
      break;
    case Functional::zeros_count:
    case Functional::last_return: {
      double count = 0.0, last = 0.0;
      path_zeros(cfg, rng, count, last, ex);
      if (cfg.functional == Functional::zeros_count) {
        out.primary[path] = count;
        out.secondary[path] = last;
      } else {
        out.primary[path] = last;
        out.secondary[path] = count;
      }
      break;
    }
  }
  if (ex) exhausted.fetch_add(1, std::memory_order_relaxed);
}

void validate(const SimulationConfig& cfg) {
  require(cfg.n_paths >= 1, "simulation needs at least one path");
  switch (cfg.functional) {
    case Functional::z0:
    case Functional::z_level:
    case Functional::min_depth:
      require(cfg.family.delta > 0.0,
              "unbounded-horizon functionals need positive drift");
      require(cfg.rule.theta_star > 0.0, "the stopping rule needs a decay rate");
      if (cfg.functional == Functional::z_level)
        require(cfg.level >= 0.0, "level must be nonnegative");
      break;
    case Functional::last_zero:
      if (cfg.family.kind != StepFamily::Kind::pm1)
        throw unsupported_family_error("zero-hitting functionals need the +/-1 family");
      require(cfg.horizon >= 1, "last zero needs a horizon");
      break;
    case Functional::zeros_count:
    case Functional::last_return:
      if (cfg.family.kind != StepFamily::Kind::pm1)
        throw unsupported_family_error("zero-hitting functionals need the +/-1 family");
      if (cfg.horizon == 0) {
        require(cfg.family.delta > 0.0,
                "unbounded-horizon zero counts need positive drift");
        require(cfg.rule.theta_star > 0.0,
                "the stopping rule needs a decay rate");
      }
      break;
  }
}

}  // namespace

SimResult simulate(const SimulationConfig& cfg) {
  validate(cfg);
  SimResult res;
  res.primary.resize(cfg.n_paths);
  if (cfg.functional == Functional::zeros_count ||
      cfg.functional == Functional::last_return)
    res.secondary.resize(cfg.n_paths);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> exhausted{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t begin = next.fetch_add(kChunk);
      if (begin >= cfg.n_paths) break;
      std::size_t end = std::min(cfg.n_paths, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) run_one(cfg, i, res, exhausted);
    }
  };
  unsigned workers = cfg.workers == 0 ? 1 : cfg.workers;
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  res.exhausted = exhausted.load();
  return res;
}

std::uint64_t sample_digest(const std::vector<double>& values) {
  std::uint64_t h = kFnvOffset;
  for (double v : values) h = fnv1a(v, h);
  return h;
}

EmpiricalSample scaled_sample(const SimResult& result,
                              const SimulationConfig& cfg, double spacing,
                              double scale, bool use_secondary) {
  const std::vector<double>& src =
      use_secondary ? result.secondary : result.primary;
  std::vector<double> v(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    double x = src[i];
    if (spacing != 0.0) {
      Rng jitter(cfg.seed ^ kJitterSalt, i);
      x += spacing * jitter.uniform();
    }
    v[i] = x * scale;
  }
  return EmpiricalSample::from_values(std::move(v), cfg.seed,
                                      sample_digest(src));
}

std::vector<KSReport> convergence_study(
    const std::vector<StudyPoint>& points,
    const std::function<double(double)>& target_cdf) {
  if (points.size() < 2)
    throw std::invalid_argument("a convergence study needs at least two points");
  std::vector<KSReport> reports;
  reports.reserve(points.size());
  for (const StudyPoint& pt : points) {
    SimResult r = simulate(pt.config);
    EmpiricalSample s = scaled_sample(r, pt.config, pt.spacing, pt.scale);
    reports.push_back(ks_against(s, target_cdf));
  }
  return reports;
}

}  // namespace fluctua
