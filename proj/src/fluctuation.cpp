#include "fluctua/fluctuation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fluctua/quadrature.hpp"
#include "fluctua/special.hpp"

namespace fluctua {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// sqrt(1 - 4 p q z^2) as a truncated series; odd coefficients are exactly 0
TruncatedSeries sqrt_one_minus_4pq(double p, std::size_t K) {
  TruncatedSeries inner = TruncatedSeries::constant(1.0, K);
  if (K >= 2) inner[2] = -4.0 * p * (1.0 - p);
  return sqrt_series(inner);
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t K) {
  TruncatedSeries r(K);
  for (std::size_t i = 0; i <= K; ++i) r[i] = a[i];
  return r;
}

}  // namespace

SignProbProvider SignProbProvider::from_lattice(const LatticeStepLaw& law,
                                                std::size_t N,
                                                std::uint64_t cell_cap) {
  SignProbProvider out;
  out.table_ = sign_prob_table(law, N, cell_cap);
  out.delta_ = law.mean();
  out.sigma2_ = law.variance();
  return out;
}

SignProbProvider SignProbProvider::normal(double delta, double sigma2,
                                          std::size_t N) {
  require(sigma2 > 0.0, "sign probabilities need positive variance");
  SignProbProvider out;
  out.table_.reserve(N);
  double s = std::sqrt(sigma2);
  for (std::size_t n = 1; n <= N; ++n) {
    double below = normal_cdf(-std::sqrt(double(n)) * delta / s);
    out.table_.emplace_back(below, 1.0 - below);
  }
  out.delta_ = delta;
  out.sigma2_ = sigma2;
  return out;
}

// summed smallest-first
double SignProbProvider::below_log_sum() const {
  double c = 0.0;
  for (std::size_t n = table_.size(); n >= 1; --n)
    c += table_[n - 1].first / double(n);
  return c;
}

double SignProbProvider::below_sum() const {
  double c = 0.0;
  for (std::size_t n = table_.size(); n >= 1; --n) c += table_[n - 1].first;
  return c;
}

double SignProbProvider::tail_bound() const {
  if (!(delta_ > 0.0)) return std::numeric_limits<double>::infinity();
  return sigma2_ / (delta_ * delta_ * double(table_.size()));
}

LadderSummary ladder_series(const SignProbProvider& provider, std::size_t K) {
  require(K >= 1, "ladder series needs a positive order");
  require(provider.max_n() >= K,
          "ladder series order exceeds the provider range");
  TruncatedSeries g(K), ga(K);
  for (std::size_t n = 1; n <= K; ++n) {
    g[n] = -provider.below(n) / double(n);
    ga[n] = -provider.at_or_above(n) / double(n);
  }
  LadderSummary out;
  out.r = TruncatedSeries::constant(1.0, K) - exp_series(g);
  out.a = TruncatedSeries::constant(1.0, K) - exp_series(ga);
  double c = provider.below_log_sum();
  out.r1 = 1.0 - std::exp(-c);
  out.r1_bound = provider.tail_bound();
  out.mu = std::exp(c);
  out.coeff_sum_r = out.r.coeff_sum();
  return out;
}

double ladder_r_at(const SignProbProvider& provider, double z) {
  require(std::abs(z) < 1.0, "ladder point evaluation needs |z| < 1");
  double c = 0.0;
  for (std::size_t n = provider.max_n(); n >= 1; --n)
    c += std::pow(z, double(n)) * provider.below(n) / double(n);
  return 1.0 - std::exp(-c);
}

OccupationSeries occupation_gf(const SignProbProvider& provider,
                               std::size_t K) {
  require(provider.delta() > 0.0, "occupation series needs positive drift");
  require(provider.max_n() >= K,
          "occupation series order exceeds the provider range");
  TruncatedSeries g(K);
  for (std::size_t n = 1; n <= K; ++n) g[n] = provider.below(n) / double(n);
  double c = provider.below_log_sum();
  OccupationSeries out;
  out.pmf = std::exp(-c) * exp_series(g);
  out.tail_bound = provider.tail_bound();
  out.mean_estimate = provider.below_sum();
  out.mean_bound = provider.tail_bound();
  return out;
}

SimpleWalkForms simple_walk_closed_forms(double p, std::size_t K) {
  require(p > 0.5 && p < 1.0, "closed forms need up-probability in (1/2, 1)");
  require(K >= 1, "closed forms need a positive order");
  double q = 1.0 - p;
  SimpleWalkForms out;
  TruncatedSeries s1 = sqrt_one_minus_4pq(p, K + 1);
  out.descent = (1.0 / (2.0 * p)) *
                truncate(shift_down(TruncatedSeries::constant(1.0, K + 1) - s1), K);
  TruncatedSeries s = truncate(s1, K);
  out.zero_hit = TruncatedSeries::constant(1.0, K) / s;
  out.no_zero = s / TruncatedSeries::one_minus_z(K);
  out.last_return = (p - q) * out.zero_hit;
  out.r1_exact = q / p;
  out.occupation = TruncatedSeries::constant(1.0 - out.r1_exact, K) /
                   (TruncatedSeries::constant(1.0, K) - out.descent);
  return out;
}

std::vector<double> last_zero_pmf(double p, std::size_t N, std::size_t cap) {
  require(p > 0.0 && p < 1.0, "last zero pmf needs p in (0, 1)");
  if (N > cap) throw resource_error("last zero horizon exceeds the cap");
  TruncatedSeries s = sqrt_one_minus_4pq(p, N);
  TruncatedSeries zero_hit = TruncatedSeries::constant(1.0, N) / s;
  TruncatedSeries no_zero = s / TruncatedSeries::one_minus_z(N);
  std::vector<double> pmf(N + 1, 0.0);
  for (std::size_t k = 0; k <= N; ++k) pmf[k] = zero_hit[k] * no_zero[N - k];
  return pmf;
}

double zeros_joint_pmf(double p, unsigned r, unsigned n) {
  require(p > 0.5 && p < 1.0, "zeros pmf needs up-probability in (1/2, 1)");
  require(r >= 1 && n >= r, "zeros pmf needs 1 <= r <= n");
  std::size_t K = 2 * std::size_t(n);
  TruncatedSeries f =
      TruncatedSeries::constant(1.0, K) - sqrt_one_minus_4pq(p, K);
  TruncatedSeries fr = f;
  for (unsigned i = 1; i < r; ++i) fr = fr * f;
  return (2.0 * p - 1.0) * fr[K];
}

std::vector<std::vector<double>> zeros_joint_table(double p, unsigned n_cap) {
  require(p > 0.5 && p < 1.0, "zeros table needs up-probability in (1/2, 1)");
  require(n_cap >= 1, "zeros table needs n_cap >= 1");
  std::size_t K = 2 * std::size_t(n_cap);
  TruncatedSeries f =
      TruncatedSeries::constant(1.0, K) - sqrt_one_minus_4pq(p, K);
  std::vector<std::vector<double>> table(n_cap);
  TruncatedSeries fr = f;
  double never = 2.0 * p - 1.0;
  for (unsigned r = 1; r <= n_cap; ++r) {
    table[r - 1].resize(n_cap, 0.0);
    for (unsigned n = r; n <= n_cap; ++n)
      table[r - 1][n - 1] = never * fr[2 * std::size_t(n)];
    if (r < n_cap) fr = fr * f;
  }
  return table;
}

double zeros_joint_pmf_printed(double p, unsigned r, unsigned n) {
  if (r == n) return std::numeric_limits<double>::quiet_NaN();
  double pq = p * (1.0 - p);
  return double(r) / double(n - r) * binomial(2ull * n - r, n) * 2.0 *
         std::pow(pq, double(n));
}

// G(z) = (d^2/(pi sigma2)) int_0^1 int_0^inf z E/(1 - z E) dy dx with
// E = exp(-d^2 (x^2+y^2)/(2 sigma2)).  The z in the numerator makes the
// expansion sum z^{k+1} E^{k+1}, matching term k+1 of the log expansion of
// 1/(1-r); without it the first term is off by one power of z.
double normal_walk_r(double z, double delta, double sigma2, double quad_tol) {
  require(std::abs(z) < 1.0, "descent gf evaluation needs |z| < 1");
  require(delta != 0.0, "descent closed form needs nonzero drift");
  require(sigma2 > 0.0, "descent closed form needs positive variance");
  double qt = delta * delta / (2.0 * sigma2);
  auto inner = [&](double x) {
    auto f = [&](double y) {
      double E = std::exp(-qt * (x * x + y * y));
      return z * E / (1.0 - z * E);
    };
    return integrate_half_line(f, quad_tol * 0.1).value;
  };
  double G =
      (2.0 * qt / kPi) * integrate(inner, 0.0, 1.0, quad_tol).value;
  double sign = delta > 0.0 ? 1.0 : -1.0;
  return 1.0 - std::sqrt(1.0 - z) * std::exp(sign * G);
}

std::pair<double, double> sojourn_integral_identity(double s,
                                                    double quad_tol) {
  require(s > 0.0, "the integral identity needs s > 0");
  auto f = [&](double u) {
    // -expm1 keeps (1 - e^{-su})/u accurate near 0, where the limit is s
    return -std::expm1(-s * u) * normal_cdf(-std::sqrt(2.0 * u)) / u;
  };
  double lhs = integrate_half_line(f, quad_tol).value;
  double rhs = std::log((1.0 + std::sqrt(1.0 + s)) / 2.0);
  return {lhs, rhs};
}

}  // namespace fluctua
