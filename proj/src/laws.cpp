#include "fluctua/laws.hpp"

#include <cmath>
#include <stdexcept>

#include "fluctua/quadrature.hpp"
#include "fluctua/special.hpp"

namespace fluctua {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

// sqrt(pi t) e^t erfc(sqrt t); tends to 1 from below as t grows.
// Direct evaluation is fine up to moderate t; beyond that the asymptotic
// expansion of erfc avoids overflow of e^t.
double sqrt_pit_et_erfc(double t) {
  if (t <= 30.0) return kSqrtPi * std::sqrt(t) * std::exp(t) * std::erfc(std::sqrt(t));
  double inv = 1.0 / (2.0 * t);
  return 1.0 - inv + 3.0 * inv * inv - 15.0 * inv * inv * inv;
}

}  // namespace

double GammaHalfLaw::pdf(double t) {
  require(t > 0.0, "GammaHalf density needs t > 0");
  return std::exp(-t) / (kSqrtPi * std::sqrt(t));
}

double GammaHalfLaw::cdf(double t) {
  require(t >= 0.0, "GammaHalf cdf needs t >= 0");
  return std::erf(std::sqrt(t));
}

double GammaHalfLaw::laplace(double s) {
  require(s >= 0.0, "Laplace transform needs s >= 0");
  return 1.0 / std::sqrt(1.0 + s);
}

double GammaHalfLaw::sample(Rng& rng) {
  double z = rng.normal();
  return 0.5 * z * z;
}

double LawA::pdf(double t) {
  require(t > 0.0, "density of A needs t > 0");
  return 2.0 * GammaHalfLaw::pdf(t) - 2.0 * std::erfc(std::sqrt(t));
}

double LawA::cdf(double t) {
  require(t >= 0.0, "cdf of A needs t >= 0");
  if (t == 0.0) return 0.0;
  double rt = std::sqrt(t);
  return std::erf(rt) - 2.0 * t * std::erfc(rt) +
         2.0 * std::sqrt(t / kPi) * std::exp(-t);
}

double LawA::laplace(double s) {
  require(s >= 0.0, "Laplace transform needs s >= 0");
  return 2.0 / (1.0 + std::sqrt(1.0 + s));
}

double LawA::sample(Rng& rng) {
  for (;;) {
    double t = GammaHalfLaw::sample(rng);
    if (t <= 0.0) continue;  // underflow guard
    double accept = 1.0 - sqrt_pit_et_erfc(t);
    if (rng.uniform() < accept) return t;
  }
}

double ArcsineLaw::pdf(double t) {
  require(t > 0.0 && t < 1.0, "arcsine density needs t in (0,1)");
  return 1.0 / (kPi * std::sqrt(t * (1.0 - t)));
}

double ArcsineLaw::cdf(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return 2.0 / kPi * std::asin(std::sqrt(t));
}

double ArcsineLaw::sample(Rng& rng) {
  double s = std::sin(0.5 * kPi * rng.uniform());
  return s * s;
}

double ExponentialLaw::pdf(double t) const {
  return t < 0.0 ? 0.0 : rate * std::exp(-rate * t);
}

double ExponentialLaw::cdf(double t) const {
  return t <= 0.0 ? 0.0 : -std::expm1(-rate * t);
}

double HalfNormalLaw::pdf(double x) {
  return x < 0.0 ? 0.0 : 2.0 * normal_pdf(x);
}

double HalfNormalLaw::cdf(double x) {
  return x <= 0.0 ? 0.0 : std::erf(x / kSqrt2);
}

double HalfNormalLaw::sample(Rng& rng) { return std::abs(rng.normal()); }

FirstPassageLaw::FirstPassageLaw(double z_, double delta_, double sigma2_)
    : z(z_), delta(delta_), sigma2(sigma2_) {
  require(z > 0.0, "first passage needs level z > 0");
  require(delta > 0.0, "first passage needs drift > 0");
  require(sigma2 > 0.0, "first passage needs variance > 0");
}

double FirstPassageLaw::laplace(double s) const {
  require(s >= 0.0, "Laplace transform needs s >= 0");
  return std::exp(-(z / sigma2) *
                  (std::sqrt(delta * delta + 2.0 * sigma2 * s) - delta));
}

double FirstPassageLaw::pdf(double t) const {
  require(t > 0.0, "first passage density needs t > 0");
  double mu = z / delta;
  double lam = z * z / sigma2;
  double d = t - mu;
  return std::sqrt(lam / (2.0 * kPi * t * t * t)) *
         std::exp(-lam * d * d / (2.0 * mu * mu * t));
}

double FirstPassageLaw::cdf(double t) const {
  if (t <= 0.0) return 0.0;
  double mu = z / delta;
  double lam = z * z / sigma2;
  double rl = std::sqrt(lam / t);
  double a = normal_cdf(rl * (t / mu - 1.0));
  double logb = 2.0 * lam / mu + log_normal_cdf(-rl * (t / mu + 1.0));
  return a + std::exp(logb);
}

double FirstPassageLaw::sample(Rng& rng) const {
  double mu = z / delta;
  double lam = z * z / sigma2;
  double n = rng.normal();
  double y = n * n;
  double x = mu + mu * mu * y / (2.0 * lam) -
             (mu / (2.0 * lam)) * std::sqrt(4.0 * mu * lam * y + mu * mu * y * y);
  double u = rng.uniform();
  return (u <= mu / (mu + x)) ? x : mu * mu / x;
}

OccupationLaw::OccupationLaw(double z_, double delta_, double sigma2_)
    : z(z_), delta(delta_), sigma2(sigma2_) {
  require(z >= 0.0, "occupation level must be >= 0");
  require(delta > 0.0, "occupation law needs drift > 0");
  require(sigma2 > 0.0, "occupation law needs variance > 0");
}

double OccupationLaw::laplace(double s) const {
  require(s >= 0.0, "Laplace transform needs s >= 0");
  double below = 2.0 * delta /
                 (delta + std::sqrt(delta * delta + 2.0 * sigma2 * s));
  if (z == 0.0) return below;
  return FirstPassageLaw(z, delta, sigma2).laplace(s) * below;
}

double OccupationLaw::mean() const {
  return z / delta + sigma2 / (2.0 * delta * delta);
}

double OccupationLaw::pdf(double t) const {
  require(z == 0.0, "occupation density is exposed for level zero only");
  double scale = delta * delta / (2.0 * sigma2);  // V0 = A / scale
  return scale * LawA::pdf(scale * t);
}

double OccupationLaw::cdf(double t) const {
  require(z == 0.0, "occupation cdf is exposed for level zero only");
  double scale = delta * delta / (2.0 * sigma2);
  return LawA::cdf(scale * t);
}

double OccupationLaw::sample(Rng& rng) const {
  double v0 = (2.0 * sigma2 / (delta * delta)) * LawA::sample(rng);
  if (z == 0.0) return v0;
  return FirstPassageLaw(z, delta, sigma2).sample(rng) + v0;
}

LastExitLaw::LastExitLaw(double delta_, double sigma_, double horizon_)
    : delta(delta_), sigma(sigma_), horizon(horizon_) {
  require(delta != 0.0, "last exit law needs nonzero drift");
  require(sigma > 0.0, "last exit law needs sigma > 0");
  require(horizon > 0.0, "last exit law needs a positive horizon");
}

double LastExitLaw::sample(Rng& rng) const {
  double c = ArcsineLaw::sample(rng);
  double d = delta / sigma;
  double e = rng.exponential(d * d / 2.0);
  return c * (infinite_horizon() ? e : std::min(horizon, e));
}

namespace {

// I_k(lam) = integral_0^1 k y^{k-1} e^{-lam y} dy, exact.
// Small lam: positive series k e^{-lam} sum_m lam^m / (k(k+1)...(k+m)).
// Large lam: k! lam^{-k} P(Poisson(lam) >= k).
double truncated_moment_integral(unsigned k, double lam) {
  if (lam == 0.0) return 1.0;
  if (lam <= 25.0) {
    double term = 1.0 / double(k);  // m = 0
    double acc = term;
    for (unsigned m = 1; m < 500; ++m) {
      term *= lam / double(k + m);
      acc += term;
      if (term < 1e-18 * acc) break;
    }
    return double(k) * std::exp(-lam) * acc;
  }
  // P(Poisson(lam) >= k) = 1 - e^{-lam} sum_{j<k} lam^j/j!
  double tail = 1.0;
  double p = std::exp(-lam);
  double cum = 0.0;
  for (unsigned j = 0; j < k; ++j) {
    cum += p;
    p *= lam / double(j + 1);
  }
  tail -= cum;
  double kfact = 1.0;
  for (unsigned j = 2; j <= k; ++j) kfact *= double(j);
  return kfact * std::pow(lam, -double(k)) * tail;
}

}  // namespace

double LastExitLaw::moment(unsigned k) const {
  require(k >= 1, "moment order must be >= 1");
  double d = delta / sigma;
  if (infinite_horizon()) {
    // Gamma(rate d^2/2, shape 1/2) moments
    double acc = central_binomial_ratio(k);
    double kfact = 1.0;
    for (unsigned j = 2; j <= k; ++j) kfact *= double(j);
    return acc * kfact * std::pow(2.0 / (d * d), double(k));
  }
  // W_T = T * W_1 with drift parameter d sqrt(T)
  double lam = d * d * horizon / 2.0;
  return std::pow(horizon, double(k)) * central_binomial_ratio(k) *
         truncated_moment_integral(k, lam);
}

namespace {

// cdf of C*min{1, D}, lam = rate of D:
//   F(w) = e^{-lam} F_arc(w) + (1 - e^{-lam min(w,1)})
//          + int_w^1 lam e^{-lam u} F_arc(w/u) du        (w < 1)
// The integral is evaluated through v = w/u and then v = sin^2(pi theta/2),
// which removes the square-root endpoint singularities.
double unit_last_exit_cdf(double w, double lam) {
  if (w <= 0.0) return 0.0;
  if (w >= 1.0) return 1.0;
  double head = std::exp(-lam) * ArcsineLaw::cdf(w) - std::expm1(-lam * w);
  // int_w^1 lam e^{-lam u} F_arc(w/u) du, u = w/v:
  //   = int_w^1 lam e^{-lam w/v} F_arc(v) (w/v^2) dv
  auto integrand = [lam, w](double theta) {
    double sn = std::sin(0.5 * kPi * theta);
    double v = sn * sn;
    if (v <= w || v >= 1.0) return 0.0;
    // after theta = F_arc(v) the measure f_arc(v) dv becomes dtheta; the
    // leftover F_arc(v) in the integrand is theta itself
    return lam * std::exp(-lam * w / v) * (w / (v * v)) * theta /
           ArcsineLaw::pdf(v);
  };
  // theta runs over (F_arc(w), 1); integrand vanishes below F_arc(w)
  double tail = integrate(integrand, ArcsineLaw::cdf(w), 1.0, 1e-11).value;
  return head + tail;
}

}  // namespace

double LastExitLaw::cdf(double w) const {
  require(!infinite_horizon(), "cdf is exposed for finite horizons only");
  double lam = delta * delta * horizon / (2.0 * sigma * sigma);
  return unit_last_exit_cdf(w / horizon, lam);
}

double LastExitLaw::pdf(double w) const {
  require(!infinite_horizon(), "density is exposed for finite horizons only");
  require(w > 0.0 && w < horizon, "density needs w inside (0, horizon)");
  double lam = delta * delta * horizon / (2.0 * sigma * sigma);
  double x = w / horizon;
  // f(x) = e^{-lam} f_arc(x) + int_x^1 lam e^{-lam u} f_arc(x/u) (1/u) du,
  // then u = x/v and v = sin^2(pi theta / 2) as in the cdf.
  double head = std::exp(-lam) * ArcsineLaw::pdf(x);
  auto integrand = [lam, x](double theta) {
    double sn = std::sin(0.5 * kPi * theta);
    double v = sn * sn;
    if (v <= x) return 0.0;
    return lam * std::exp(-lam * x / v) / v;
  };
  double tail = integrate(integrand, ArcsineLaw::cdf(x), 1.0, 1e-11).value;
  return (head + tail) / horizon;
}

double JointZeroLaw::pdf(double y, double t) {
  if (!(y > 0.0) || !(t > 0.0))
    throw std::domain_error("joint zero density needs y > 0, t > 0");
  return (y / (2.0 * t)) / std::sqrt(kPi * t) *
         std::exp(-y * y / (4.0 * t) - t);
}

double JointZeroLaw::pdf_unnormalized(double y, double t) {
  if (!(y > 0.0) || !(t > 0.0))
    throw std::domain_error("joint zero density needs y > 0, t > 0");
  return (y / (2.0 * t)) / std::sqrt(2.0 * kPi * t) *
         std::exp(-y * y / (4.0 * t) - t);
}

}  // namespace fluctua
