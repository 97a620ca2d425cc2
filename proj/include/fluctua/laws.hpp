#pragma once

#include <limits>

#include "fluctua/rng.hpp"

namespace fluctua {

// Gamma with shape 1/2 and rate 1: density e^{-t}/sqrt(pi t),
// Laplace transform 1/sqrt(1+s).  Sampled as Z^2/2.
struct GammaHalfLaw {
  static double pdf(double t);
  static double cdf(double t);
  static double laplace(double s);
  static double mean() { return 0.5; }
  static double sample(Rng& rng);
};

// The parameter-free law with Laplace transform 2/(1+sqrt(1+s)).
// Its density is 2*gamma_half(t) - 2*(1 - GammaHalf cdf)(t), which
// integrates to 1 and has mean 1/4.  The distribution function is
// available in closed form:
//   cdf(t) = erf(sqrt t) - 2 t erfc(sqrt t) + 2 sqrt(t/pi) e^{-t}.
// Sampling is by rejection from a GammaHalf envelope with pointwise
// acceptance 1 - sqrt(pi t) e^t erfc(sqrt t) and overall acceptance 1/2.
struct LawA {
  static double pdf(double t);
  static double cdf(double t);
  static double laplace(double s);
  static double mean() { return 0.25; }
  static double sample(Rng& rng);
};

// Support (0,1); density 1/(pi sqrt(t(1-t))), cdf (2/pi) asin(sqrt t).
struct ArcsineLaw {
  static double pdf(double t);
  static double cdf(double t);
  static double mean() { return 0.5; }
  static double sample(Rng& rng);  // sin^2(pi U / 2)
};

struct ExponentialLaw {
  double rate = 1.0;
  double pdf(double t) const;
  double cdf(double t) const;
  double mean() const { return 1.0 / rate; }
  double sample(Rng& rng) const { return rng.exponential(rate); }
};

struct HalfNormalLaw {  // |N(0,1)|
  static double pdf(double x);
  static double cdf(double x);
  static double sample(Rng& rng);
};

// First time sigma B_t + delta t reaches level z > 0 (delta > 0).
// Laplace transform exp(-(z/sigma2)(sqrt(delta^2 + 2 sigma2 s) - delta)).
// This is inverse Gaussian with mean z/delta and shape z^2/sigma2; sampling
// uses the one-root transform of Michael, Schucany and Haas.
struct FirstPassageLaw {
  double z;
  double delta;
  double sigma2 = 1.0;

  FirstPassageLaw(double z_, double delta_, double sigma2_ = 1.0);
  double laplace(double s) const;
  double mean() const { return z / delta; }
  double pdf(double t) const;
  double cdf(double t) const;
  double sample(Rng& rng) const;
};

// Total time sigma B_t + delta t (delta > 0) spends below level z >= 0.
// V_0 equals (2 sigma2/delta^2) * A in distribution; V_z = T_z + V_0'.
struct OccupationLaw {
  double z = 0.0;
  double delta;
  double sigma2 = 1.0;

  OccupationLaw(double z_, double delta_, double sigma2_ = 1.0);
  double laplace(double s) const;
  double mean() const;
  // density/cdf are exposed for z = 0 only (scaled LawA); z > 0 throws
  double pdf(double t) const;
  double cdf(double t) const;
  double sample(Rng& rng) const;
};

// Last time sigma B_t + delta t visits zero within [0, T] (T may be
// infinity).  Equal in law to C * min{T, D} with C arcsine on (0,1) and D
// exponential with rate (delta/sigma)^2/2, independent.  For T = infinity
// and sigma = 1 this is the Gamma(rate delta^2/2, shape 1/2) law.
struct LastExitLaw {
  double delta;
  double sigma = 1.0;
  double horizon = 1.0;  // may be +infinity

  LastExitLaw(double delta_, double sigma_ = 1.0, double horizon_ = 1.0);
  bool infinite_horizon() const {
    return horizon == std::numeric_limits<double>::infinity();
  }
  double sample(Rng& rng) const;
  // k-th moment, exact (series/incomplete-gamma evaluation)
  double moment(unsigned k) const;
  double mean() const { return moment(1); }
  double pdf(double w) const;  // finite horizon only
  double cdf(double w) const;  // finite horizon only
};

// Limit density of the joint law of (scaled zero count, scaled last return
// time): f(y,t) = (y/(2t)) (pi t)^{-1/2} exp(-y^2/(4t) - t) on (0,inf)^2.
// The y-marginal is Exp(1), the t-marginal GammaHalf.  `pdf_unnormalized`
// carries the (2 pi t)^{-1/2} variant whose total mass is 1/sqrt(2); it is
// kept only so the mass defect can be reported.
struct JointZeroLaw {
  static double pdf(double y, double t);
  static double pdf_unnormalized(double y, double t);
  static double marginal_y(double y) { return ExponentialLaw{1.0}.pdf(y); }
  static double marginal_t(double t) { return GammaHalfLaw::pdf(t); }
};

}  // namespace fluctua
