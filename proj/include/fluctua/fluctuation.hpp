#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fluctua/lattice.hpp"
#include "fluctua/series.hpp"

namespace fluctua {

// Rule n -> (P(S_n < 0), P(S_n >= 0)) for the partial sums of a walk,
// precomputed up to a maximum index.  delta/sigma2 are the step mean and
// variance; they feed the Chebyshev truncation bounds.
class SignProbProvider {
 public:
  static SignProbProvider from_lattice(const LatticeStepLaw& law,
                                       std::size_t N,
                                       std::uint64_t cell_cap = 10'000'000);
  // closed form for N(delta, sigma2) steps: P(S_n < 0) = Phi(-sqrt(n) d/s)
  static SignProbProvider normal(double delta, double sigma2, std::size_t N);

  std::size_t max_n() const { return table_.size(); }
  double below(std::size_t n) const { return table_[n - 1].first; }
  double at_or_above(std::size_t n) const { return table_[n - 1].second; }
  double delta() const { return delta_; }
  double sigma2() const { return sigma2_; }

  // sum_{n<=max_n} P(S_n < 0)/n; with positive drift the truncation error
  // is below tail_bound()
  double below_log_sum() const;
  // sum_{n<=max_n} P(S_n < 0), the occupation-time mean estimate
  double below_sum() const;
  // Chebyshev bound sigma2/(delta^2 max_n) on both truncation tails
  double tail_bound() const;

 private:
  std::vector<std::pair<double, double>> table_;
  double delta_ = 0.0;
  double sigma2_ = 0.0;
};

// First strict descent epoch R and first weak ascent epoch W of the walk.
// r and a hold P(R = n), P(W = n) for n <= K.  r1 estimates r(1) = P(R <
// infinity) through the exponential identity evaluated over the provider's
// full range; mu = E W = 1/(1 - r1).  coeff_sum_r = P(R <= K) is kept as a
// diagnostic; |r1 - r(1)| <= r1_bound when the drift is positive.
struct LadderSummary {
  TruncatedSeries r = TruncatedSeries(std::size_t{0});
  TruncatedSeries a = TruncatedSeries(std::size_t{0});
  double r1 = 0.0;
  double r1_bound = 0.0;
  double mu = 0.0;
  double coeff_sum_r = 0.0;
};

LadderSummary ladder_series(const SignProbProvider& provider, std::size_t K);

// point evaluation of r(z) = 1 - exp(-sum z^n P(S_n<0)/n) over the
// provider's range; |z| < 1
double ladder_r_at(const SignProbProvider& provider, double z);

// Distribution of the number of indices with S_n < 0, as a power series:
// coefficient n is P(Z0 = n).  Computed through the exponential form
//   E z^{Z0} = exp{-sum_k (1 - z^k) P(S_k < 0)/k},
// truncating the z-dependent part at K and the constant part at the
// provider's full range.  Coefficients are nonnegative and sum to at most
// 1; the defect is bounded by tail_bound (Chebyshev).
struct OccupationSeries {
  TruncatedSeries pmf = TruncatedSeries(std::size_t{0});
  double tail_bound = 0.0;
  double mean_estimate = 0.0;  // sum_k P(S_k < 0) over the provider range
  double mean_bound = 0.0;
};

OccupationSeries occupation_gf(const SignProbProvider& provider,
                               std::size_t K);

// Closed forms for the +/-1 walk with up-probability p > 1/2, all built
// through the series module:
//   descent  = (1 - sqrt(1 - 4pq z^2)) / (2 p z)
//   last_return = (p - q)/sqrt(1 - 4pq z^2),  constant term p - q
//   occupation = (1 - r1_exact)/(1 - descent),  r1_exact = q/p
//   zero_hit[n]  = P(S_n = 0)         (gf 1/sqrt(1 - 4pq z^2))
//   no_zero[n]   = P(S_1 != 0, ..., S_n != 0)  (gf sqrt(1-4pq z^2)/(1-z))
struct SimpleWalkForms {
  TruncatedSeries descent = TruncatedSeries(std::size_t{0});
  TruncatedSeries last_return = TruncatedSeries(std::size_t{0});
  TruncatedSeries occupation = TruncatedSeries(std::size_t{0});
  TruncatedSeries zero_hit = TruncatedSeries(std::size_t{0});
  TruncatedSeries no_zero = TruncatedSeries(std::size_t{0});
  double r1_exact = 0.0;
};

SimpleWalkForms simple_walk_closed_forms(double p, std::size_t K);

// pmf of the last zero index within horizon N for the +/-1(p) walk,
// P(last zero = k) = P(S_k = 0) P(no zero in the next N-k steps);
// entries at odd k are exactly zero
std::vector<double> last_zero_pmf(double p, std::size_t N,
                                  std::size_t cap = 20000);

// P(total zero count = r, last zero at time 2n) for the +/-1(p) walk,
// p > 1/2: the walk makes r first-return excursions of total length 2n and
// never returns afterwards.  Value is (p-q) [z^{2n}] (1 - sqrt(1-4pq z^2))^r.
double zeros_joint_pmf(double p, unsigned r, unsigned n);

// table[r-1][n-1] for r <= n <= n_cap, one series pass
std::vector<std::vector<double>> zeros_joint_table(double p, unsigned n_cap);

// the discarded textbook-style expression (r/(n-r)) C(2n-r, n) 2 (pq)^n;
// fails brute-force path counts and divides by zero at r = n.  Kept only
// for side-by-side reporting.
double zeros_joint_pmf_printed(double p, unsigned r, unsigned n);

// r(z) for the N(delta, sigma2) walk in closed form,
//   r(z) = 1 - sqrt(1-z) exp(sign(delta) G(z)),
// G the double integral evaluated by nested adaptive quadrature
double normal_walk_r(double z, double delta, double sigma2, double quad_tol);

// lhs = integral_0^inf (1 - e^{-su}) Phi(-sqrt(2u))/u du by quadrature,
// rhs = log((1 + sqrt(1+s))/2)
std::pair<double, double> sojourn_integral_identity(double s, double quad_tol);

}  // namespace fluctua
