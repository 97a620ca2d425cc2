#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace fluctua {

// Sorted sample with the provenance needed to reproduce it.
struct EmpiricalSample {
  std::vector<double> values;  // ascending
  std::uint64_t seed = 0;
  std::uint64_t config_digest = 0;

  // sorts and validates (nonempty, no NaN)
  static EmpiricalSample from_values(std::vector<double> v,
                                     std::uint64_t seed = 0,
                                     std::uint64_t config_digest = 0);

  std::size_t n() const { return values.size(); }
  double ecdf(double x) const;  // step function, right-continuous
  // piecewise-linear through (x_(i), i/n), used as a smoothed target cdf
  double ecdf_interpolated(double x) const;
  double mean() const;
};

struct KSReport {
  double ks = 0.0;
  std::size_t n = 0;
  double alpha = 0.05;
  double band = 0.0;  // DKW band at alpha
  bool pass = false;  // ks < band
};

// sqrt(log(2/alpha) / (2n))
double dkw_band(std::size_t n, double alpha);

// Exact one-sample sup distance: max over order statistics of
// max(i/n - F(x_i), F(x_i) - (i-1)/n).
KSReport ks_against(const EmpiricalSample& sample,
                    const std::function<double(double)>& cdf,
                    double alpha = 0.05);

struct MomentReport {
  double estimate = 0.0;
  double se = 0.0;
};

// k-th raw moment with SE = sd of the k-th powers / sqrt(n)
MomentReport moment_report(const EmpiricalSample& sample, unsigned k);

// 17 significant digits, '.' decimal separator
std::string format_sci(double v);

// header row then data rows, '\n' endings
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace fluctua
