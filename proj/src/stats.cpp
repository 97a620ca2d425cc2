#include "fluctua/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fluctua {

EmpiricalSample EmpiricalSample::from_values(std::vector<double> v,
                                             std::uint64_t seed,
                                             std::uint64_t config_digest) {
  if (v.empty()) throw std::invalid_argument("empirical sample is empty");
  for (double x : v)
    if (std::isnan(x))
      throw std::invalid_argument("empirical sample contains NaN");
  std::sort(v.begin(), v.end());
  EmpiricalSample s;
  s.values = std::move(v);
  s.seed = seed;
  s.config_digest = config_digest;
  return s;
}

double EmpiricalSample::ecdf(double x) const {
  auto it = std::upper_bound(values.begin(), values.end(), x);
  return double(it - values.begin()) / double(values.size());
}

double EmpiricalSample::ecdf_interpolated(double x) const {
  if (x <= values.front()) return x == values.front() ? 1.0 / double(n()) : 0.0;
  if (x >= values.back()) return 1.0;
  auto it = std::upper_bound(values.begin(), values.end(), x);
  std::size_t i = std::size_t(it - values.begin());  // values[i-1] <= x < values[i]
  double x0 = values[i - 1], x1 = values[i];
  double f0 = double(i) / double(n()), f1 = double(i + 1) / double(n());
  if (x1 == x0) return f0;
  return f0 + (f1 - f0) * (x - x0) / (x1 - x0);
}

double EmpiricalSample::mean() const {
  double acc = 0.0;
  for (double x : values) acc += x;
  return acc / double(values.size());
}

double dkw_band(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("band needs n >= 1 and alpha in (0,1)");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * double(n)));
}

KSReport ks_against(const EmpiricalSample& sample,
                    const std::function<double(double)>& cdf, double alpha) {
  std::size_t n = sample.n();
  double sup = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double F = cdf(sample.values[i - 1]);
    if (std::isnan(F)) throw std::invalid_argument("cdf returned NaN");
    sup = std::max(sup, double(i) / double(n) - F);
    sup = std::max(sup, F - double(i - 1) / double(n));
  }
  KSReport r;
  r.ks = sup;
  r.n = n;
  r.alpha = alpha;
  r.band = dkw_band(n, alpha);
  r.pass = sup < r.band;
  return r;
}

MomentReport moment_report(const EmpiricalSample& sample, unsigned k) {
  if (k == 0) throw std::invalid_argument("moment order must be >= 1");
  std::size_t n = sample.n();
  double m1 = 0.0, m2 = 0.0;
  for (double x : sample.values) {
    double p = std::pow(x, double(k));
    m1 += p;
    m2 += p * p;
  }
  m1 /= double(n);
  m2 /= double(n);
  double var = std::max(0.0, m2 - m1 * m1);
  MomentReport r;
  r.estimate = m1;
  r.se = n > 1 ? std::sqrt(var / double(n - 1)) : 0.0;
  return r;
}

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os << ',';
    os << header[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width differs from header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_sci(row[i]);
    }
    os << '\n';
  }
}

}  // namespace fluctua
