#include "fluctua/series.hpp"

#include <cmath>
#include <stdexcept>

namespace fluctua {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs)
    : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs a constant term");
}

double TruncatedSeries::at(std::size_t n) const {
  if (n >= c_.size()) throw std::out_of_range("series index beyond order");
  return c_[n];
}

double TruncatedSeries::evaluate(double z) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

double TruncatedSeries::coeff_sum() const {
  double acc = 0.0;
  for (double v : c_) acc += v;
  return acc;
}

TruncatedSeries TruncatedSeries::constant(double value, std::size_t order) {
  TruncatedSeries r(order);
  r[0] = value;
  return r;
}

TruncatedSeries TruncatedSeries::monomial(double value, std::size_t k,
                                          std::size_t order) {
  TruncatedSeries r(order);
  if (k <= order) r[k] = value;
  return r;
}

TruncatedSeries TruncatedSeries::one_minus_z(std::size_t order) {
  TruncatedSeries r(order);
  r[0] = 1.0;
  if (order >= 1) r[1] = -1.0;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  if (b[0] == 0.0)
    throw std::invalid_argument("division by series with zero constant term");
  TruncatedSeries q(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    double acc = a[n];
    for (std::size_t j = 1; j <= n; ++j) acc -= b[j] * q[n - j];
    q[n] = acc / b[0];
  }
  return q;
}

TruncatedSeries operator*(double s, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = s * a[i];
  return r;
}

// b = exp(a):  n b_n = sum_{j=1..n} j a_j b_{n-j}
TruncatedSeries exp_series(const TruncatedSeries& a) {
  TruncatedSeries b(a.order());
  b[0] = std::exp(a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += double(j) * a[j] * b[n - j];
    b[n] = acc / double(n);
  }
  return b;
}

// b = log(a):  n a_0 b_n = n a_n - sum_{j=1..n-1} j b_j a_{n-j}
TruncatedSeries log_series(const TruncatedSeries& a) {
  if (!(a[0] > 0.0))
    throw std::invalid_argument("log needs a positive constant term");
  TruncatedSeries b(a.order());
  b[0] = std::log(a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    double acc = double(n) * a[n];
    for (std::size_t j = 1; j < n; ++j) acc -= double(j) * b[j] * a[n - j];
    b[n] = acc / (double(n) * a[0]);
  }
  return b;
}

// c = a^alpha (J.C.P. Miller):  n a_0 c_n = sum_{j=1..n} (j(alpha+1)-n) a_j c_{n-j}
TruncatedSeries pow_series(const TruncatedSeries& a, double alpha) {
  if (!(a[0] > 0.0))
    throw std::invalid_argument("pow needs a positive constant term");
  TruncatedSeries c(a.order());
  c[0] = std::pow(a[0], alpha);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
      acc += (double(j) * (alpha + 1.0) - double(n)) * a[j] * c[n - j];
    c[n] = acc / (double(n) * a[0]);
  }
  return c;
}

TruncatedSeries sqrt_series(const TruncatedSeries& a) {
  return pow_series(a, 0.5);
}

TruncatedSeries shift_down(const TruncatedSeries& a) {
  if (a[0] != 0.0)
    throw std::invalid_argument("shift_down needs a zero constant term");
  TruncatedSeries r(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) r[i - 1] = a[i];
  return r;
}

}  // namespace fluctua
