#pragma once

#include <cstddef>
#include <vector>

namespace fluctua {

// Formal power series truncated at a fixed order K.  All operations are
// exact modulo z^{K+1}: no index beyond K is ever read or written.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, 0.0) {}
  explicit TruncatedSeries(std::vector<double> coeffs);

  std::size_t order() const { return c_.size() - 1; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  const std::vector<double>& coeffs() const { return c_; }

  // bounds-checked coefficient access
  double at(std::size_t n) const;

  double evaluate(double z) const;  // Horner
  double coeff_sum() const;         // evaluate(1)

  static TruncatedSeries constant(double value, std::size_t order);
  // the monomial c * z^k
  static TruncatedSeries monomial(double value, std::size_t k,
                                  std::size_t order);
  static TruncatedSeries one_minus_z(std::size_t order);

 private:
  std::vector<double> c_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(double s, const TruncatedSeries& a);

TruncatedSeries exp_series(const TruncatedSeries& a);
TruncatedSeries log_series(const TruncatedSeries& a);
TruncatedSeries pow_series(const TruncatedSeries& a, double alpha);
TruncatedSeries sqrt_series(const TruncatedSeries& a);

// drop the constant term and shift every coefficient one slot down,
// i.e. divide by z a series with a(0) == 0
TruncatedSeries shift_down(const TruncatedSeries& a);

}  // namespace fluctua
