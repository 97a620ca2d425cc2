#include "fluctua/sparre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fluctua {

namespace {

void reject_nan(const std::vector<double>& x) {
  for (double v : x)
    if (std::isnan(v))
      throw std::invalid_argument("sequence entries must not be NaN");
}

}  // namespace

std::vector<std::size_t> negative_partial_sum_indices(
    const std::vector<double>& x) {
  reject_nan(x);
  std::vector<std::size_t> idx;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i];
    if (s < 0.0) idx.push_back(i + 1);
  }
  std::reverse(idx.begin(), idx.end());
  return idx;
}

std::vector<double> sparre_transform(const std::vector<double>& x) {
  std::vector<std::size_t> idx = negative_partial_sum_indices(x);
  std::vector<bool> moved(x.size(), false);
  std::vector<double> y;
  y.reserve(x.size());
  for (std::size_t i : idx) {
    y.push_back(x[i - 1]);
    moved[i - 1] = true;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!moved[i]) y.push_back(x[i]);
  return y;
}

std::size_t first_min_place(const std::vector<double>& y) {
  reject_nan(y);
  double best = 0.0;
  std::size_t place = 0;
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    s += y[i];
    if (s < best) {
      best = s;
      place = i + 1;
    }
  }
  return place;
}

// Walk the original positions m = n..1.  The running total equals the
// input's partial sum S_m once the entries at positions > m are removed:
// S_m < 0 says x_m was moved to the head block, and the heads were written
// in decreasing index order, so they come off the front in order; otherwise
// x_m is the last not-yet-consumed tail entry.
std::vector<double> sparre_inverse(const std::vector<double>& y) {
  reject_nan(y);
  std::size_t n = y.size();
  std::vector<double> x(n, 0.0);
  double running = 0.0;
  for (double v : y) running += v;
  std::size_t front = 0;
  std::size_t back = n;
  for (std::size_t m = n; m >= 1; --m) {
    double taken = running < 0.0 ? y[front++] : y[--back];
    x[m - 1] = taken;
    running -= taken;
  }
  return x;
}

}  // namespace fluctua
