#include "fluctua/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fluctua {

LatticeStepLaw::LatticeStepLaw(std::vector<int> offsets,
                               std::vector<double> probs, double scale)
    : scale_(scale) {
  if (offsets.empty() || offsets.size() != probs.size())
    throw std::invalid_argument("offsets and probs must match and be nonempty");
  int lo = *std::min_element(offsets.begin(), offsets.end());
  int hi = *std::max_element(offsets.begin(), offsets.end());
  min_offset_ = lo;
  probs_.assign(std::size_t(hi - lo + 1), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (!(probs[i] >= 0.0))
      throw std::invalid_argument("step probabilities must be >= 0");
    probs_[std::size_t(offsets[i] - lo)] += probs[i];
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("step probabilities must sum to 1");
}

double LatticeStepLaw::prob(int offset) const {
  if (offset < min_offset() || offset > max_offset()) return 0.0;
  return probs_[std::size_t(offset - min_offset())];
}

double LatticeStepLaw::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i)
    m += probs_[i] * double(min_offset_ + int(i));
  return m;
}

double LatticeStepLaw::variance() const {
  double m = mean(), v = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    double d = double(min_offset_ + int(i)) - m;
    v += probs_[i] * d * d;
  }
  return v;
}

double LatticeStepLaw::mgf_neg(double theta) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i)
    acc += probs_[i] * std::exp(-theta * double(min_offset_ + int(i)));
  return acc;
}

bool LatticeStepLaw::has_negative_support() const {
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > 0.0 && min_offset_ + int(i) < 0) return true;
  return false;
}

bool LatticeStepLaw::has_positive_support() const {
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > 0.0 && min_offset_ + int(i) > 0) return true;
  return false;
}

LatticeStepLaw LatticeStepLaw::tilt(double t) const {
  // shift the exponents so the largest is zero; the ratios are unchanged
  // and extreme tilts underflow harmlessly instead of overflowing
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > 0.0)
      top = std::max(top, t * double(min_offset_ + int(i)));
  std::vector<int> offsets;
  std::vector<double> w;
  double norm = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] == 0.0) continue;
    int x = min_offset_ + int(i);
    double v = probs_[i] * std::exp(t * double(x) - top);
    offsets.push_back(x);
    w.push_back(v);
    norm += v;
  }
  for (double& v : w) v /= norm;
  return LatticeStepLaw(std::move(offsets), std::move(w), scale_);
}

LatticeStepLaw LatticeStepLaw::pm1(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("pm1 needs p in (0,1)");
  return LatticeStepLaw({-1, 1}, {1.0 - p, p});
}

std::vector<std::pair<double, double>> sign_prob_table(
    const LatticeStepLaw& law, std::size_t N, std::uint64_t cell_cap) {
  if (N < 1) throw std::invalid_argument("sign_prob_table needs N >= 1");
  const int lo = law.min_offset();
  const int hi = law.max_offset();
  const std::uint64_t width = std::uint64_t(N) * std::uint64_t(hi - lo) + 1;
  if (std::uint64_t(N) * width > cell_cap)
    throw resource_error("sign probability table exceeds the cell cap");

  // row[i] = P(S_n = base + i) with base = n*lo
  std::vector<double> row(law.probs());
  std::vector<double> next;
  std::vector<std::pair<double, double>> out;
  out.reserve(N);
  const auto& step = law.probs();
  for (std::size_t n = 1;; ++n) {
    const long long base = (long long)(n)*lo;
    double below = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (base + (long long)(i) < 0) below += row[i];
    out.emplace_back(below, 1.0 - below);
    if (n == N) break;
    next.assign(row.size() + step.size() - 1, 0.0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0.0) continue;
      for (std::size_t j = 0; j < step.size(); ++j)
        next[i + j] += row[i] * step[j];
    }
    row.swap(next);
  }
  return out;
}

}  // namespace fluctua
