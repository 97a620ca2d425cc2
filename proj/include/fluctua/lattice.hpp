#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fluctua {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer-supported step distribution, stored densely over
// [min_offset, min_offset + probs.size() - 1].  `scale` is a reporting-only
// lattice unit and never enters any computation.
class LatticeStepLaw {
 public:
  LatticeStepLaw(std::vector<int> offsets, std::vector<double> probs,
                 double scale = 1.0);

  int min_offset() const { return min_offset_; }
  int max_offset() const { return min_offset_ + int(probs_.size()) - 1; }
  const std::vector<double>& probs() const { return probs_; }
  double scale() const { return scale_; }

  double prob(int offset) const;
  double mean() const;
  double variance() const;
  // E e^{-theta Y}
  double mgf_neg(double theta) const;
  bool has_negative_support() const;
  bool has_positive_support() const;

  // exponential reweighting: probs ~ p_i e^{t x_i}, renormalized
  LatticeStepLaw tilt(double t) const;

  static LatticeStepLaw pm1(double p);

 private:
  int min_offset_;
  std::vector<double> probs_;
  double scale_;
};

// Exact sign probabilities (P(S_n < 0), P(S_n >= 0)) for n = 1..N via
// dense convolution over the reachable window, with a rolling row.
// Throws resource_error when N * window_width exceeds `cell_cap`.
std::vector<std::pair<double, double>> sign_prob_table(
    const LatticeStepLaw& law, std::size_t N,
    std::uint64_t cell_cap = 10'000'000);

}  // namespace fluctua
