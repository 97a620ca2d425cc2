#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"

#include "fluctua/rng.hpp"
#include "fluctua/sparre.hpp"

using namespace fluctua;

namespace {

std::size_t negative_count(const std::vector<double>& x) {
  return negative_partial_sum_indices(x).size();
}

}  // namespace

TEST_SUITE("sparre") {

TEST_CASE("hand worked rearrangements") {
  std::vector<double> a{1.0, -2.0};
  CHECK(sparre_transform(a) == std::vector<double>{-2.0, 1.0});
  CHECK(first_min_place(sparre_transform(a)) == 1);
  CHECK(negative_count(a) == 1);

  std::vector<double> b{-1.0, -1.0, 3.0};
  CHECK(sparre_transform(b) == b);  // already in head position
  CHECK(first_min_place(b) == 2);

  std::vector<double> c{2.0, 1.0, 5.0};
  CHECK(sparre_transform(c) == c);
  CHECK(first_min_place(c) == 0);  // the empty prefix is the minimum
  CHECK(negative_count(c) == 0);
}

TEST_CASE("head order is by decreasing index") {
  // negative prefix sums at indices 1 and 4
  std::vector<double> x{-1.0, 3.0, 1.0, -5.0, 2.0};
  auto idx = negative_partial_sum_indices(x);
  CHECK(idx == std::vector<std::size_t>{4, 1});
  auto y = sparre_transform(x);
  CHECK(y == std::vector<double>{-5.0, -1.0, 3.0, 1.0, 2.0});
  CHECK(first_min_place(y) == 2);
}

TEST_CASE("random roundtrips") {
  Rng rng(31, 0);
  for (int rep = 0; rep < 10000; ++rep) {
    std::size_t n = 1 + std::size_t(rng.uniform() * 12.0);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.normal();
    std::vector<double> y = sparre_transform(x);
    // the rearranged path attains its first minimum exactly at the
    // negative-prefix count of the original
    CHECK(first_min_place(y) == negative_count(x));
    // inverse moves the same doubles back: bit-identical roundtrip
    CHECK(sparre_inverse(y) == x);
    std::vector<double> xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    CHECK(xs == ys);
  }
}

TEST_CASE("distributional identity on enumerated walks") {
  // for iid steps the first-minimum place of the path and the number of
  // negative prefix sums share one distribution; check exactly on all
  // +/-1 step patterns
  for (double p : {0.3, 0.5, 0.62}) {
    for (unsigned n : {1u, 5u, 10u}) {
      std::vector<double> min_place(n + 1, 0.0), neg_count(n + 1, 0.0);
      for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<double> x(n);
        unsigned ups = 0;
        for (unsigned i = 0; i < n; ++i) {
          bool up = mask & (1ull << i);
          x[i] = up ? 1.0 : -1.0;
          if (up) ++ups;
        }
        double w =
            std::pow(p, double(ups)) * std::pow(1.0 - p, double(n - ups));
        min_place[first_min_place(x)] += w;
        neg_count[negative_count(x)] += w;
      }
      for (unsigned k = 0; k <= n; ++k)
        CHECK(min_place[k] == doctest::Approx(neg_count[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("input validation") {
  std::vector<double> bad{1.0, std::numeric_limits<double>::quiet_NaN()};
  CHECK_THROWS_AS(sparre_transform(bad), std::invalid_argument);
  CHECK(sparre_transform({}).empty());
  CHECK(first_min_place({}) == 0);
}

}  // TEST_SUITE
