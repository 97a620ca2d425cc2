#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fluctua/rng.hpp"
#include "fluctua/stats.hpp"

using namespace fluctua;

TEST_SUITE("stats") {

TEST_CASE("sample construction") {
  auto s = EmpiricalSample::from_values({3.0, 1.0, 2.0}, 7, 9);
  CHECK(s.values == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(s.seed == 7);
  CHECK(s.config_digest == 9);
  CHECK(s.mean() == doctest::Approx(2.0));
  CHECK_THROWS_AS(EmpiricalSample::from_values({}), std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalSample::from_values(
                      {1.0, std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);
}

TEST_CASE("ecdf step function") {
  auto s = EmpiricalSample::from_values({1.0, 2.0, 3.0});
  CHECK(s.ecdf(0.5) == 0.0);
  CHECK(s.ecdf(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(s.ecdf(2.5) == doctest::Approx(2.0 / 3.0));
  CHECK(s.ecdf(3.0) == 1.0);
  CHECK(s.ecdf(99.0) == 1.0);
}

TEST_CASE("interpolated ecdf") {
  auto s = EmpiricalSample::from_values({1.0, 2.0, 4.0});
  CHECK(s.ecdf_interpolated(0.0) == 0.0);
  CHECK(s.ecdf_interpolated(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(s.ecdf_interpolated(1.5) == doctest::Approx(0.5));
  CHECK(s.ecdf_interpolated(3.0) == doctest::Approx(2.0 / 3.0 + 1.0 / 6.0));
  CHECK(s.ecdf_interpolated(4.0) == 1.0);
  CHECK(s.ecdf_interpolated(9.0) == 1.0);
}

TEST_CASE("band width") {
  CHECK(dkw_band(1000, 0.05) ==
        doctest::Approx(std::sqrt(std::log(40.0) / 2000.0)).epsilon(1e-15));
  CHECK_THROWS_AS(dkw_band(0, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(dkw_band(10, 1.5), std::invalid_argument);
}

TEST_CASE("sup distance exact cases") {
  // single point mass at c against F: sup = max(F(c), 1 - F(c))
  auto one = EmpiricalSample::from_values({0.3});
  auto uni = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  KSReport r = ks_against(one, uni);
  CHECK(r.ks == doctest::Approx(0.7).epsilon(1e-15));
  // perfectly placed grid i/n: every step straddles F equally
  std::vector<double> grid(10);
  for (std::size_t i = 0; i < 10; ++i) grid[i] = double(i + 1) / 10.0;
  KSReport g = ks_against(EmpiricalSample::from_values(grid), uni);
  CHECK(g.ks == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g.n == 10);
  auto nan_cdf = [](double) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS(ks_against(one, nan_cdf), std::invalid_argument);
}

TEST_CASE("band coverage on uniform draws") {
  // the band is conservative: well over 95 percent of uniform samples of
  // size 500 stay inside it
  Rng rng(41, 0);
  auto uni = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  int inside = 0;
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> v(500);
    for (auto& x : v) x = rng.uniform();
    KSReport r = ks_against(EmpiricalSample::from_values(std::move(v)), uni);
    if (r.pass) ++inside;
  }
  CHECK(inside >= 188);
}

TEST_CASE("moment report") {
  auto s = EmpiricalSample::from_values({1.0, 2.0, 3.0});
  MomentReport m1 = moment_report(s, 1);
  CHECK(m1.estimate == doctest::Approx(2.0));
  // population variance 2/3 over n-1 = 2: se = sqrt(1/3)
  CHECK(m1.se == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  MomentReport m2 = moment_report(s, 2);
  CHECK(m2.estimate == doctest::Approx(14.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(moment_report(s, 0), std::invalid_argument);
  auto single = EmpiricalSample::from_values({5.0});
  CHECK(moment_report(single, 1).se == 0.0);
}

TEST_CASE("number formatting") {
  CHECK(format_sci(0.1) == "0.10000000000000001");
  CHECK(format_sci(1.0) == "1");
  CHECK(format_sci(-2.5e-9) == "-2.5000000000000001e-09");
  CHECK(format_sci(0.5).find('.') != std::string::npos);
}

TEST_CASE("csv writing") {
  std::ostringstream os;
  write_csv(os, {"x", "y"}, {{1.0, 0.5}, {2.0, 0.25}});
  CHECK(os.str() == "x,y\n1,0.5\n2,0.25\n");
  std::ostringstream bad;
  CHECK_THROWS_AS(write_csv(bad, {"x", "y"}, {{1.0}}),
                  std::invalid_argument);
}

}  // TEST_SUITE
