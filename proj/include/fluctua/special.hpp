#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <string>
#include <string_view>

namespace fluctua {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrtPi = 1.77245385090551602730;

inline double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / (kSqrt2 * kSqrtPi);
}

// Phi(x); computed from erfc so that Phi(-x) keeps full relative accuracy
// for large x.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / kSqrt2);
}

// log Phi(x), usable far into the left tail where Phi underflows.
inline double log_normal_cdf(double x) {
  if (x > -10.0) return std::log(normal_cdf(x));
  // Phi(-y) = phi(y)/y * (1 - 1/y^2 + 3/y^4 - 15/y^6 + O(y^-8)), y = -x
  double y = -x;
  double y2 = y * y;
  double corr = 1.0 - 1.0 / y2 + 3.0 / (y2 * y2) - 15.0 / (y2 * y2 * y2);
  return -0.5 * y * y - std::log(y * kSqrt2 * kSqrtPi) + std::log(corr);
}

inline double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0);
}

inline double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// C(2k,k) / 4^k, stable product form.
inline double central_binomial_ratio(std::uint64_t k) {
  double r = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i) r *= (2.0 * i - 1.0) / (2.0 * i);
  return r;
}

// FNV-1a, 64-bit; used for sample/config digests.
inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = kFnvOffset) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
  return fnv1a(s.data(), s.size(), h);
}

inline std::uint64_t fnv1a(double x, std::uint64_t h = kFnvOffset) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  return fnv1a(&bits, sizeof bits, h);
}

std::string to_hex(std::uint64_t v);

}  // namespace fluctua
