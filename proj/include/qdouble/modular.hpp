#pragma once

#include <cstdint>
#include <numeric>
#include <tuple>

namespace qdouble {

// Exponent arithmetic in Z/M. All roots of unity in the library are stored as
// exponents of a fixed primitive M-th root of unity, so these are the only
// scalar operations most modules need.

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Returns (g, p, q) with p*a + q*b == g == gcd(a, b), g >= 0.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Inverse of a modulo m; requires gcd(a, m) == 1. m == 1 yields 0.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  auto [g, p, q] = ext_gcd(mod(a, m), m);
  (void)q;
  (void)g;
  return mod(p, m);
}

// Smallest n such that every exponent e in [first, last) mod m is a multiple of m/n,
// i.e. the order of the subgroup of mu_m generated by the values.
template <typename It>
std::int64_t value_order(It first, It last, std::int64_t m) {
  std::int64_t g = m;
  for (; first != last; ++first) g = std::gcd(g, mod(*first, m));
  return m / g;
}

}  // namespace qdouble
