#pragma once

#include <cstdint>
#include <vector>

namespace oracles {

// Schoolbook product in GF(p)[x] followed by reduction with x^d = c.
inline std::vector<std::uint64_t> quotient_mul(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b, std::uint64_t p,
                                               std::uint64_t c) {
  const std::size_t d = a.size();
  std::vector<std::uint64_t> full(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) full[i + j] = (full[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t e = 2 * d - 1; e >= d; --e) {
    full[e - d] = (full[e - d] + full[e] * c) % p;
    full[e] = 0;
  }
  full.resize(d);
  return full;
}

inline std::uint64_t power(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t p) {
  std::uint64_t k = 1;
  std::uint64_t y = x % p;
  while (y != 1) {
    y = y * x % p;
    ++k;
  }
  return k;
}

// x^d - c is irreducible over GF(p), p = 1 mod d, iff c is not an l-th power
// for any prime l dividing d (and, for 4 | d, c is not -4 times a fourth power,
// which cannot happen when p = 1 mod 4).
inline bool kummer_criterion(std::uint64_t c, std::uint64_t d, std::uint64_t p) {
  for (std::uint64_t l = 2; l <= d; ++l) {
    bool prime = true;
    for (std::uint64_t f = 2; f * f <= l; ++f) prime = prime && l % f != 0;
    if (!prime || d % l != 0) continue;
    if (power(c, (p - 1) / l, p) == 1) return false;
  }
  return true;
}

}  // namespace oracles
