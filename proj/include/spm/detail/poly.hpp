#pragma once

// Dense univariate polynomials over a field type exposing
// zero/one/is_zero/add/sub/mul/inv/order. Coefficients low-to-high.

#include <cstdint>
#include <utility>
#include <vector>

#include "spm/number_theory.hpp"

namespace spm::detail {

template <class Field>
using Poly = std::vector<typename Field::Elem>;

template <class Field>
void trim(const Field& f, Poly<Field>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class Field>
Poly<Field> poly_sub(const Field& f, Poly<Field> a, const Poly<Field>& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(f, a);
  return a;
}

/// Remainder of a modulo a nonzero polynomial m.
template <class Field>
Poly<Field> poly_rem(const Field& f, Poly<Field> a, const Poly<Field>& m) {
  trim(f, a);
  const std::size_t dm = m.size() - 1;
  const auto lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const auto factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    }
    trim(f, a);
  }
  return a;
}

template <class Field>
Poly<Field> poly_mulmod(const Field& f, const Poly<Field>& a, const Poly<Field>& b,
                        const Poly<Field>& m) {
  if (a.empty() || b.empty()) return {};
  Poly<Field> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return poly_rem(f, std::move(out), m);
}

template <class Field>
Poly<Field> poly_powmod(const Field& f, Poly<Field> base, std::uint64_t exponent,
                        const Poly<Field>& m) {
  Poly<Field> result = poly_rem(f, Poly<Field>{f.one()}, m);
  base = poly_rem(f, std::move(base), m);
  while (exponent > 0) {
    if (exponent & 1U) result = poly_mulmod(f, result, base, m);
    base = poly_mulmod(f, base, base, m);
    exponent >>= 1U;
  }
  return result;
}

template <class Field>
Poly<Field> poly_gcd(const Field& f, Poly<Field> a, Poly<Field> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = poly_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: a monic m of degree n over GF(q) is irreducible iff
/// x^(q^n) = x mod m and gcd(x^(q^(n/e)) - x, m) = 1 for each prime e | n.
template <class Field>
bool rabin_irreducible(const Field& f, const Poly<Field>& m) {
  const std::size_t n = m.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const Poly<Field> x{f.zero(), f.one()};
  const std::uint64_t q = f.order();
  auto frob_iterate = [&](std::size_t times) {
    Poly<Field> y = poly_rem(f, x, m);
    for (std::size_t i = 0; i < times; ++i) y = poly_powmod(f, y, q, m);
    return y;
  };
  if (poly_sub(f, frob_iterate(n), poly_rem(f, x, m)).size() != 0) return false;
  for (std::uint64_t e : prime_divisors(n)) {
    auto g = poly_gcd(f, poly_sub(f, frob_iterate(n / e), x), m);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace spm::detail
