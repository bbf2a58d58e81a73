#include "spm/base_field.hpp"

#include <limits>
#include <string>

#include "spm/detail/poly.hpp"
#include "spm/error.hpp"
#include "spm/number_theory.hpp"

namespace spm {

namespace {

constexpr std::uint64_t kTableLimit = 1U << 16;

}  // namespace

PrimeField::Elem PrimeField::inv(Elem a) const {
  return static_cast<Elem>(inverse_mod(a, p_));
}

BaseField BaseField::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  return BaseField(p, {0, 1});
}

BaseField BaseField::extension(std::uint32_t p, unsigned degree) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (degree == 0) throw Error(ErrorCode::invalid_argument, "extension degree must be positive");
  if (degree == 1) return prime_field(p);
  // q = p^r must fit comfortably in 64 bits.
  long double q = 1;
  for (unsigned i = 0; i < degree; ++i) q *= p;
  if (q > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() >> 2)) {
    throw Error(ErrorCode::invalid_argument, "base field too large");
  }

  // Enumerate monic polynomials of degree r in lexicographic order of their
  // low-order coefficients (read as a base-p counter) and keep the first
  // irreducible one.
  const PrimeField fp(p);
  std::vector<std::uint32_t> g(degree + 1, 0);
  g[degree] = 1;
  for (;;) {
    if (g[0] != 0 && detail::rabin_irreducible(fp, g)) return BaseField(p, g);
    std::size_t i = 0;
    while (i < degree && ++g[i] == p) g[i++] = 0;
    if (i == degree) break;
  }
  throw Error(ErrorCode::internal, "no irreducible polynomial found");
}

BaseField::BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), r_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  place_.resize(r_ + 1);
  place_[0] = 1;
  for (unsigned i = 1; i <= r_; ++i) place_[i] = place_[i - 1] * p_;
  q_ = place_[r_];

  if (r_ > 1 && q_ <= kTableLimit) {
    // Discrete log tables keyed by a primitive element.
    const auto factors = prime_divisors(q_ - 1);
    auto is_generator = [&](Scalar g) {
      for (auto f : factors) {
        Scalar acc = one();
        Scalar base = g;
        std::uint64_t e = (q_ - 1) / f;
        while (e > 0) {
          if (e & 1U) acc = mul_poly(acc, base);
          base = mul_poly(base, base);
          e >>= 1U;
        }
        if (acc == one()) return false;
      }
      return true;
    };
    Scalar gen{0};
    for (std::uint64_t code = 2; code < q_; ++code) {
      if (is_generator(Scalar{code})) {
        gen = Scalar{code};
        break;
      }
    }
    auto tables = std::make_shared<Tables>();
    tables->log.assign(q_, 0);
    tables->exp.assign(2 * (q_ - 1), 0);
    Scalar x = one();
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      tables->exp[i] = x.code;
      tables->exp[i + q_ - 1] = x.code;
      tables->log[x.code] = static_cast<std::uint32_t>(i);
      x = mul_poly(x, gen);
    }
    tables_ = std::move(tables);
  }
}

Scalar BaseField::from_int(std::int64_t value) const noexcept {
  std::int64_t m = value % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return Scalar{static_cast<std::uint64_t>(m)};
}

std::vector<std::uint32_t> BaseField::digits(Scalar a) const {
  std::vector<std::uint32_t> out(r_);
  for (unsigned i = 0; i < r_; ++i) {
    out[i] = static_cast<std::uint32_t>(a.code % p_);
    a.code /= p_;
  }
  return out;
}

Scalar BaseField::from_digits(const std::vector<std::uint32_t>& digits) const {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (i < r_) code = code * p_ + digits[i] % p_;
  }
  return Scalar{code};
}

Scalar BaseField::add(Scalar a, Scalar b) const noexcept {
  if (r_ == 1) return Scalar{(a.code + b.code) % p_};
  std::uint64_t out = 0;
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t s = (a.code % p_ + b.code % p_) % p_;
    out += s * place_[i];
    a.code /= p_;
    b.code /= p_;
  }
  return Scalar{out};
}

Scalar BaseField::neg(Scalar a) const noexcept {
  if (r_ == 1) return Scalar{a.code == 0 ? 0 : p_ - a.code};
  std::uint64_t out = 0;
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t digit = a.code % p_;
    out += (digit == 0 ? 0 : p_ - digit) * place_[i];
    a.code /= p_;
  }
  return Scalar{out};
}

Scalar BaseField::sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }

Scalar BaseField::mul(Scalar a, Scalar b) const {
  if (r_ == 1) return Scalar{a.code * b.code % p_};
  if (a.code == 0 || b.code == 0) return zero();
  if (tables_) {
    return Scalar{tables_->exp[tables_->log[a.code] + tables_->log[b.code]]};
  }
  return mul_poly(a, b);
}

Scalar BaseField::mul_poly(Scalar a, Scalar b) const {
  const PrimeField fp(p_);
  auto pa = digits(a);
  auto pb = digits(b);
  detail::trim(fp, pa);
  detail::trim(fp, pb);
  return from_digits(detail::poly_mulmod(fp, pa, pb, modulus_));
}

Scalar BaseField::pow(Scalar a, std::uint64_t exponent) const {
  Scalar result = one();
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1U;
  }
  return result;
}

Scalar BaseField::inv(Scalar a) const {
  if (a.code == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in base field");
  if (r_ == 1) return Scalar{inverse_mod(a.code, p_)};
  if (tables_) {
    const std::uint32_t l = tables_->log[a.code];
    return Scalar{tables_->exp[(q_ - 1 - l) % (q_ - 1)]};
  }
  return pow(a, q_ - 2);
}

Scalar BaseField::frobenius(Scalar a) const {
  if (r_ == 1) return a;
  return pow(a, p_);
}

}  // namespace spm
