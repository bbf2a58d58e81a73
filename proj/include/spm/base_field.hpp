#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace spm {

/// Element of the base field K = GF(p^r), stored as the integer
/// sum c_0 + c_1 p + ... + c_{r-1} p^{r-1} of its coordinates over the
/// power basis of K/GF(p). For r = 1 this is the canonical residue.
struct Scalar {
  std::uint64_t code = 0;

  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// The base field K = GF(p^r) presented as GF(p)[y]/(g(y)) with g the
/// lexicographically smallest monic irreducible polynomial of degree r.
class BaseField {
 public:
  using Elem = Scalar;

  static BaseField prime_field(std::uint32_t p);
  static BaseField extension(std::uint32_t p, unsigned degree);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return r_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic modulus g, low-to-high coefficients, size r + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Scalar zero() const noexcept { return {0}; }
  Scalar one() const noexcept { return {1}; }
  Scalar from_int(std::int64_t value) const noexcept;
  bool is_zero(Scalar a) const noexcept { return a.code == 0; }
  bool in_prime_field(Scalar a) const noexcept { return a.code < p_; }
  bool contains(Scalar a) const noexcept { return a.code < q_; }

  Scalar add(Scalar a, Scalar b) const noexcept;
  Scalar sub(Scalar a, Scalar b) const noexcept;
  Scalar neg(Scalar a) const noexcept;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t exponent) const;
  /// The absolute Frobenius a -> a^p.
  Scalar frobenius(Scalar a) const;

  std::vector<std::uint32_t> digits(Scalar a) const;
  Scalar from_digits(const std::vector<std::uint32_t>& digits) const;

  friend bool operator==(const BaseField& a, const BaseField& b) noexcept {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint64_t> exp;
  };

  BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Scalar mul_poly(Scalar a, Scalar b) const;

  std::uint32_t p_ = 2;
  unsigned r_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> place_;  // p^i
  std::shared_ptr<const Tables> tables_;
};

/// Prime field GF(p) with the same interface as BaseField, used to find
/// irreducible moduli for extensions.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint64_t order() const noexcept { return p_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem inv(Elem a) const;

 private:
  std::uint32_t p_;
};

}  // namespace spm
