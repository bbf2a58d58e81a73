#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spm/base_field.hpp"

namespace spm {

/// Element of E = K[x]/(x^d - c): coordinates over the eigenbasis
/// {1, v, ..., v^{d-1}}, v the residue of x.
struct TowerElement {
  std::vector<Scalar> coords;

  friend bool operator==(const TowerElement&, const TowerElement&) = default;
};

/// The result of multiplying two eigenbasis vectors: v^a v^b = scalar * v^exponent.
struct BasisProduct {
  Scalar scalar;
  unsigned exponent;
};

/// The tower K ⊆ K F_i ⊆ K E with E = GF(p^d) presented as GF(p)[x]/(x^d - c).
///
/// The residue v of x is a simultaneous eigenvector of the Galois group: the
/// absolute Frobenius sends v to zeta * v with zeta = c^((p-1)/d) of order d.
/// F_i is spanned by the powers v^m with m divisible by d/d_i.
class FieldTower {
 public:
  /// Canonical tower over GF(p): c is the smallest admissible Kummer constant.
  static FieldTower build(std::uint32_t p, std::vector<unsigned> weights);
  /// Tower with an explicit constant c and base degree r; c must make
  /// x^d - c irreducible over GF(p) (and over GF(p^r)).
  static FieldTower with_constant(std::uint32_t p, std::vector<unsigned> weights, std::uint32_t c,
                                  unsigned base_degree = 1);

  /// Same tower over K = GF(p^r) for gcd(r, d) = 1 (base degrees multiply).
  FieldTower extend_scalars(unsigned r) const;

  const BaseField& base() const noexcept { return base_; }
  std::uint32_t p() const noexcept { return base_.characteristic(); }
  unsigned base_degree() const noexcept { return base_.degree(); }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  unsigned d() const noexcept { return d_; }
  std::uint32_t c() const noexcept { return c_; }
  std::uint32_t zeta() const noexcept { return zeta_; }
  std::size_t vertex_count() const noexcept { return weights_.size(); }

  TowerElement zero() const;
  TowerElement one() const;
  TowerElement basis(unsigned m) const;
  TowerElement from_scalar(Scalar a) const;

  TowerElement add(const TowerElement& x, const TowerElement& y) const;
  TowerElement sub(const TowerElement& x, const TowerElement& y) const;
  TowerElement neg(const TowerElement& x) const;
  TowerElement mul(const TowerElement& x, const TowerElement& y) const;
  TowerElement scale(Scalar a, const TowerElement& x) const;
  TowerElement inv(const TowerElement& x) const;
  bool is_zero(const TowerElement& x) const;

  /// sigma^power, sigma the absolute Frobenius (v -> zeta v, a -> a^p on K).
  TowerElement frobenius(const TowerElement& x, long long power) const;

  /// Exponents m in [0, d) with d/d_i | m, ascending; the basis B_i of F_i.
  std::vector<unsigned> subfield_basis(std::size_t vertex) const;
  /// Membership in K F_i decided by the fixed points of the K-Frobenius^{d_i}.
  bool in_subfield(const TowerElement& x, std::size_t vertex) const;
  /// Cheap membership test: support contained in subfield_basis(vertex).
  bool supported_on_subfield(const TowerElement& x, std::size_t vertex) const;

  /// v^{-m} = scalar * v^exponent.
  BasisProduct basis_inverse(unsigned m) const;
  /// v^a v^b reduced with v^d = c.
  BasisProduct merge(unsigned a, unsigned b) const noexcept {
    const unsigned s = a + b;
    return s >= d_ ? BasisProduct{c_scalar_, s - d_} : BasisProduct{base_.one(), s};
  }

  Scalar c_scalar() const noexcept { return c_scalar_; }

  friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
    return a.base_ == b.base_ && a.weights_ == b.weights_ && a.c_ == b.c_;
  }

 private:
  FieldTower(BaseField base, std::vector<unsigned> weights, unsigned d, std::uint32_t c);
  void check_vertex(std::size_t vertex) const;
  TowerElement sigma(const TowerElement& x) const;

  BaseField base_;
  std::vector<unsigned> weights_;
  unsigned d_ = 1;
  std::uint32_t c_ = 0;
  std::uint32_t zeta_ = 1;
  Scalar c_scalar_;
  Scalar c_inverse_;
  std::vector<Scalar> zeta_powers_;  // zeta^m for m in [0, d)
};

/// Direct test that x^d - c is irreducible over the given base field, by
/// Rabin's criterion with arithmetic in K[x]/(x^d - c).
bool kummer_irreducible(const BaseField& base, unsigned d, std::uint32_t c);

}  // namespace spm
