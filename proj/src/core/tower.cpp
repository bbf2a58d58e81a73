#include "spm/tower.hpp"

#include <numeric>
#include <string>

#include "spm/detail/poly.hpp"
#include "spm/error.hpp"
#include "spm/number_theory.hpp"

namespace spm {

namespace {

unsigned checked_lcm(const std::vector<unsigned>& weights) {
  if (weights.empty()) throw Error(ErrorCode::invalid_argument, "weight tuple is empty");
  for (unsigned w : weights) {
    if (w == 0) throw Error(ErrorCode::invalid_argument, "weights must be positive");
  }
  const std::uint64_t d = lcm_of(weights);
  if (d > 4096) throw Error(ErrorCode::invalid_argument, "lcm of weights too large");
  return static_cast<unsigned>(d);
}

void check_prime(std::uint32_t p, unsigned d) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (p % d != 1 % d) {
    throw Error(ErrorCode::inadmissible_prime,
                std::to_string(p) + " is not congruent to 1 mod " + std::to_string(d));
  }
}

bool subgroup_index_ok(std::uint32_t p, unsigned d, std::uint32_t c) {
  for (std::uint64_t e : prime_divisors(d)) {
    if (pow_mod(c, (p - 1) / e, p) == 1) return false;
  }
  return true;
}

}  // namespace

bool kummer_irreducible(const BaseField& base, unsigned d, std::uint32_t c) {
  if (d == 1) return true;
  detail::Poly<BaseField> f(d + 1, base.zero());
  f[0] = base.neg(base.from_int(c));
  f[d] = base.one();
  return detail::rabin_irreducible(base, f);
}

FieldTower FieldTower::build(std::uint32_t p, std::vector<unsigned> weights) {
  const unsigned d = checked_lcm(weights);
  check_prime(p, d);
  const BaseField gf = BaseField::prime_field(p);
  for (std::uint32_t c = 2; c < p; ++c) {
    if (subgroup_index_ok(p, d, c) && kummer_irreducible(gf, d, c)) {
      return FieldTower(gf, std::move(weights), d, c);
    }
  }
  throw Error(ErrorCode::no_admissible_constant,
              "no admissible Kummer constant for p = " + std::to_string(p));
}

FieldTower FieldTower::with_constant(std::uint32_t p, std::vector<unsigned> weights,
                                     std::uint32_t c, unsigned base_degree) {
  const unsigned d = checked_lcm(weights);
  check_prime(p, d);
  if (c == 0 || c >= p) {
    throw Error(ErrorCode::invalid_argument, "Kummer constant must lie in [1, p)");
  }
  if (base_degree == 0 || std::gcd(base_degree, d) != 1) {
    throw Error(ErrorCode::not_coprime, "base degree must be positive and coprime to d");
  }
  if (!kummer_irreducible(BaseField::prime_field(p), d, c)) {
    throw Error(ErrorCode::irreducibility_failure,
                "x^" + std::to_string(d) + " - " + std::to_string(c) + " is reducible");
  }
  FieldTower tower(BaseField::prime_field(p), std::move(weights), d, c);
  return base_degree == 1 ? tower : tower.extend_scalars(base_degree);
}

FieldTower FieldTower::extend_scalars(unsigned r) const {
  if (r == 0 || std::gcd(r, d_) != 1) {
    throw Error(ErrorCode::not_coprime,
                "extension degree " + std::to_string(r) + " is not coprime to d = " +
                    std::to_string(d_));
  }
  if (r == 1) return *this;
  const unsigned total = base_.degree() * r;
  BaseField extended = BaseField::extension(p(), total);
  if (!kummer_irreducible(extended, d_, c_)) {
    throw Error(ErrorCode::irreducibility_failure,
                "x^d - c became reducible after scalar extension");
  }
  return FieldTower(std::move(extended), weights_, d_, c_);
}

FieldTower::FieldTower(BaseField base, std::vector<unsigned> weights, unsigned d, std::uint32_t c)
    : base_(std::move(base)), weights_(std::move(weights)), d_(d), c_(c) {
  const std::uint32_t p = base_.characteristic();
  zeta_ = static_cast<std::uint32_t>(pow_mod(c_, (p - 1) / d_, p));
  c_scalar_ = base_.from_int(c_);
  c_inverse_ = base_.inv(c_scalar_);
  zeta_powers_.resize(d_);
  std::uint64_t z = 1;
  for (unsigned m = 0; m < d_; ++m) {
    zeta_powers_[m] = base_.from_int(static_cast<std::int64_t>(z));
    z = z * zeta_ % p;
  }
}

void FieldTower::check_vertex(std::size_t vertex) const {
  if (vertex >= weights_.size()) {
    throw Error(ErrorCode::unknown_vertex, "unknown vertex " + std::to_string(vertex + 1));
  }
}

TowerElement FieldTower::zero() const { return TowerElement{std::vector<Scalar>(d_, base_.zero())}; }

TowerElement FieldTower::one() const { return basis(0); }

TowerElement FieldTower::basis(unsigned m) const {
  TowerElement x = zero();
  x.coords.at(m) = base_.one();
  return x;
}

TowerElement FieldTower::from_scalar(Scalar a) const {
  TowerElement x = zero();
  x.coords[0] = a;
  return x;
}

TowerElement FieldTower::add(const TowerElement& x, const TowerElement& y) const {
  TowerElement out = zero();
  for (unsigned m = 0; m < d_; ++m) out.coords[m] = base_.add(x.coords[m], y.coords[m]);
  return out;
}

TowerElement FieldTower::sub(const TowerElement& x, const TowerElement& y) const {
  TowerElement out = zero();
  for (unsigned m = 0; m < d_; ++m) out.coords[m] = base_.sub(x.coords[m], y.coords[m]);
  return out;
}

TowerElement FieldTower::neg(const TowerElement& x) const {
  TowerElement out = zero();
  for (unsigned m = 0; m < d_; ++m) out.coords[m] = base_.neg(x.coords[m]);
  return out;
}

TowerElement FieldTower::scale(Scalar a, const TowerElement& x) const {
  TowerElement out = zero();
  for (unsigned m = 0; m < d_; ++m) out.coords[m] = base_.mul(a, x.coords[m]);
  return out;
}

TowerElement FieldTower::mul(const TowerElement& x, const TowerElement& y) const {
  TowerElement out = zero();
  for (unsigned a = 0; a < d_; ++a) {
    if (base_.is_zero(x.coords[a])) continue;
    for (unsigned b = 0; b < d_; ++b) {
      if (base_.is_zero(y.coords[b])) continue;
      const BasisProduct e = merge(a, b);
      const Scalar term = base_.mul(base_.mul(x.coords[a], y.coords[b]), e.scalar);
      out.coords[e.exponent] = base_.add(out.coords[e.exponent], term);
    }
  }
  return out;
}

bool FieldTower::is_zero(const TowerElement& x) const {
  for (Scalar a : x.coords) {
    if (!base_.is_zero(a)) return false;
  }
  return true;
}

TowerElement FieldTower::inv(const TowerElement& x) const {
  if (is_zero(x)) throw Error(ErrorCode::division_by_zero, "inverse of zero in tower");
  // Solve (multiplication by x) * y = 1 by Gauss-Jordan elimination over K.
  const unsigned n = d_;
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n + 1, base_.zero()));
  for (unsigned col = 0; col < n; ++col) {
    const TowerElement image = mul(x, basis(col));
    for (unsigned row = 0; row < n; ++row) a[row][col] = image.coords[row];
  }
  a[0][n] = base_.one();
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && base_.is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) throw Error(ErrorCode::internal, "tower element is not invertible");
    std::swap(a[pivot], a[col]);
    const Scalar s = base_.inv(a[col][col]);
    for (unsigned k = col; k <= n; ++k) a[col][k] = base_.mul(a[col][k], s);
    for (unsigned row = 0; row < n; ++row) {
      if (row == col || base_.is_zero(a[row][col])) continue;
      const Scalar f = a[row][col];
      for (unsigned k = col; k <= n; ++k) {
        a[row][k] = base_.sub(a[row][k], base_.mul(f, a[col][k]));
      }
    }
  }
  TowerElement out = zero();
  for (unsigned row = 0; row < n; ++row) out.coords[row] = a[row][n];
  return out;
}

TowerElement FieldTower::sigma(const TowerElement& x) const {
  TowerElement out = zero();
  for (unsigned m = 0; m < d_; ++m) {
    out.coords[m] = base_.mul(base_.frobenius(x.coords[m]), zeta_powers_[m]);
  }
  return out;
}

TowerElement FieldTower::frobenius(const TowerElement& x, long long power) const {
  // sigma generates Gal(KE/GF(p)), which has order r * d.
  const long long order = static_cast<long long>(base_.degree()) * d_;
  long long steps = power % order;
  if (steps < 0) steps += order;
  TowerElement out = x;
  for (long long i = 0; i < steps; ++i) out = sigma(out);
  return out;
}

std::vector<unsigned> FieldTower::subfield_basis(std::size_t vertex) const {
  check_vertex(vertex);
  const unsigned step = d_ / weights_[vertex];
  std::vector<unsigned> out;
  for (unsigned m = 0; m < d_; m += step) out.push_back(m);
  return out;
}

bool FieldTower::in_subfield(const TowerElement& x, std::size_t vertex) const {
  check_vertex(vertex);
  const long long k_frobenius = base_.degree();
  return frobenius(x, k_frobenius * weights_[vertex]) == x;
}

bool FieldTower::supported_on_subfield(const TowerElement& x, std::size_t vertex) const {
  check_vertex(vertex);
  const unsigned step = d_ / weights_[vertex];
  for (unsigned m = 0; m < d_; ++m) {
    if (m % step != 0 && !base_.is_zero(x.coords[m])) return false;
  }
  return true;
}

BasisProduct FieldTower::basis_inverse(unsigned m) const {
  if (m >= d_) throw Error(ErrorCode::invalid_argument, "exponent out of range");
  if (m == 0) return {base_.one(), 0};
  return {c_inverse_, d_ - m};
}

}  // namespace spm
