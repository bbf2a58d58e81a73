#include <gtest/gtest.h>
#include <functional>

#include "spm/error.hpp"
#include "spm/number_theory.hpp"
#include "tower_checks.hpp"

using namespace spm;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST(Tower, SmallestConstantForWeightsOneTwo) {
  const FieldTower t = FieldTower::build(3, {1, 2});
  EXPECT_EQ(t.d(), 2U);
  EXPECT_EQ(t.c(), 2U);
  EXPECT_EQ(t.zeta(), 2U);
}

TEST(Tower, SkipsConstantsThatAreCubes) {
  // 2 = 3^2 mod 7 is a cube root of unity's partner: 2^2 = 4, 2^3 = 1, so 2 is a cube.
  const FieldTower t = FieldTower::build(7, {2, 3});
  EXPECT_EQ(t.d(), 6U);
  EXPECT_EQ(t.c(), 3U);
  EXPECT_EQ(t.zeta(), 3U);
}

TEST(Tower, RejectsBadPrimes) {
  EXPECT_EQ(code_of([] { FieldTower::build(9, {1, 2}); }), ErrorCode::not_prime);
  EXPECT_EQ(code_of([] { FieldTower::build(5, {1, 3}); }), ErrorCode::inadmissible_prime);
  EXPECT_EQ(code_of([] { FieldTower::with_constant(3, {1, 2}, 1); }), ErrorCode::irreducibility_failure);
  EXPECT_EQ(code_of([] { FieldTower::build(3, {1, 2}).extend_scalars(2); }), ErrorCode::not_coprime);
}

TEST(Tower, MergeRule) {
  const FieldTower t = FieldTower::build(7, {2, 3});
  const BasisProduct low = t.merge(2, 3);
  EXPECT_EQ(low.exponent, 5U);
  EXPECT_EQ(low.scalar, t.base().one());
  const BasisProduct high = t.merge(4, 5);
  EXPECT_EQ(high.exponent, 3U);
  EXPECT_EQ(high.scalar, t.c_scalar());
  for (unsigned m = 0; m < t.d(); ++m) {
    const BasisProduct inv = t.basis_inverse(m);
    EXPECT_EQ(t.mul(t.basis(m), t.scale(inv.scalar, t.basis(inv.exponent))), t.one());
  }
}

TEST(Tower, SubfieldBases) {
  const FieldTower t = FieldTower::build(13, {3, 4});
  EXPECT_EQ(t.subfield_basis(0), (std::vector<unsigned>{0, 4, 8}));
  EXPECT_EQ(t.subfield_basis(1), (std::vector<unsigned>{0, 3, 6, 9}));
  EXPECT_EQ(code_of([&] { t.subfield_basis(2); }), ErrorCode::unknown_vertex);
}

TEST(Tower, InverseIsTwoSided) {
  std::mt19937_64 rng(11);
  const FieldTower t = FieldTower::build(13, {3, 4});
  for (int n = 0; n < 200; ++n) {
    const TowerElement x = checks::random_element(t, rng);
    if (t.is_zero(x)) continue;
    EXPECT_EQ(t.mul(x, t.inv(x)), t.one());
  }
  EXPECT_EQ(code_of([&] { t.inv(t.zero()); }), ErrorCode::division_by_zero);
}

TEST(Tower, AgreesWithNaiveQuotientSmall) {
  std::mt19937_64 rng(5);
  for (const auto& tc : checks::tower_cases()) {
    for (std::uint32_t p = 3; p < 40; ++p) {
      if (!is_prime(p) || p % tc.d != 1) continue;
      EXPECT_EQ(checks::check_tower(FieldTower::build(p, tc.weights), 500, rng), "");
    }
  }
}

TEST(Tower, ScalarExtensionKeepsStructure) {
  const FieldTower t = FieldTower::build(3, {1, 2});
  const FieldTower t3 = t.extend_scalars(3);
  EXPECT_EQ(t3.base_degree(), 3U);
  EXPECT_EQ(t3.base().order(), 27U);
  EXPECT_EQ(t3.c(), t.c());
  EXPECT_TRUE(kummer_irreducible(t3.base(), 2, 2));
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    TowerElement x = t3.zero();
    for (auto& s : x.coords) s = Scalar{rng() % 27};
    if (t3.is_zero(x)) continue;
    EXPECT_EQ(t3.mul(x, t3.inv(x)), t3.one());
    // sigma has order r d = 6 on E over GF(p).
    EXPECT_EQ(t3.frobenius(x, 6), x);
  }
  // v is moved by sigma but fixed by sigma^2 composed with the base.
  EXPECT_FALSE(t3.in_subfield(t3.basis(1), 0));
  EXPECT_TRUE(t3.in_subfield(t3.basis(1), 1));
}

TEST(Tower, FrobeniusIsMultiplicative) {
  std::mt19937_64 rng(9);
  const FieldTower t = FieldTower::build(11, {2, 5});
  for (int n = 0; n < 200; ++n) {
    const TowerElement x = checks::random_element(t, rng);
    const TowerElement y = checks::random_element(t, rng);
    EXPECT_EQ(t.frobenius(t.mul(x, y), 1), t.mul(t.frobenius(x, 1), t.frobenius(y, 1)));
    EXPECT_EQ(t.frobenius(x, static_cast<long long>(t.d())), x);
  }
}
