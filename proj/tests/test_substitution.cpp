#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "spm/error.hpp"

using namespace spm;
using fixtures::arrow;
using fixtures::cycle;
using fixtures::path;

namespace {

Scalar sc(std::uint32_t v) { return Scalar{v}; }

SpeciesPtr premutated_triangle() {
  const SpeciesWithPotential sp(fixtures::triangle_species(), fixtures::uwt(fixtures::triangle_species()));
  return premutate_sp(sp, 2).species;
}

// Random element of e_{h(a)} A e_{t(a)} of length 2..max_len.
AlgebraElement random_higher(const SpeciesPtr& sp, std::size_t a, std::mt19937_64& rng, std::size_t max_len,
                             unsigned truncation) {
  AlgebraElement out(sp, truncation);
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (const Path& p : enumerate_paths(*sp, len)) {
      if (p.head != sp->head(a) || path_tail(*sp, p) != sp->tail(a)) continue;
      if (rng() % 3 == 0) out.add_term(p, sc(static_cast<std::uint32_t>(rng() % sp->base().order())));
    }
  }
  return out;
}

Substitution random_unitriangular(const SpeciesPtr& sp, std::mt19937_64& rng, unsigned truncation) {
  Substitution phi(sp, truncation);
  for (std::size_t a = 0; a < sp->arrow_count(); ++a) {
    if (rng() % 2 == 0) continue;
    phi.set(a, AlgebraElement::arrow(sp, truncation, a) + random_higher(sp, a, rng, 3, truncation));
  }
  return phi;
}

AlgebraElement random_element(const SpeciesPtr& sp, std::mt19937_64& rng, unsigned truncation) {
  AlgebraElement x(sp, truncation);
  for (std::size_t len = 0; len <= 3; ++len) {
    for (const Path& p : enumerate_paths(*sp, len)) {
      if (rng() % 4 == 0) x.add_term(p, sc(static_cast<std::uint32_t>(rng() % sp->base().order())));
    }
  }
  return x;
}

}  // namespace

TEST(Substitution, IdentityFixesEverything) {
  const auto sp = premutated_triangle();
  std::mt19937_64 rng(5);
  const Substitution id(sp, 12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(sp, rng, 12);
    EXPECT_EQ(apply_substitution(x, id), x);
  }
  EXPECT_TRUE(id.is_unitriangular());
  EXPECT_NO_THROW(id.validate());
}

TEST(Substitution, WorkedExampleExpandsLinearly) {
  const auto sp = premutated_triangle();
  const Species& s = *sp;
  Substitution phi(sp, 12);
  AlgebraElement tw(sp, 12);
  tw.add_term(path(s, {arrow(s, "t*"), arrow(s, "w*")}, {0, 0, 0}), sc(1));
  phi.set(arrow(s, "u"), AlgebraElement::arrow(sp, 12, arrow(s, "u")) - tw);

  AlgebraElement x(sp, 12);
  x.add_term(cycle(s, {"u", "[w.0.t]"}), sc(1));
  AlgebraElement expected(sp, 12);
  expected.add_term(cycle(s, {"u", "[w.0.t]"}), sc(1));
  expected.add_term(cycle(s, {"t*", "w*", "[w.0.t]"}), sc(2));
  EXPECT_EQ(apply_substitution(x, phi), expected);
}

TEST(Substitution, ApplicationIsAnAlgebraMorphism) {
  const auto sp = premutated_triangle();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto phi = random_unitriangular(sp, rng, 8);
    const auto x = random_element(sp, rng, 8);
    const auto y = random_element(sp, rng, 8);
    EXPECT_EQ(apply_substitution(multiply(x, y), phi),
              multiply(apply_substitution(x, phi), apply_substitution(y, phi)));
    EXPECT_EQ(apply_substitution(x + y, phi), apply_substitution(x, phi) + apply_substitution(y, phi));
  }
}

TEST(Substitution, CompositionIsFunctorial) {
  for (const SpeciesPtr& sp : {premutated_triangle(), fixtures::triangle_species()}) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const auto phi = random_unitriangular(sp, rng, 8);
      const auto psi = random_unitriangular(sp, rng, 8);
      const auto x = random_element(sp, rng, 8);
      EXPECT_EQ(apply_substitution(apply_substitution(x, phi), psi), apply_substitution(x, compose(psi, phi)));
    }
  }
}

TEST(Substitution, UnitriangularInverseFixesPathsUpToTheOrder) {
  const auto sp = premutated_triangle();
  std::mt19937_64 rng(31);
  const unsigned n = 7;
  for (int trial = 0; trial < 10; ++trial) {
    const auto phi = random_unitriangular(sp, rng, n);
    const auto psi = invert_unitriangular(phi);
    EXPECT_TRUE(psi.is_unitriangular());
    for (const auto& both : {compose(psi, phi), compose(phi, psi)}) {
      for (std::size_t a = 0; a < sp->arrow_count(); ++a) {
        EXPECT_EQ(both.image(a), AlgebraElement::arrow(sp, n, a)) << "arrow " << a;
      }
    }
    const auto x = random_element(sp, rng, n);
    EXPECT_EQ(apply_substitution(apply_substitution(x, phi), psi), x);
  }
}

TEST(Substitution, InvertRejectsNonUnitriangular) {
  const auto sp = fixtures::triangle_species();
  Substitution phi(sp, 12);
  phi.set(0, AlgebraElement::arrow(sp, 12, 0).scaled(sc(2)));
  EXPECT_FALSE(phi.is_unitriangular());
  EXPECT_NO_THROW(phi.validate());
  try {
    invert_unitriangular(phi);
    FAIL() << "expected invalid_substitution";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_substitution);
  }
}

TEST(Substitution, SingularLinearBlockIsRejected) {
  const auto sp = premutated_triangle();
  const Species& s = *sp;
  Substitution phi(sp, 12);
  phi.set(arrow(s, "t*"), AlgebraElement(sp, 12));
  try {
    phi.validate();
    FAIL() << "expected invalid_substitution";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_substitution);
  }

  // The two composites span the same bundle; mapping both onto one is singular.
  Substitution collapse(sp, 12);
  const auto a0 = arrow(s, "[w.0.t]");
  const auto a1 = arrow(s, "[w.1.t]");
  collapse.set(a1, AlgebraElement::arrow(sp, 12, a0));
  EXPECT_THROW(collapse.validate(), Error);

  Substitution swap(sp, 12);
  swap.set(a0, AlgebraElement::arrow(sp, 12, a1));
  swap.set(a1, AlgebraElement::arrow(sp, 12, a0));
  EXPECT_NO_THROW(swap.validate());
}

TEST(Substitution, ImagesMustMatchEndpoints) {
  const auto sp = fixtures::triangle_species();
  const Species& s = *sp;
  Substitution phi(sp, 12);
  try {
    phi.set(arrow(s, "u"), AlgebraElement::arrow(sp, 12, arrow(s, "w")));
    FAIL() << "expected invalid_substitution";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_substitution);
  }
  EXPECT_THROW(phi.set(99, AlgebraElement(sp, 12)), Error);
}

TEST(Substitution, ScalarTimesArrowRoundTrips) {
  // t: 1 -> 3 joins weights 1 and 2, so its compositum is F_3 = span{1, v}.
  const auto sp = fixtures::triangle_species();
  const Species& s = *sp;
  const auto& tower = sp->tower();
  const auto t = arrow(s, "t");
  for (std::uint32_t a0 = 0; a0 < 3; ++a0) {
    for (std::uint32_t a1 = 0; a1 < 3; ++a1) {
      TowerElement lambda = tower.zero();
      lambda.coords[0] = sc(a0);
      lambda.coords[1] = sc(a1);
      const auto x = scalar_times_arrow(sp, 12, lambda, t);
      TowerElement back = tower.zero();
      for (const auto& [p, c] : x.terms()) back = tower.add(back, arrow_term_scalar(s, p, c));
      EXPECT_EQ(back, lambda);
    }
  }
  // The weight-1 arrow u only carries base scalars.
  TowerElement v = tower.zero();
  v.coords[1] = sc(1);
  EXPECT_THROW(scalar_times_arrow(sp, 12, v, arrow(s, "u")), Error);
}

TEST(Substitution, ScalarTimesArrowOverAWiderCompositum) {
  // Weights 2 and 3 over GF(7): the compositum is all of E.
  const auto sp = make_species(FieldTower::build(7, {2, 3}), WeightedQuiver({2, 3}, {{"a", 0, 1}}));
  const auto& tower = sp->tower();
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    TowerElement lambda = tower.zero();
    for (auto& c : lambda.coords) c = sc(static_cast<std::uint32_t>(rng() % 7));
    const auto x = scalar_times_arrow(sp, 12, lambda, 0);
    TowerElement back = tower.zero();
    for (const auto& [p, c] : x.terms()) back = tower.add(back, arrow_term_scalar(*sp, p, c));
    EXPECT_EQ(back, lambda);
  }
}
