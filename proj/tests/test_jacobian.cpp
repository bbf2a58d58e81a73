#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "spm/jacobian.hpp"

using namespace spm;
using fixtures::cycle;

namespace {

Scalar sc(std::uint32_t v) { return Scalar{v}; }

// Counts decorated paths of length <= n avoiding every forbidden arrow word.
// Valid as a quotient dimension when the ideal is monomial: generators that
// are single arrows, or undecorated words over weight-1 vertices.
std::size_t monomial_quotient_dim(const WeightedQuiver& q, const std::vector<std::vector<std::size_t>>& forbidden,
                                  unsigned n) {
  std::size_t total = 0;
  std::vector<std::size_t> seq;
  auto avoids = [&] {
    for (const auto& word : forbidden) {
      if (word.size() > seq.size()) continue;
      for (std::size_t s = 0; s + word.size() <= seq.size(); ++s) {
        if (std::equal(word.begin(), word.end(), seq.begin() + static_cast<std::ptrdiff_t>(s))) return false;
      }
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t at, std::size_t product) -> void {
    if (!avoids()) return;
    total += product;
    if (seq.size() == n) return;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrow(a).target != at) continue;
      seq.push_back(a);
      self(self, q.arrow(a).source, product * q.weights()[q.arrow(a).source]);
      seq.pop_back();
    }
  };
  for (std::size_t v = 0; v < q.size(); ++v) walk(walk, v, q.weights()[v]);
  return total;
}

SpeciesPtr two_cycle() {
  return make_species(FieldTower::with_constant(3, {1, 2}, 2), WeightedQuiver({1, 2}, {{"a", 0, 1}, {"b", 1, 0}}));
}

}  // namespace

TEST(Jacobian, TwoCycleQuotientIsTheSemisimplePart) {
  const auto sp = two_cycle();
  AlgebraElement x(sp, 4);
  x.add_term(cycle(*sp, {"b", "a"}), sc(1));
  const Potential s(x);
  const auto gens = jacobian_generators(s);
  ASSERT_EQ(gens.size(), 2u);
  for (const auto& g : gens) {
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.terms().begin()->first.length(), 1u);
  }
  const std::size_t oracle = monomial_quotient_dim(sp->quiver(), {{0}, {1}}, 4);
  EXPECT_EQ(oracle, 3u);
  const auto dim = jacobian_quotient_dim(s, 4);
  EXPECT_EQ(dim.dimension, oracle);
  EXPECT_TRUE(dim.stabilized);
}

TEST(Jacobian, SingleArrowWithZeroPotential) {
  const auto sp = make_species(FieldTower::with_constant(3, {1, 2}, 2), WeightedQuiver({1, 2}, {{"a", 1, 0}}));
  const auto s = Potential::zero(sp, 4);
  EXPECT_TRUE(jacobian_generators(s).empty());
  const std::size_t oracle = monomial_quotient_dim(sp->quiver(), {}, 4);
  EXPECT_EQ(oracle, 5u);
  const auto dim = jacobian_quotient_dim(s, 4);
  EXPECT_EQ(dim.dimension, oracle);
  EXPECT_TRUE(dim.stabilized);
}

TEST(Jacobian, ArrowlessSpeciesGivesTheWeightSum) {
  const std::vector<unsigned> weights = {1, 2, 3};
  const auto sp = make_species(FieldTower::build(7, weights), WeightedQuiver(weights, {}));
  const auto dim = jacobian_quotient_dim(Potential::zero(sp, 6), 6);
  EXPECT_EQ(dim.dimension, std::accumulate(weights.begin(), weights.end(), std::size_t{0}));
  EXPECT_TRUE(dim.stabilized);
}

TEST(Jacobian, ZeroPotentialOnACycleNeverStabilizes) {
  const auto sp = two_cycle();
  const auto s = Potential::zero(sp, 5);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto dim = jacobian_quotient_dim(s, n);
    EXPECT_EQ(dim.dimension, monomial_quotient_dim(sp->quiver(), {}, n)) << n;
    EXPECT_FALSE(dim.stabilized) << n;
  }
}

TEST(Jacobian, ClassicalTriangleMatchesMonomialCount) {
  // Weight 1 everywhere: the derivatives of uwt are the words wt, tu, uw.
  const WeightedQuiver q({1, 1, 1}, {{"u", 1, 0}, {"w", 2, 1}, {"t", 0, 2}});
  const auto sp = make_species(FieldTower::build(3, {1, 1, 1}), q);
  AlgebraElement x(sp, 6);
  x.add_term(cycle(*sp, {"u", "w", "t"}), sc(1));
  const Potential s(x);
  const std::size_t t = fixtures::arrow(*sp, "t");
  const std::size_t u = fixtures::arrow(*sp, "u");
  const std::size_t w = fixtures::arrow(*sp, "w");
  const std::size_t oracle = monomial_quotient_dim(q, {{w, t}, {t, u}, {u, w}}, 6);
  EXPECT_EQ(oracle, 6u);
  const auto dim = jacobian_quotient_dim(s, 6);
  EXPECT_EQ(dim.dimension, oracle);
  EXPECT_TRUE(dim.stabilized);
}

TEST(Jacobian, RetruncationMatchesDirectComputation) {
  const auto sp = fixtures::triangle_species();
  const auto s12 = fixtures::uwt(sp, 12);
  const auto s5 = fixtures::uwt(sp, 5);
  EXPECT_EQ(truncated_jacobian_dimension(s12, 5), truncated_jacobian_dimension(s5, 5));
}
