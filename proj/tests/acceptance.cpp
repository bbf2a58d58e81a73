// One line per acceptance criterion; exit status 1 if any line fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "spm/compatibility.hpp"
#include "spm/jacobian.hpp"
#include "spm/number_theory.hpp"
#include "tower_checks.hpp"

using namespace spm;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Corpus {
  std::vector<ExchangeMatrix> matrices;
  std::vector<std::size_t> vertices;
};

Corpus corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus c;
  for (std::size_t n = 0; n < count; ++n) {
    c.matrices.push_back(fixtures::random_matrix(rng, 1 + rng() % 6));
    c.vertices.push_back(rng() % c.matrices.back().size());
  }
  return c;
}

Outcome bijection_roundtrip() {
  const Corpus c = corpus(200, 101);
  for (const ExchangeMatrix& b : c.matrices) {
    if (!(quiver_to_matrix(matrix_to_quiver(b)) == b)) return {false, "roundtrip changed a matrix"};
  }
  return {true, "200 matrices"};
}

Outcome mutation_commutation() {
  const Corpus c = corpus(1000, 202);
  for (std::size_t n = 0; n < c.matrices.size(); ++n) {
    const ExchangeMatrix& b = c.matrices[n];
    const std::size_t k = c.vertices[n];
    if (mutate_quiver(matrix_to_quiver(b), k).multiplicities() !=
        matrix_to_quiver(mutate_matrix(b, k)).multiplicities()) {
      return {false, "instance " + std::to_string(n)};
    }
  }
  return {true, "1000 instances"};
}

Outcome involutivity() {
  const Corpus c = corpus(1000, 202);
  for (std::size_t n = 0; n < c.matrices.size(); ++n) {
    const ExchangeMatrix& b = c.matrices[n];
    const std::size_t k = c.vertices[n];
    if (!(mutate_matrix(mutate_matrix(b, k), k) == b)) return {false, "matrix instance " + std::to_string(n)};
    const WeightedQuiver q = matrix_to_quiver(b);
    if (mutate_quiver(mutate_quiver(q, k), k).multiplicities() != q.multiplicities()) {
      return {false, "quiver instance " + std::to_string(n)};
    }
  }
  return {true, "1000 instances"};
}

Outcome tower_correctness() {
  std::mt19937_64 rng(303);
  std::size_t towers = 0;
  for (const auto& tc : checks::tower_cases()) {
    for (std::uint32_t p = 3; p < 100; ++p) {
      if (!is_prime(p) || p % tc.d != 1) continue;
      const std::string failure = checks::check_tower(FieldTower::build(p, tc.weights), 10000, rng);
      if (!failure.empty()) return {false, failure};
      ++towers;
    }
  }
  return {true, std::to_string(towers) + " towers, 10^4 products each"};
}

Outcome worked_example() {
  const SpeciesPtr sp = fixtures::triangle_species();
  const SpeciesWithPotential pre = premutate_sp(SpeciesWithPotential(sp, fixtures::uwt(sp)), 2);
  const Species& s = *pre.species;
  AlgebraElement tilde(pre.species);
  tilde.add_term(fixtures::cycle(s, {"u", "[w.0.t]"}), s.base().one());
  tilde.add_term(fixtures::cycle(s, {"w*", "[w.0.t]", "t*"}), s.base().one());
  Path p = fixtures::cycle(s, {"w*", "[w.1.t]", "t*"});
  p.omegas[0] = 1;
  tilde.add_term(p, Scalar{2});
  if (!cyclically_equivalent(pre.potential, Potential(tilde))) return {false, "premutated potential"};

  const auto [red, report] = reduce_sp(pre);
  if (report.removed_pairs != std::vector<std::pair<std::string, std::string>>{{"u", "[w.0.t]"}}) {
    return {false, "removed pairs"};
  }
  AlgebraElement sred(red.species);
  Path q = fixtures::cycle(*red.species, {"w*", "[w.1.t]", "t*"});
  q.omegas[0] = 1;
  sred.add_term(q, Scalar{2});
  if (!cyclically_equivalent(red.potential, Potential(sred))) return {false, "reduced potential"};
  if (red.quiver().multiplicities() != matrix_to_quiver(mutate_matrix(fixtures::triangle_matrix(), 2)).multiplicities()) {
    return {false, "multiplicities"};
  }
  return {true, "S~ and S_red match the hand expansion"};
}

Outcome degenerate_control() {
  const SpeciesWithPotential zero(fixtures::triangle_species());
  const auto [red, report] = mutate_sp(zero, 2);
  if (report.residual_2cycles.empty()) return {false, "no residual 2-cycles"};
  if (is_nondegenerate_along(zero, {2}).nondegenerate) return {false, "reported non-degenerate"};
  return {true, "residual 2-cycles between 1 and 2: " + std::to_string(report.residual_2cycles.at({0, 1}))};
}

Outcome desk_scale_existence() {
  const WeightedQuiver q = fixtures::triangle_quiver();
  std::vector<std::vector<std::size_t>> seqs = {{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : seqs) {
      if (s.size() != len - 1) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        auto t = s;
        t.push_back(k);
        next.push_back(t);
      }
    }
    seqs.insert(seqs.end(), next.begin(), next.end());
  }
  SearchOptions opts;
  opts.budget = 100;
  opts.max_r = 7;
  std::size_t max_attempts = 0;
  unsigned max_r = 1;
  for (const auto& seq : seqs) {
    const SearchResult r = search_nondegenerate(q, 3, seq, opts);
    std::ostringstream name;
    for (std::size_t k : seq) name << k + 1;
    if (!r.witness) return {false, "no witness for sequence " + name.str()};
    if (!replay_witness(q, 3, seq, *r.witness)) return {false, "witness for " + name.str() + " did not replay"};
    ExchangeMatrix b = fixtures::triangle_matrix();
    for (std::size_t step = 0; step < seq.size(); ++step) {
      b = mutate_matrix(b, seq[step]);
      if (r.witness->trace.steps[step].multiplicities != matrix_to_quiver(b).multiplicities()) {
        return {false, "species/matrix disagreement along " + name.str()};
      }
    }
    max_attempts = std::max(max_attempts, r.witness->attempts);
    max_r = std::max(max_r, r.witness->extension_degree);
  }
  return {true, std::to_string(seqs.size()) + " sequences, max attempts " + std::to_string(max_attempts) +
                    ", max r " + std::to_string(max_r)};
}

Outcome jacobian_fixtures() {
  const auto two = make_species(FieldTower::build(3, {1, 2}), WeightedQuiver({1, 2}, {{"a", 0, 1}, {"b", 1, 0}}));
  AlgebraElement s(two, 4);
  s.add_term(fixtures::cycle(*two, {"b", "a"}), two->base().one());
  const JacobianDimension dim = jacobian_quotient_dim(Potential(s), 4);
  if (dim.dimension != 3 || !dim.stabilized) {
    return {false, "2-cycle: dimension " + std::to_string(dim.dimension) + (dim.stabilized ? "" : ", not stabilized")};
  }
  const auto arrow = make_species(FieldTower::build(3, {1, 2}), WeightedQuiver({1, 2}, {{"a", 0, 1}}));
  const std::size_t free_dim = truncated_jacobian_dimension(Potential::zero(arrow, 4), 4);
  if (free_dim != 5) return {false, "arrow species: dimension " + std::to_string(free_dim)};
  return {true, "dimensions 3 (stabilized) and 5"};
}

Outcome reduction_determinism() {
  const auto baseline = matrix_to_quiver(mutate_matrix(fixtures::triangle_matrix(), 2)).multiplicities();
  std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h", "x", "y", "z"};
  std::mt19937_64 rng(505);
  for (int run = 0; run < 50; ++run) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const WeightedQuiver q({1, 1, 2}, {{pool[0], 1, 0}, {pool[1], 2, 1}, {pool[2], 0, 2}});
    const auto sp = make_species(FieldTower::with_constant(3, {1, 1, 2}, 2), q);
    AlgebraElement s(sp);
    s.add_term(fixtures::cycle(*sp, {pool[0], pool[1], pool[2]}), sp->base().one());
    const auto pre = premutate_sp(SpeciesWithPotential(sp, Potential(std::move(s))), 2);
    if (reduce_sp(pre).first.quiver().multiplicities() != baseline) return {false, "run " + std::to_string(run)};
  }
  return {true, "50 permuted reruns"};
}

Outcome weight_one_specialization() {
  const WeightedQuiver q({1, 1, 1}, {{"c", 0, 1}, {"b", 1, 2}, {"a", 2, 0}});
  const auto sp = make_species(FieldTower::build(3, {1, 1, 1}), q);
  AlgebraElement s(sp);
  s.add_term(fixtures::cycle(*sp, {"a", "b", "c"}), sp->base().one());
  const auto [red, report] = mutate_sp(SpeciesWithPotential(sp, Potential(std::move(s))), 1);
  if (!(red.quiver() == WeightedQuiver({1, 1, 1}, {{"c*", 1, 0}, {"b*", 2, 1}}))) return {false, "quiver"};
  if (!red.potential.is_zero()) return {false, "potential should vanish"};
  return {true, "3-cycle at 2 becomes the linear quiver with S = 0"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"bijection roundtrip", bijection_roundtrip, 1.0},
      {"mutation commutation", mutation_commutation, 5.0},
      {"involutivity", involutivity, 0.0},
      {"tower correctness", tower_correctness, 10.0},
      {"worked example", worked_example, 1.0},
      {"degenerate control", degenerate_control, 0.0},
      {"existence at desk scale", desk_scale_existence, 60.0},
      {"jacobian fixtures", jacobian_fixtures, 0.0},
      {"reduction determinism", reduction_determinism, 0.0},
      {"weight-1 specialization", weight_one_specialization, 0.0},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out = {false, out.detail + "; over the " + std::to_string(c.limit_seconds) + " s limit"};
    }
    std::printf("%s  %-26s %.3fs  %s\n", out.pass ? "PASS" : "FAIL", c.name, secs, out.detail.c_str());
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
