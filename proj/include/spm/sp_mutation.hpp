#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spm/substitution.hpp"

namespace spm {

/// A strongly primitive species together with a potential on it.
struct SpeciesWithPotential {
  SpeciesPtr species;
  Potential potential;

  SpeciesWithPotential(SpeciesPtr sp, Potential s);
  SpeciesWithPotential(SpeciesPtr sp, unsigned truncation = kDefaultTruncation);

  const WeightedQuiver& quiver() const { return species->quiver(); }
  const FieldTower& tower() const { return species->tower(); }
  unsigned truncation() const { return potential.truncation(); }
};

/// Audit record of a reduction: the accumulated right-equivalence (on the
/// input species), the trivial pairs deleted, and the 2-cycles left behind.
struct ReductionReport {
  std::optional<Substitution> substitution;
  std::vector<std::pair<std::string, std::string>> removed_pairs;
  /// (i, j) with i < j (0-based) -> number of opposite arrow pairs left.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> residual_2cycles;
  std::size_t rounds = 0;
  /// A nonzero term was dropped at the truncation order somewhere.
  bool horizon = false;
  /// The splitting iteration did not clear all trivial arrows within N rounds.
  bool unstabilized = false;
};

/// [S] + sum over a: j->k, b: k->i and w in B_k of w^{-1} b* [b w a] a*.
SpeciesWithPotential premutate_sp(const SpeciesWithPotential& sp, std::size_t k);

/// Splits off the trivial part: eliminates the degree-2 component by an
/// arrow change of basis over each compositum field, pushes the trivial
/// arrows out of the higher terms, then deletes them.
std::pair<SpeciesWithPotential, ReductionReport> reduce_sp(const SpeciesWithPotential& sp);

std::pair<SpeciesWithPotential, ReductionReport> mutate_sp(const SpeciesWithPotential& sp, std::size_t k);

struct NondegeneracyStep {
  std::size_t vertex = 0;
  std::size_t arrow_count = 0;
  std::vector<std::vector<std::size_t>> multiplicities;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> residual_2cycles;
  std::size_t removed_pairs = 0;
  std::size_t potential_terms = 0;
  bool horizon = false;
};

struct NondegeneracyTrace {
  bool nondegenerate = true;
  /// Index into the sequence of the first degenerate step, if any.
  std::optional<std::size_t> failed_step;
  std::vector<NondegeneracyStep> steps;
  std::optional<SpeciesWithPotential> final_state;
};

/// Mutates along seq (0-based vertices, applied first to last) and reports
/// whether every quiver met along the way is 2-acyclic.
NondegeneracyTrace is_nondegenerate_along(const SpeciesWithPotential& sp, const std::vector<std::size_t>& seq);

/// Degree-2 component of a canonical potential as an L-valued pairing
/// matrix for the vertex pair (i, j), i < j: rows are arrows j -> i,
/// columns arrows i -> j (indices into the species' arrows).
struct DegreeTwoBlock {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::vector<TowerElement>> pairing;
};

std::vector<DegreeTwoBlock> degree_two_blocks(const Potential& canonical);

}  // namespace spm
