#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spm/search.hpp"

namespace spm {

using Multiplicities = std::vector<std::vector<std::size_t>>;

struct CompatibilityStep {
  std::size_t vertex = 0;
  ExchangeMatrix matrix;
  /// matrix_to_quiver of the matrix-level result.
  Multiplicities from_matrix;
  Multiplicities quiver;
  /// Absent once the species level has stopped (or was never run).
  std::optional<Multiplicities> species;
  bool species_2_acyclic = true;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> residual_2cycles;
  bool matrix_quiver_agree = true;
  bool species_agree = true;
};

struct CompatibilityReport {
  std::vector<CompatibilityStep> steps;
  bool species_level = false;
  /// The matrix and quiver levels agreed at every step.
  bool levels_agree = true;
  /// First step whose species-level quiver is not 2-acyclic.
  std::optional<std::size_t> degenerate_step;
  std::optional<SpeciesWithPotential> initial;

  /// Fixed-width step-by-step table.
  std::string table() const;
};

struct CompatibilityOptions {
  /// Potential on the species of matrix_to_quiver(b) over the canonical tower.
  std::optional<Potential> potential;
  /// Without a potential, search for one along seq.
  bool search = false;
  SearchOptions search_options;
};

CompatibilityReport compatibility_report(const ExchangeMatrix& b, const std::vector<std::size_t>& seq,
                                         std::uint32_t p, const CompatibilityOptions& options = {});

}  // namespace spm
