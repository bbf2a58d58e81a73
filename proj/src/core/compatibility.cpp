#include "spm/compatibility.hpp"

#include <cstdio>
#include <sstream>

#include "spm/error.hpp"

namespace spm {

namespace {

std::string flatten(const Multiplicities& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out << '/';
    for (std::size_t j = 0; j < m[i].size(); ++j) out << (j > 0 ? "," : "") << m[i][j];
  }
  return out.str();
}

}  // namespace

CompatibilityReport compatibility_report(const ExchangeMatrix& b, const std::vector<std::size_t>& seq,
                                         std::uint32_t p, const CompatibilityOptions& options) {
  if (!validate(b)) throw Error(ErrorCode::malformed_matrix, "matrix is not skew-symmetrized by D");
  for (std::size_t k : seq) {
    if (k >= b.size()) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(k + 1) + " out of range");
  }
  CompatibilityReport report;
  const WeightedQuiver q0 = matrix_to_quiver(b);

  std::optional<SpeciesWithPotential> sp;
  if (options.potential) {
    const SpeciesPtr species = make_species(FieldTower::build(p, q0.weights()), q0);
    if (!(options.potential->species() == *species)) {
      throw Error(ErrorCode::species_mismatch, "potential does not live on the species of the matrix");
    }
    sp.emplace(species, *options.potential);
  } else if (options.search) {
    SearchResult found = search_nondegenerate(q0, p, seq, options.search_options);
    if (found.witness) sp = found.witness->state;
  }
  report.species_level = sp.has_value();
  report.initial = sp;

  ExchangeMatrix matrix = b;
  WeightedQuiver quiver = q0;
  for (std::size_t step = 0; step < seq.size(); ++step) {
    const std::size_t k = seq[step];
    CompatibilityStep row;
    row.vertex = k;
    matrix = mutate_matrix(matrix, k);
    quiver = mutate_quiver(quiver, k);
    row.matrix = matrix;
    row.from_matrix = matrix_to_quiver(matrix).multiplicities();
    row.quiver = quiver.multiplicities();
    row.matrix_quiver_agree = row.from_matrix == row.quiver;
    report.levels_agree = report.levels_agree && row.matrix_quiver_agree;
    if (sp && !report.degenerate_step) {
      auto [next, reduction] = mutate_sp(*sp, k);
      row.species = next.quiver().multiplicities();
      row.residual_2cycles = reduction.residual_2cycles;
      row.species_2_acyclic = is_2_acyclic(next.quiver());
      if (!row.species_2_acyclic) {
        report.degenerate_step = step;
      } else {
        row.species_agree = *row.species == row.quiver;
      }
      sp = std::move(next);
    }
    report.steps.push_back(std::move(row));
  }
  return report;
}

std::string CompatibilityReport::table() const {
  std::ostringstream out;
  out << "step  k  matrix->quiver      quiver              species             agree\n";
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const CompatibilityStep& row = steps[s];
    std::string species = "-";
    if (row.species) species = flatten(*row.species) + (row.species_2_acyclic ? "" : " (2-cycles)");
    char line[256];
    std::snprintf(line, sizeof line, "%-5zu %-2zu %-19s %-19s %-19s %s\n", s + 1, row.vertex + 1,
                  flatten(row.from_matrix).c_str(), flatten(row.quiver).c_str(), species.c_str(),
                  row.matrix_quiver_agree && row.species_agree ? "yes" : "NO");
    out << line;
  }
  return out.str();
}

}  // namespace spm
