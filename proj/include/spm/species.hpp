#pragma once

#include <memory>
#include <vector>

#include "spm/tower.hpp"
#include "spm/weighted_quiver.hpp"

namespace spm {

/// The species of a strongly primitive weighted quiver over the tower
/// K ⊆ KE. Immutable; shared between the elements built on it.
class Species {
 public:
  Species(FieldTower tower, WeightedQuiver quiver);

  const FieldTower& tower() const noexcept { return tower_; }
  const WeightedQuiver& quiver() const noexcept { return quiver_; }
  const BaseField& base() const noexcept { return tower_.base(); }
  std::size_t vertex_count() const noexcept { return quiver_.size(); }
  std::size_t arrow_count() const noexcept { return quiver_.arrows().size(); }

  std::size_t head(std::size_t arrow) const { return quiver_.arrow(arrow).target; }
  std::size_t tail(std::size_t arrow) const { return quiver_.arrow(arrow).source; }
  /// Eigenbasis exponents of F_vertex.
  const std::vector<unsigned>& basis(std::size_t vertex) const { return bases_.at(vertex); }
  bool in_basis(std::size_t vertex, unsigned m) const {
    return m < tower_.d() && m % (tower_.d() / quiver_.weights()[vertex]) == 0;
  }

  friend bool operator==(const Species& a, const Species& b) noexcept {
    return a.tower_ == b.tower_ && a.quiver_ == b.quiver_;
  }

 private:
  FieldTower tower_;
  WeightedQuiver quiver_;
  std::vector<std::vector<unsigned>> bases_;
};

using SpeciesPtr = std::shared_ptr<const Species>;

SpeciesPtr make_species(FieldTower tower, WeightedQuiver quiver);

}  // namespace spm
