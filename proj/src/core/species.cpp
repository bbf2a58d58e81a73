#include "spm/species.hpp"

#include "spm/error.hpp"

namespace spm {

Species::Species(FieldTower tower, WeightedQuiver quiver)
    : tower_(std::move(tower)), quiver_(std::move(quiver)) {
  if (tower_.weights() != quiver_.weights()) {
    throw Error(ErrorCode::species_mismatch, "tower and quiver weights disagree");
  }
  if (!is_strongly_primitive(quiver_)) {
    throw Error(ErrorCode::not_strongly_primitive, "weights are not pairwise coprime");
  }
  bases_.reserve(quiver_.size());
  for (std::size_t i = 0; i < quiver_.size(); ++i) bases_.push_back(tower_.subfield_basis(i));
}

SpeciesPtr make_species(FieldTower tower, WeightedQuiver quiver) {
  return std::make_shared<const Species>(std::move(tower), std::move(quiver));
}

}  // namespace spm
