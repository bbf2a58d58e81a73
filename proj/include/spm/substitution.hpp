#pragma once

#include <map>
#include <optional>

#include "spm/algebra_element.hpp"

namespace spm {

/// Arrow substitution a -> phi(a), extended to the unique continuous algebra
/// morphism that fixes R (lazy paths and decorations). Arrows without an
/// explicit image are fixed.
class Substitution {
 public:
  Substitution(SpeciesPtr species, unsigned truncation = kDefaultTruncation);

  const SpeciesPtr& species_ptr() const noexcept { return species_; }
  unsigned truncation() const noexcept { return truncation_; }
  /// Image must have terms running from t(arrow) to h(arrow) only.
  void set(std::size_t arrow, AlgebraElement image);
  /// Explicit image, or the arrow itself.
  AlgebraElement image(std::size_t arrow) const;
  bool is_identity_on(std::size_t arrow) const { return images_.count(arrow) == 0; }
  const std::map<std::size_t, AlgebraElement>& images() const noexcept { return images_; }

  /// Throws invalid_substitution unless every arrow bundle's degree-1 block
  /// is invertible over the compositum field of its endpoints.
  void validate() const;
  /// Degree-1 part of every image is the arrow itself.
  bool is_unitriangular() const;

 private:
  SpeciesPtr species_;
  unsigned truncation_;
  std::map<std::size_t, AlgebraElement> images_;
};

AlgebraElement apply_substitution(const AlgebraElement& x, const Substitution& phi);
Potential apply_substitution(const Potential& s, const Substitution& phi);

/// outer ∘ inner: apply(apply(x, inner), outer) == apply(x, compose(outer, inner)).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// Inverse of a unitriangular substitution, exact up to the truncation order.
Substitution invert_unitriangular(const Substitution& phi);

/// Coordinate of lambda * arrow: the L-scalar of a degree-1 term
/// w arrow w', L = F_{h(arrow)} F_{t(arrow)}, as an element of E.
TowerElement arrow_term_scalar(const Species& species, const Path& term, Scalar coeff);
/// Inverse of arrow_term_scalar: lambda * arrow as an algebra element.
AlgebraElement scalar_times_arrow(const SpeciesPtr& species, unsigned truncation,
                                  const TowerElement& lambda, std::size_t arrow);

}  // namespace spm
