#pragma once

#include <vector>

#include "spm/algebra_element.hpp"

namespace spm {

struct JacobianDimension {
  std::size_t dimension = 0;
  /// Dimension is unchanged when recomputed at truncation N - 1.
  bool stabilized = false;
};

/// Generators of the Jacobian ideal: one cyclic derivative per arrow.
/// Kept behind one function so a finer generator family can replace it.
std::vector<AlgebraElement> jacobian_generators(const Potential& s);

/// Dimension over K of the truncated path algebra modulo the two-sided ideal
/// generated by the Jacobian generators and all paths longer than N.
std::size_t truncated_jacobian_dimension(const Potential& s, unsigned truncation);

JacobianDimension jacobian_quotient_dim(const Potential& s, unsigned truncation);

}  // namespace spm
