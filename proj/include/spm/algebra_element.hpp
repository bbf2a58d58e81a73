#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "spm/species.hpp"

namespace spm {

inline constexpr unsigned kDefaultTruncation = 12;

/// Decorated path w_0 a_1 w_1 ... a_l w_l, composed right to left:
/// t(a_q) = h(a_{q+1}). Arrows are indices into the species' id-sorted arrow
/// list; omegas[q] is the eigenbasis exponent of w_q, which lives at h(a_1)
/// for q = 0 and at t(a_q) otherwise. A length-0 path is w_0 e_head.
struct Path {
  std::uint32_t head = 0;
  std::vector<std::uint32_t> arrows;
  std::vector<std::uint32_t> omegas{0};

  std::size_t length() const noexcept { return arrows.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    if (auto c = a.omegas <=> b.omegas; c != 0) return c;
    return a.head <=> b.head;
  }
};

std::size_t path_tail(const Species& species, const Path& path);
bool is_cyclic_path(const Species& species, const Path& path);
/// Checks the composability and decoration invariants.
bool is_valid_path(const Species& species, const Path& path);

/// All basis paths of exactly the given length, in Path order.
std::vector<Path> enumerate_paths(const Species& species, std::size_t length);

/// Finite element of the truncated complete path algebra: a map from basis
/// paths of length <= N to nonzero scalars. Any operation that has to drop a
/// nonzero term longer than N sets the horizon flag on its result.
class AlgebraElement {
 public:
  using TermMap = std::map<Path, Scalar>;

  AlgebraElement(SpeciesPtr species, unsigned truncation = kDefaultTruncation);

  static AlgebraElement lazy(SpeciesPtr species, unsigned truncation, std::size_t vertex,
                             unsigned omega = 0);
  static AlgebraElement arrow(SpeciesPtr species, unsigned truncation, std::size_t arrow);
  /// The unit sum of all e_i.
  static AlgebraElement identity(SpeciesPtr species, unsigned truncation);

  const SpeciesPtr& species_ptr() const noexcept { return species_; }
  const Species& species() const noexcept { return *species_; }
  unsigned truncation() const noexcept { return truncation_; }
  bool horizon() const noexcept { return horizon_; }
  void mark_horizon() noexcept { horizon_ = true; }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Path& path) const;

  /// Accumulates coeff * path; paths longer than N are dropped (horizon).
  void add_term(const Path& path, Scalar coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(Scalar s) const;
  AlgebraElement negated() const;
  /// Homogeneous component of the given length.
  AlgebraElement component(std::size_t length) const;
  /// Sum of components of length >= the given bound.
  AlgebraElement tail_from(std::size_t length) const;
  std::size_t min_length() const;
  std::size_t max_length() const;

  /// Same species (structurally), same truncation, same terms.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  SpeciesPtr species_;
  unsigned truncation_;
  bool horizon_ = false;
  TermMap terms_;
};

void check_same_algebra(const AlgebraElement& x, const AlgebraElement& y);

/// Bilinear extension of path concatenation; boundary decorations merge via
/// v^m v^m' = c^{floor((m+m')/d)} v^{(m+m') mod d}.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

enum class Side { left, right };

/// Action of u in F_vertex on x, whose terms all start (left) or end (right)
/// at that vertex.
AlgebraElement module_act(const TowerElement& u, const AlgebraElement& x, std::size_t vertex,
                          Side side);

/// An element whose terms are cyclic paths of positive length.
class Potential {
 public:
  explicit Potential(AlgebraElement element);
  static Potential zero(SpeciesPtr species, unsigned truncation = kDefaultTruncation);

  const AlgebraElement& element() const noexcept { return element_; }
  const Species& species() const noexcept { return element_.species(); }
  const SpeciesPtr& species_ptr() const noexcept { return element_.species_ptr(); }
  unsigned truncation() const noexcept { return element_.truncation(); }
  bool is_zero() const noexcept { return element_.is_zero(); }

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  AlgebraElement element_;
};

/// A cyclic term with its leading decoration folded into the trailing one:
/// a_1 w_1 a_2 ... a_l w_l (w_0 = 1), so rotation is a plain cyclic shift of
/// the (arrow, omega) pairs.
struct CyclicWord {
  std::vector<std::uint32_t> arrows;
  std::vector<std::uint32_t> omegas;
  Scalar coeff;
};

CyclicWord normalize_cycle(const Species& species, const Path& path, Scalar coeff);
/// The word read starting at position start, as a path with w_0 = 1.
Path rotation_path(const Species& species, const CyclicWord& word, std::size_t start);

/// Every term rotated to its least rotation (arrow ids first, then exponents).
Potential canonical_cyclic_form(const Potential& s);
bool cyclically_equivalent(const Potential& s, const Potential& t);

/// Sum over terms and occurrences a_q = a of
/// w_q a_{q+1} ... a_l (w_l w_0) a_1 w_1 ... a_{q-1} w_{q-1}.
AlgebraElement cyclic_derivative(const Potential& s, std::size_t arrow);

}  // namespace spm
