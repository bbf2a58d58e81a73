#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "spm/exchange_matrix.hpp"

namespace spm {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Loop-free quiver with positive vertex weights. Arrows are kept sorted by
/// id, so an arrow's index is also its rank in the canonical id order.
/// Multiplicities are derived from the arrow list.
class WeightedQuiver {
 public:
  WeightedQuiver() = default;
  WeightedQuiver(std::vector<unsigned> weights, std::vector<Arrow> arrows);

  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }
  std::optional<std::size_t> find(const std::string& id) const;

  /// Number of arrows j -> i.
  std::size_t multiplicity(std::size_t i, std::size_t j) const;
  /// Matrix m with m[i][j] = number of arrows j -> i.
  std::vector<std::vector<std::size_t>> multiplicities() const;

  friend bool operator==(const WeightedQuiver&, const WeightedQuiver&) = default;

 private:
  std::vector<unsigned> weights_;
  std::vector<Arrow> arrows_;
};

bool is_2_acyclic(const WeightedQuiver& q);
bool is_strongly_primitive(const WeightedQuiver& q);

WeightedQuiver matrix_to_quiver(const ExchangeMatrix& b);
ExchangeMatrix quiver_to_matrix(const WeightedQuiver& q);

/// Steps 1-2 of weighted-quiver mutation, with the bookkeeping needed to
/// transport potentials: where each old arrow went, and the id of every
/// composite arrow [b w a].
struct Premutation {
  WeightedQuiver quiver;
  /// New id of each old arrow (by old index); reversed arrows get starred ids.
  std::vector<std::string> renamed;
  /// (old index of b, label, old index of a) -> composite id. For strongly
  /// primitive quivers the label is the eigenbasis exponent of omega.
  std::map<std::tuple<std::size_t, unsigned, std::size_t>, std::string> composites;
};

Premutation premutate_quiver_detailed(const WeightedQuiver& q, std::size_t k);
WeightedQuiver premutate_quiver(const WeightedQuiver& q, std::size_t k);
/// Cancels min(m_ij, m_ji) opposite arrows per vertex pair, lowest ids first.
WeightedQuiver remove_2cycles(const WeightedQuiver& q);
WeightedQuiver mutate_quiver(const WeightedQuiver& q, std::size_t k);

/// "t" <-> "t*": reversing a starred arrow drops the star.
std::string reversed_arrow_id(const std::string& id);
std::string composite_arrow_id(const std::string& b, unsigned label, const std::string& a);

}  // namespace spm
