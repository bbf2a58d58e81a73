#pragma once

#include <cstdint>
#include <vector>

namespace spm {

/// Integer n x n matrix B together with the diagonal (d_1, ..., d_n) of a
/// candidate skew-symmetrizer D. Shape is checked on construction; the
/// skew-symmetrizability invariant is checked by validate().
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(std::vector<unsigned> skew_symmetrizer, std::vector<std::vector<std::int64_t>> rows);

  std::size_t size() const noexcept { return d_.size(); }
  const std::vector<unsigned>& skew_symmetrizer() const noexcept { return d_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t value) { entries_[i * size() + j] = value; }
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::vector<unsigned> d_;
  std::vector<std::int64_t> entries_;
};

/// True iff b_ii = 0, every d_i > 0, and d_i b_ij = -d_j b_ji for all i, j.
bool validate(const ExchangeMatrix& b);

/// Matrix mutation at k (0-based):
/// b'_ij = -b_ij if k in {i, j}, else b_ij + sgn(b_ik) max(b_ik b_kj, 0).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

}  // namespace spm
