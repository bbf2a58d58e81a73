#include "spm/exchange_matrix.hpp"

#include <algorithm>
#include <string>

#include "spm/error.hpp"

namespace spm {

ExchangeMatrix::ExchangeMatrix(std::vector<unsigned> skew_symmetrizer,
                               std::vector<std::vector<std::int64_t>> rows)
    : d_(std::move(skew_symmetrizer)) {
  const std::size_t n = d_.size();
  if (rows.size() != n) {
    throw Error(ErrorCode::malformed_matrix, "matrix has " + std::to_string(rows.size()) +
                                                 " rows but " + std::to_string(n) + " weights");
  }
  entries_.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::malformed_matrix, "matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

std::vector<std::vector<std::int64_t>> ExchangeMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * size()),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size()));
  }
  return out;
}

bool validate(const ExchangeMatrix& b) {
  const std::size_t n = b.size();
  const auto& d = b.skew_symmetrizer();
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0 || b.at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (static_cast<std::int64_t>(d[i]) * b.at(i, j) != -static_cast<std::int64_t>(d[j]) * b.at(j, i)) {
        return false;
      }
    }
  }
  return true;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  if (k >= n) throw Error(ErrorCode::unknown_vertex, "mutation vertex out of range");
  ExchangeMatrix out = b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.set(i, j, -b.at(i, j));
        continue;
      }
      const std::int64_t bik = b.at(i, k);
      const std::int64_t prod = std::max<std::int64_t>(bik * b.at(k, j), 0);
      const std::int64_t sign = (bik > 0) - (bik < 0);
      out.set(i, j, b.at(i, j) + sign * prod);
    }
  }
  return out;
}

}  // namespace spm
