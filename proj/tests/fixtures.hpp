#pragma once

#include <random>
#include <vector>

#include "spm/sp_mutation.hpp"

namespace fixtures {

// u: 2 -> 1, w: 3 -> 2, t: 1 -> 3 with weights (1, 1, 2).
inline spm::WeightedQuiver triangle_quiver() {
  return spm::WeightedQuiver({1, 1, 2}, {{"u", 1, 0}, {"w", 2, 1}, {"t", 0, 2}});
}

inline spm::ExchangeMatrix triangle_matrix() {
  return spm::ExchangeMatrix({1, 1, 2}, {{0, 1, -2}, {-1, 0, 2}, {1, -1, 0}});
}

inline spm::SpeciesPtr triangle_species(std::uint32_t p = 3) {
  return spm::make_species(spm::FieldTower::with_constant(p, {1, 1, 2}, 2), triangle_quiver());
}

inline spm::Path path(const spm::Species& sp, std::vector<std::uint32_t> arrows, std::vector<std::uint32_t> omegas) {
  spm::Path p;
  p.head = static_cast<std::uint32_t>(sp.head(arrows.at(0)));
  p.arrows = std::move(arrows);
  p.omegas = std::move(omegas);
  return p;
}

inline std::uint32_t arrow(const spm::Species& sp, const std::string& id) {
  return static_cast<std::uint32_t>(sp.quiver().find(id).value());
}

// Cyclic term given by arrow ids with trivial decorations.
inline spm::Path cycle(const spm::Species& sp, const std::vector<std::string>& ids) {
  std::vector<std::uint32_t> arrows;
  for (const auto& id : ids) arrows.push_back(arrow(sp, id));
  return path(sp, arrows, std::vector<std::uint32_t>(arrows.size() + 1, 0));
}

inline spm::Potential uwt(const spm::SpeciesPtr& sp, unsigned truncation = spm::kDefaultTruncation) {
  spm::AlgebraElement s(sp, truncation);
  s.add_term(cycle(*sp, {"u", "w", "t"}), sp->base().one());
  return spm::Potential(std::move(s));
}

// Pairwise coprime weights: 1 may repeat, primes may not.
inline std::vector<unsigned> coprime_weights(std::mt19937_64& rng, std::size_t n) {
  static const unsigned pool[] = {2, 3, 5};
  std::vector<unsigned> out;
  std::vector<bool> used(3, false);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned pick = static_cast<unsigned>(rng() % 5);
    if (pick < 3 && !used[pick]) {
      used[pick] = true;
      out.push_back(pool[pick]);
    } else {
      out.push_back(1);
    }
  }
  return out;
}

// Draws the skew-symmetric DB above the diagonal, then divides by D:
// db_ij = t d_i d_j gives b_ij = t d_j and b_ji = -t d_i.
inline spm::ExchangeMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound = 6) {
  const auto d = coprime_weights(rng, n);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long reach = bound / static_cast<long>(std::max(d[i], d[j]));
      const long t = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * reach + 1)) - reach;
      rows[i][j] = t * d[j];
      rows[j][i] = -t * d[i];
    }
  }
  return spm::ExchangeMatrix(d, rows);
}

}  // namespace fixtures
