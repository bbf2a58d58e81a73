#include "spm/substitution.hpp"

#include <algorithm>
#include <string>

#include "spm/error.hpp"

namespace spm {

namespace {

struct SplitExponent {
  unsigned left;
  unsigned right;
  bool carry;
};

// For every exponent e of L = F_i F_j: the unique (m, m') in B_i x B_j with
// m + m' = e (mod d).
std::map<unsigned, SplitExponent> compositum_split(const Species& sp, std::size_t i, std::size_t j) {
  std::map<unsigned, SplitExponent> out;
  const unsigned d = sp.tower().d();
  for (unsigned m : sp.basis(i)) {
    for (unsigned mp : sp.basis(j)) {
      const unsigned s = m + mp;
      out.emplace(s % d, SplitExponent{m, mp, s >= d});
    }
  }
  return out;
}

// Determinant-free invertibility check by Gaussian elimination over E.
bool invertible(const FieldTower& tower, std::vector<std::vector<TowerElement>> a) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && tower.is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    const TowerElement s = tower.inv(a[col][col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (tower.is_zero(a[row][col])) continue;
      const TowerElement f = tower.mul(a[row][col], s);
      for (std::size_t k = col; k < n; ++k) {
        a[row][k] = tower.sub(a[row][k], tower.mul(f, a[col][k]));
      }
    }
  }
  return true;
}

}  // namespace

TowerElement arrow_term_scalar(const Species& species, const Path& term, Scalar coeff) {
  const FieldTower& tower = species.tower();
  const BasisProduct m = tower.merge(term.omegas.at(0), term.omegas.at(1));
  TowerElement out = tower.zero();
  out.coords[m.exponent] = species.base().mul(coeff, m.scalar);
  return out;
}

AlgebraElement scalar_times_arrow(const SpeciesPtr& species, unsigned truncation,
                                  const TowerElement& lambda, std::size_t arrow) {
  const Species& sp = *species;
  const BaseField& k = sp.base();
  const std::size_t i = sp.head(arrow);
  const std::size_t j = sp.tail(arrow);
  const auto split = compositum_split(sp, i, j);
  AlgebraElement out(species, truncation);
  for (unsigned e = 0; e < lambda.coords.size(); ++e) {
    if (k.is_zero(lambda.coords[e])) continue;
    auto it = split.find(e);
    if (it == split.end()) {
      throw Error(ErrorCode::not_in_subfield, "scalar does not lie in the compositum of the arrow's endpoints");
    }
    Path p;
    p.head = static_cast<std::uint32_t>(i);
    p.arrows = {static_cast<std::uint32_t>(arrow)};
    p.omegas = {it->second.left, it->second.right};
    Scalar coeff = lambda.coords[e];
    if (it->second.carry) coeff = k.mul(coeff, k.inv(sp.tower().c_scalar()));
    out.add_term(p, coeff);
  }
  return out;
}

Substitution::Substitution(SpeciesPtr species, unsigned truncation)
    : species_(std::move(species)), truncation_(truncation) {}

void Substitution::set(std::size_t arrow, AlgebraElement image) {
  const Species& sp = *species_;
  if (arrow >= sp.arrow_count()) throw Error(ErrorCode::unknown_arrow, "unknown arrow");
  if (image.species_ptr() != species_ && !(image.species() == sp)) {
    throw Error(ErrorCode::species_mismatch, "image lives on a different species");
  }
  for (const auto& [p, a] : image.terms()) {
    if (p.head != sp.head(arrow) || path_tail(sp, p) != sp.tail(arrow) || p.length() == 0) {
      throw Error(ErrorCode::invalid_substitution,
                  "image of " + sp.quiver().arrow(arrow).id + " has mismatched endpoints");
    }
  }
  images_.insert_or_assign(arrow, std::move(image));
}

AlgebraElement Substitution::image(std::size_t arrow) const {
  auto it = images_.find(arrow);
  if (it != images_.end()) return it->second;
  return AlgebraElement::arrow(species_, truncation_, arrow);
}

void Substitution::validate() const {
  const Species& sp = *species_;
  const FieldTower& tower = sp.tower();
  const std::size_t n = sp.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> bundle;
      for (std::size_t a = 0; a < sp.arrow_count(); ++a) {
        if (sp.head(a) == i && sp.tail(a) == j) bundle.push_back(a);
      }
      if (bundle.empty()) continue;
      std::vector<std::vector<TowerElement>> block(bundle.size(),
                                                   std::vector<TowerElement>(bundle.size(), tower.zero()));
      for (std::size_t r = 0; r < bundle.size(); ++r) {
        const AlgebraElement img = image(bundle[r]);
        for (const auto& [p, a] : img.terms()) {
          if (p.length() != 1) continue;
          auto col = std::find(bundle.begin(), bundle.end(), p.arrows[0]) - bundle.begin();
          block[r][static_cast<std::size_t>(col)] =
              tower.add(block[r][static_cast<std::size_t>(col)], arrow_term_scalar(sp, p, a));
        }
      }
      if (!invertible(tower, std::move(block))) {
        throw Error(ErrorCode::invalid_substitution,
                    "degree-1 block for arrows " + std::to_string(j + 1) + "->" + std::to_string(i + 1) +
                        " is singular");
      }
    }
  }
}

bool Substitution::is_unitriangular() const {
  for (const auto& [arrow, img] : images_) {
    const AlgebraElement linear = img.component(1);
    if (!(linear == AlgebraElement::arrow(species_, truncation_, arrow))) return false;
  }
  return true;
}

AlgebraElement apply_substitution(const AlgebraElement& x, const Substitution& phi) {
  const Species& sp = x.species();
  if (phi.species_ptr() != x.species_ptr() && !(*phi.species_ptr() == sp)) {
    throw Error(ErrorCode::species_mismatch, "substitution lives on a different species");
  }
  const unsigned n = x.truncation();
  AlgebraElement out(x.species_ptr(), n);
  if (x.horizon()) out.mark_horizon();

  std::map<std::size_t, AlgebraElement> images;
  for (const auto& [arrow, img] : phi.images()) {
    AlgebraElement copy(x.species_ptr(), n);
    for (const auto& [p, a] : img.terms()) copy.add_term(p, a);
    if (img.horizon() || copy.size() != img.size()) copy.mark_horizon();
    images.emplace(arrow, std::move(copy));
  }

  for (const auto& [p, a] : x.terms()) {
    const bool touched = std::any_of(p.arrows.begin(), p.arrows.end(),
                                     [&](std::uint32_t arr) { return images.count(arr) > 0; });
    if (!touched) {
      out.add_term(p, a);
      continue;
    }
    AlgebraElement acc(x.species_ptr(), n);
    Path start;
    start.head = p.head;
    start.omegas = {p.omegas[0]};
    acc.add_term(start, a);
    for (std::size_t q = 0; q < p.length(); ++q) {
      const std::uint32_t arr = p.arrows[q];
      auto it = images.find(arr);
      acc = multiply(acc, it != images.end() ? it->second : AlgebraElement::arrow(x.species_ptr(), n, arr));
      acc = multiply(acc, AlgebraElement::lazy(x.species_ptr(), n, sp.tail(arr), p.omegas[q + 1]));
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

Potential apply_substitution(const Potential& s, const Substitution& phi) {
  return Potential(apply_substitution(s.element(), phi));
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (outer.species_ptr() != inner.species_ptr() && !(*outer.species_ptr() == *inner.species_ptr())) {
    throw Error(ErrorCode::species_mismatch, "substitutions live on different species");
  }
  Substitution out(inner.species_ptr(), std::min(outer.truncation(), inner.truncation()));
  for (const auto& [arrow, img] : inner.images()) out.set(arrow, apply_substitution(img, outer));
  for (const auto& [arrow, img] : outer.images()) {
    if (inner.is_identity_on(arrow)) out.set(arrow, img);
  }
  return out;
}

Substitution invert_unitriangular(const Substitution& phi) {
  if (!phi.is_unitriangular()) {
    throw Error(ErrorCode::invalid_substitution, "substitution is not unitriangular");
  }
  const SpeciesPtr& sp = phi.species_ptr();
  const unsigned n = phi.truncation();
  // psi(a) = a - psi(h_a) where phi(a) = a + h_a; each pass fixes one more degree.
  std::map<std::size_t, AlgebraElement> higher;
  for (const auto& [arrow, img] : phi.images()) higher.emplace(arrow, img.tail_from(2));

  Substitution psi(sp, n);
  for (const auto& [arrow, h] : higher) psi.set(arrow, AlgebraElement::arrow(sp, n, arrow) - h);
  for (unsigned pass = 0; pass < n; ++pass) {
    Substitution next(sp, n);
    bool changed = false;
    for (const auto& [arrow, h] : higher) {
      AlgebraElement img = AlgebraElement::arrow(sp, n, arrow) - apply_substitution(h, psi);
      if (!(img == psi.images().at(arrow))) changed = true;
      next.set(arrow, std::move(img));
    }
    psi = std::move(next);
    if (!changed) break;
  }
  return psi;
}

}  // namespace spm
