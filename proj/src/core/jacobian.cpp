#include "spm/jacobian.hpp"

#include <map>

namespace spm {

namespace {

using SparseRow = std::map<std::size_t, Scalar>;

class EchelonBasis {
 public:
  explicit EchelonBasis(const BaseField& k) : k_(k) {}

  void insert(SparseRow row) {
    while (!row.empty()) {
      const auto [lead, value] = *row.begin();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Scalar s = k_.inv(value);
        for (auto& [col, a] : row) a = k_.mul(a, s);
        pivots_.emplace(lead, std::move(row));
        return;
      }
      for (const auto& [col, a] : it->second) {
        auto [slot, inserted] = row.try_emplace(col, k_.zero());
        slot->second = k_.sub(slot->second, k_.mul(value, a));
        if (k_.is_zero(slot->second)) row.erase(slot);
      }
    }
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  const BaseField& k_;
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

std::vector<AlgebraElement> jacobian_generators(const Potential& s) {
  std::vector<AlgebraElement> out;
  for (std::size_t a = 0; a < s.species().arrow_count(); ++a) {
    AlgebraElement g = cyclic_derivative(s, a);
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

std::size_t truncated_jacobian_dimension(const Potential& s, unsigned truncation) {
  const Species& sp = s.species();
  const BaseField& k = sp.base();
  const FieldTower& tower = sp.tower();

  AlgebraElement retruncated(s.species_ptr(), truncation);
  for (const auto& [p, a] : s.element().terms()) retruncated.add_term(p, a);
  const Potential potential(std::move(retruncated));

  std::map<Path, std::size_t> index;
  // by_tail[v]: paths ending at v (left factors); by_head[v]: paths starting at v.
  std::vector<std::vector<const Path*>> by_tail(sp.vertex_count());
  std::vector<std::vector<const Path*>> by_head(sp.vertex_count());
  std::vector<Path> all;
  for (unsigned len = 0; len <= truncation; ++len) {
    auto layer = enumerate_paths(sp, len);
    all.insert(all.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  for (const auto& [p, i] : index) {
    by_tail[path_tail(sp, p)].push_back(&p);
    by_head[p.head].push_back(&p);
  }

  auto concat = [&](const Path& x, const Path& y, Scalar& coeff) {
    Path out;
    out.head = x.head;
    out.arrows = x.arrows;
    out.arrows.insert(out.arrows.end(), y.arrows.begin(), y.arrows.end());
    out.omegas.assign(x.omegas.begin(), x.omegas.end() - 1);
    const BasisProduct m = tower.merge(x.omegas.back(), y.omegas.front());
    out.omegas.push_back(m.exponent);
    out.omegas.insert(out.omegas.end(), y.omegas.begin() + 1, y.omegas.end());
    coeff = k.mul(coeff, m.scalar);
    return out;
  };

  EchelonBasis basis(k);
  for (const AlgebraElement& g : jacobian_generators(potential)) {
    const std::size_t g_head = g.terms().begin()->first.head;
    const std::size_t g_tail = path_tail(sp, g.terms().begin()->first);
    const std::size_t g_min = g.min_length();
    for (const Path* u : by_tail[g_head]) {
      if (u->length() + g_min > truncation) continue;
      for (const Path* w : by_head[g_tail]) {
        if (u->length() + g_min + w->length() > truncation) continue;
        SparseRow row;
        for (const auto& [p, a] : g.terms()) {
          if (u->length() + p.length() + w->length() > truncation) continue;
          Scalar coeff = a;
          const Path left = concat(*u, p, coeff);
          const Path full = concat(left, *w, coeff);
          auto [slot, inserted] = row.try_emplace(index.at(full), k.zero());
          slot->second = k.add(slot->second, coeff);
          if (k.is_zero(slot->second)) row.erase(slot);
        }
        basis.insert(std::move(row));
      }
    }
  }
  return all.size() - basis.rank();
}

JacobianDimension jacobian_quotient_dim(const Potential& s, unsigned truncation) {
  JacobianDimension out;
  out.dimension = truncated_jacobian_dimension(s, truncation);
  out.stabilized = truncation > 0 && truncated_jacobian_dimension(s, truncation - 1) == out.dimension;
  return out;
}

}  // namespace spm
