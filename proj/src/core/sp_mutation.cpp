#include "spm/sp_mutation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spm/error.hpp"

namespace spm {

SpeciesWithPotential::SpeciesWithPotential(SpeciesPtr sp, Potential s)
    : species(std::move(sp)), potential(std::move(s)) {
  if (potential.species_ptr() != species && !(potential.species() == *species)) {
    throw Error(ErrorCode::species_mismatch, "potential lives on a different species");
  }
}

SpeciesWithPotential::SpeciesWithPotential(SpeciesPtr sp, unsigned truncation)
    : species(sp), potential(Potential::zero(std::move(sp), truncation)) {}

namespace {

using Matrix = std::vector<std::vector<TowerElement>>;

AlgebraElement copy_onto(const AlgebraElement& x, const SpeciesPtr& species,
                         const std::vector<std::optional<std::size_t>>& arrow_map) {
  AlgebraElement out(species, x.truncation());
  if (x.horizon()) out.mark_horizon();
  for (const auto& [p, a] : x.terms()) {
    Path q = p;
    for (auto& arr : q.arrows) arr = static_cast<std::uint32_t>(*arrow_map.at(arr));
    out.add_term(q, a);
  }
  return out;
}

}  // namespace

SpeciesWithPotential premutate_sp(const SpeciesWithPotential& sp, std::size_t k) {
  const Species& old = *sp.species;
  const WeightedQuiver& q = old.quiver();
  const Premutation pm = premutate_quiver_detailed(q, k);
  const SpeciesPtr next = make_species(old.tower(), pm.quiver);
  const Species& nsp = *next;
  const BaseField& field = old.base();
  const unsigned n = sp.truncation();

  auto new_index = [&](const std::string& id) {
    auto idx = nsp.quiver().find(id);
    if (!idx) throw Error(ErrorCode::internal, "premutated quiver lost arrow " + id);
    return static_cast<std::uint32_t>(*idx);
  };
  std::vector<std::uint32_t> renamed(q.arrows().size());
  for (std::size_t a = 0; a < q.arrows().size(); ++a) renamed[a] = new_index(pm.renamed[a]);
  auto composite = [&](std::size_t b, unsigned omega, std::size_t a) {
    return new_index(pm.composites.at(std::make_tuple(b, omega, a)));
  };

  AlgebraElement out(next, n);
  if (sp.potential.element().horizon()) out.mark_horizon();

  // [S]: rotate each cycle so that it does not start at k, then fuse every
  // passage b w a through k into the composite arrow [b w a].
  for (const auto& [p, coeff] : sp.potential.element().terms()) {
    const CyclicWord word = normalize_cycle(old, p, coeff);
    std::size_t start = 0;
    while (start < word.arrows.size() && old.head(word.arrows[start]) == k) ++start;
    if (start == word.arrows.size()) {
      throw Error(ErrorCode::internal, "potential term cannot avoid the mutation vertex at its boundary");
    }
    const Path r = rotation_path(old, word, start);
    Path fused;
    fused.head = r.head;
    fused.omegas = {r.omegas[0]};
    for (std::size_t pos = 0; pos < r.length();) {
      const std::uint32_t arr = r.arrows[pos];
      if (old.tail(arr) == k) {
        if (pos + 1 >= r.length()) throw Error(ErrorCode::internal, "dangling passage through k");
        fused.arrows.push_back(composite(arr, r.omegas[pos + 1], r.arrows[pos + 1]));
        fused.omegas.push_back(r.omegas[pos + 2]);
        pos += 2;
      } else {
        fused.arrows.push_back(renamed[arr]);
        fused.omegas.push_back(r.omegas[pos + 1]);
        pos += 1;
      }
    }
    out.add_term(fused, word.coeff);
  }

  // The new triangles w^{-1} b* [b w a] a*.
  for (std::size_t b = 0; b < q.arrows().size(); ++b) {
    if (q.arrow(b).source != k) continue;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrow(a).target != k) continue;
      for (unsigned omega : old.basis(k)) {
        const BasisProduct inverse = old.tower().basis_inverse(omega);
        Path t;
        t.head = static_cast<std::uint32_t>(k);
        t.arrows = {renamed[b], composite(b, omega, a), renamed[a]};
        t.omegas = {inverse.exponent, 0, 0, 0};
        out.add_term(t, inverse.scalar);
      }
    }
  }
  (void)field;
  return SpeciesWithPotential(next, canonical_cyclic_form(Potential(std::move(out))));
}

std::vector<DegreeTwoBlock> degree_two_blocks(const Potential& canonical) {
  const Species& sp = canonical.species();
  const FieldTower& tower = sp.tower();
  const BaseField& field = sp.base();
  const std::size_t n = sp.vertex_count();

  std::vector<DegreeTwoBlock> blocks;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      DegreeTwoBlock b;
      b.i = i;
      b.j = j;
      for (std::size_t a = 0; a < sp.arrow_count(); ++a) {
        if (sp.tail(a) == j && sp.head(a) == i) b.rows.push_back(a);
        if (sp.tail(a) == i && sp.head(a) == j) b.cols.push_back(a);
      }
      if (b.rows.empty() || b.cols.empty()) continue;
      b.pairing.assign(b.rows.size(), std::vector<TowerElement>(b.cols.size(), tower.zero()));
      slot.emplace(std::make_pair(i, j), blocks.size());
      blocks.push_back(std::move(b));
    }
  }

  for (const auto& [p, coeff] : canonical.element().terms()) {
    if (p.length() != 2) continue;
    const CyclicWord word = normalize_cycle(sp, p, coeff);
    const std::size_t x = word.arrows[0];
    const std::size_t i = std::min(sp.head(x), sp.tail(x));
    const std::size_t j = std::max(sp.head(x), sp.tail(x));
    DegreeTwoBlock& b = blocks.at(slot.at({i, j}));
    const bool x_is_row = sp.head(x) == i;
    const std::size_t row_arrow = x_is_row ? word.arrows[0] : word.arrows[1];
    const std::size_t col_arrow = x_is_row ? word.arrows[1] : word.arrows[0];
    const auto r = static_cast<std::size_t>(std::find(b.rows.begin(), b.rows.end(), row_arrow) - b.rows.begin());
    const auto c = static_cast<std::size_t>(std::find(b.cols.begin(), b.cols.end(), col_arrow) - b.cols.begin());
    const BasisProduct m = tower.merge(word.omegas[0], word.omegas[1]);
    TowerElement lambda = tower.zero();
    lambda.coords[m.exponent] = field.mul(word.coeff, m.scalar);
    b.pairing[r][c] = tower.add(b.pairing[r][c], lambda);
  }
  return blocks;
}

std::pair<SpeciesWithPotential, ReductionReport> reduce_sp(const SpeciesWithPotential& input) {
  const SpeciesPtr& species = input.species;
  const Species& sp = *species;
  const FieldTower& tower = sp.tower();
  const unsigned n = input.truncation();

  ReductionReport report;
  Potential s = canonical_cyclic_form(input.potential);
  Substitution total(species, n);

  // Change arrow bases so the degree-2 part becomes a sum of trivial pairs.
  std::vector<std::pair<std::size_t, std::size_t>> trivial;
  Substitution linear(species, n);
  bool any_linear = false;
  for (const DegreeTwoBlock& block : degree_two_blocks(s)) {
    const std::size_t nr = block.rows.size();
    const std::size_t nc = block.cols.size();
    Matrix m = block.pairing;
    Matrix x(nr, std::vector<TowerElement>(nr, tower.zero()));
    Matrix y(nc, std::vector<TowerElement>(nc, tower.zero()));
    for (std::size_t r = 0; r < nr; ++r) x[r][r] = tower.one();
    for (std::size_t c = 0; c < nc; ++c) y[c][c] = tower.one();
    std::vector<bool> row_used(nr, false);
    std::vector<bool> col_used(nc, false);
    std::size_t rank = 0;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t r = 0; r < nr && !pivot; ++r) {
        if (row_used[r]) continue;
        for (std::size_t c = 0; c < nc; ++c) {
          if (!col_used[c] && !tower.is_zero(m[r][c])) {
            pivot = std::make_pair(r, c);
            break;
          }
        }
      }
      if (!pivot) break;
      const auto [pr, pc] = *pivot;
      const TowerElement s_inv = tower.inv(m[pr][pc]);
      for (std::size_t c = 0; c < nc; ++c) m[pr][c] = tower.mul(s_inv, m[pr][c]);
      for (std::size_t r = 0; r < nr; ++r) x[pr][r] = tower.mul(s_inv, x[pr][r]);
      for (std::size_t r = 0; r < nr; ++r) {
        if (r == pr || tower.is_zero(m[r][pc])) continue;
        const TowerElement f = m[r][pc];
        for (std::size_t c = 0; c < nc; ++c) m[r][c] = tower.sub(m[r][c], tower.mul(f, m[pr][c]));
        for (std::size_t t = 0; t < nr; ++t) x[r][t] = tower.sub(x[r][t], tower.mul(f, x[pr][t]));
      }
      for (std::size_t c = 0; c < nc; ++c) {
        if (c == pc || tower.is_zero(m[pr][c])) continue;
        const TowerElement f = m[pr][c];
        for (std::size_t r = 0; r < nr; ++r) m[r][c] = tower.sub(m[r][c], tower.mul(f, m[r][pc]));
        for (std::size_t t = 0; t < nc; ++t) y[t][c] = tower.sub(y[t][c], tower.mul(f, y[t][pc]));
      }
      row_used[pr] = true;
      col_used[pc] = true;
      ++rank;
      trivial.emplace_back(block.rows[pr], block.cols[pc]);
    }
    if (rank < std::min(nr, nc)) {
      report.residual_2cycles[{block.i, block.j}] = std::min(nr, nc) - rank;
    }

    // M' = X M Y, realized by p_r -> sum_s X[s][r] p_s and q_c -> sum_e Y[c][e] q_e.
    auto install = [&](std::size_t arrow, const std::vector<std::size_t>& bundle,
                       const std::vector<TowerElement>& coeffs) {
      AlgebraElement image(species, n);
      for (std::size_t t = 0; t < bundle.size(); ++t) {
        if (!tower.is_zero(coeffs[t])) image += scalar_times_arrow(species, n, coeffs[t], bundle[t]);
      }
      if (!(image == AlgebraElement::arrow(species, n, arrow))) {
        linear.set(arrow, std::move(image));
        any_linear = true;
      }
    };
    for (std::size_t r = 0; r < nr; ++r) {
      std::vector<TowerElement> coeffs(nr);
      for (std::size_t s_idx = 0; s_idx < nr; ++s_idx) coeffs[s_idx] = x[s_idx][r];
      install(block.rows[r], block.rows, coeffs);
    }
    for (std::size_t c = 0; c < nc; ++c) install(block.cols[c], block.cols, y[c]);
  }

  if (any_linear) {
    s = canonical_cyclic_form(apply_substitution(s, linear));
    total = linear;
  }

  std::vector<std::optional<std::size_t>> partner(sp.arrow_count());
  for (const auto& [p, q] : trivial) {
    partner[p] = q;
    partner[q] = p;
  }

  auto is_bad = [&](const Path& p) {
    return p.length() >= 3 && std::any_of(p.arrows.begin(), p.arrows.end(),
                                          [&](std::uint32_t a) { return partner[a].has_value(); });
  };

  // Push the trivial arrows out of the higher terms. A bad term x * Y with x
  // its first trivial arrow is cancelled against the pair x y by y -> y - Y;
  // the lowest bad degree strictly increases every round.
  if (!trivial.empty()) {
    for (unsigned round = 0;; ++round) {
      const bool bad = std::any_of(s.element().terms().begin(), s.element().terms().end(),
                                   [&](const auto& t) { return is_bad(t.first); });
      if (!bad) break;
      if (round >= n) {
        report.unstabilized = true;
        break;
      }
      std::map<std::size_t, AlgebraElement> corrections;
      for (const auto& [p, coeff] : s.element().terms()) {
        if (!is_bad(p)) continue;
        const CyclicWord word = normalize_cycle(sp, p, coeff);
        std::size_t q = 0;
        while (!partner[word.arrows[q]]) ++q;
        const std::size_t y = *partner[word.arrows[q]];
        Path rest;
        rest.head = static_cast<std::uint32_t>(sp.tail(word.arrows[q]));
        rest.omegas = {word.omegas[q]};
        for (std::size_t step = 1; step < word.arrows.size(); ++step) {
          const std::size_t idx = (q + step) % word.arrows.size();
          rest.arrows.push_back(word.arrows[idx]);
          rest.omegas.push_back(word.omegas[idx]);
        }
        auto [it, inserted] = corrections.try_emplace(y, species, n);
        it->second.add_term(rest, word.coeff);
      }
      Substitution step(species, n);
      for (auto& [y, delta] : corrections) {
        if (!delta.is_zero()) step.set(y, AlgebraElement::arrow(species, n, y) - delta);
      }
      s = canonical_cyclic_form(apply_substitution(s, step));
      total = compose(step, total);
      report.rounds = round + 1;
    }
  }

  // Delete the trivial pairs and every term that mentions them.
  std::set<std::size_t> doomed;
  for (const auto& [p, q] : trivial) {
    doomed.insert(p);
    doomed.insert(q);
    report.removed_pairs.emplace_back(sp.quiver().arrow(p).id, sp.quiver().arrow(q).id);
  }
  std::vector<Arrow> kept;
  std::vector<std::optional<std::size_t>> arrow_map(sp.arrow_count());
  for (std::size_t a = 0; a < sp.arrow_count(); ++a) {
    if (doomed.count(a) == 0) kept.push_back(sp.quiver().arrow(a));
  }
  const SpeciesPtr reduced = make_species(tower, WeightedQuiver(sp.quiver().weights(), kept));
  for (std::size_t a = 0; a < sp.arrow_count(); ++a) {
    if (doomed.count(a) == 0) arrow_map[a] = *reduced->quiver().find(sp.quiver().arrow(a).id);
  }
  AlgebraElement survivors(species, n);
  if (s.element().horizon()) survivors.mark_horizon();
  for (const auto& [p, a] : s.element().terms()) {
    const bool mentions = std::any_of(p.arrows.begin(), p.arrows.end(),
                                      [&](std::uint32_t arr) { return doomed.count(arr) > 0; });
    if (!mentions) survivors.add_term(p, a);
  }
  AlgebraElement moved = copy_onto(survivors, reduced, arrow_map);
  report.horizon = moved.horizon();
  report.substitution = std::move(total);
  return {SpeciesWithPotential(reduced, Potential(std::move(moved))), std::move(report)};
}

std::pair<SpeciesWithPotential, ReductionReport> mutate_sp(const SpeciesWithPotential& sp, std::size_t k) {
  return reduce_sp(premutate_sp(sp, k));
}

NondegeneracyTrace is_nondegenerate_along(const SpeciesWithPotential& sp, const std::vector<std::size_t>& seq) {
  if (!is_2_acyclic(sp.quiver())) {
    throw Error(ErrorCode::not_two_acyclic, "initial quiver has an oriented 2-cycle");
  }
  NondegeneracyTrace trace;
  SpeciesWithPotential current = sp;
  for (std::size_t step = 0; step < seq.size(); ++step) {
    auto [next, report] = mutate_sp(current, seq[step]);
    NondegeneracyStep record;
    record.vertex = seq[step];
    record.arrow_count = next.quiver().arrows().size();
    record.multiplicities = next.quiver().multiplicities();
    record.residual_2cycles = report.residual_2cycles;
    record.removed_pairs = report.removed_pairs.size();
    record.potential_terms = next.potential.element().size();
    record.horizon = report.horizon;
    trace.steps.push_back(std::move(record));
    current = std::move(next);
    if (!is_2_acyclic(current.quiver())) {
      trace.nondegenerate = false;
      trace.failed_step = step;
      break;
    }
  }
  trace.final_state = std::move(current);
  return trace;
}

}  // namespace spm
