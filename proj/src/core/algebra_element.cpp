#include "spm/algebra_element.hpp"

#include <algorithm>
#include <string>

#include "spm/error.hpp"

namespace spm {

std::size_t path_tail(const Species& species, const Path& path) {
  return path.arrows.empty() ? path.head : species.tail(path.arrows.back());
}

bool is_cyclic_path(const Species& species, const Path& path) {
  return !path.arrows.empty() && path_tail(species, path) == path.head;
}

bool is_valid_path(const Species& species, const Path& path) {
  if (path.omegas.size() != path.arrows.size() + 1) return false;
  if (path.head >= species.vertex_count()) return false;
  for (auto a : path.arrows) {
    if (a >= species.arrow_count()) return false;
  }
  if (!path.arrows.empty() && species.head(path.arrows.front()) != path.head) return false;
  for (std::size_t q = 0; q + 1 < path.arrows.size(); ++q) {
    if (species.tail(path.arrows[q]) != species.head(path.arrows[q + 1])) return false;
  }
  if (!species.in_basis(path.head, path.omegas[0])) return false;
  for (std::size_t q = 0; q < path.arrows.size(); ++q) {
    if (!species.in_basis(species.tail(path.arrows[q]), path.omegas[q + 1])) return false;
  }
  return true;
}

std::vector<Path> enumerate_paths(const Species& species, std::size_t length) {
  std::vector<Path> out;
  // Extend paths on the right, one (arrow, decoration) at a time.
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < species.vertex_count(); ++v) {
    for (unsigned m : species.basis(v)) {
      Path p;
      p.head = static_cast<std::uint32_t>(v);
      p.omegas = {m};
      frontier.push_back(std::move(p));
    }
  }
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      const std::size_t end = path_tail(species, p);
      for (std::size_t a = 0; a < species.arrow_count(); ++a) {
        if (species.head(a) != end) continue;
        for (unsigned m : species.basis(species.tail(a))) {
          Path e = p;
          e.arrows.push_back(static_cast<std::uint32_t>(a));
          e.omegas.push_back(m);
          next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
  }
  out = std::move(frontier);
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement::AlgebraElement(SpeciesPtr species, unsigned truncation)
    : species_(std::move(species)), truncation_(truncation) {
  if (!species_) throw Error(ErrorCode::invalid_argument, "element needs a species");
}

AlgebraElement AlgebraElement::lazy(SpeciesPtr species, unsigned truncation, std::size_t vertex,
                                    unsigned omega) {
  AlgebraElement out(std::move(species), truncation);
  if (vertex >= out.species().vertex_count()) {
    throw Error(ErrorCode::unknown_vertex, "unknown vertex " + std::to_string(vertex + 1));
  }
  if (!out.species().in_basis(vertex, omega)) {
    throw Error(ErrorCode::not_in_subfield, "decoration is not in the vertex eigenbasis");
  }
  Path p;
  p.head = static_cast<std::uint32_t>(vertex);
  p.omegas = {omega};
  out.add_term(p, out.species().base().one());
  return out;
}

AlgebraElement AlgebraElement::arrow(SpeciesPtr species, unsigned truncation, std::size_t arrow) {
  AlgebraElement out(std::move(species), truncation);
  if (arrow >= out.species().arrow_count()) throw Error(ErrorCode::unknown_arrow, "unknown arrow");
  Path p;
  p.head = static_cast<std::uint32_t>(out.species().head(arrow));
  p.arrows = {static_cast<std::uint32_t>(arrow)};
  p.omegas = {0, 0};
  out.add_term(p, out.species().base().one());
  return out;
}

AlgebraElement AlgebraElement::identity(SpeciesPtr species, unsigned truncation) {
  AlgebraElement out(std::move(species), truncation);
  for (std::size_t v = 0; v < out.species().vertex_count(); ++v) {
    Path p;
    p.head = static_cast<std::uint32_t>(v);
    out.add_term(p, out.species().base().one());
  }
  return out;
}

Scalar AlgebraElement::coefficient(const Path& path) const {
  auto it = terms_.find(path);
  return it == terms_.end() ? species_->base().zero() : it->second;
}

void AlgebraElement::add_term(const Path& path, Scalar coeff) {
  const BaseField& k = species_->base();
  if (k.is_zero(coeff)) return;
  if (path.length() > truncation_) {
    horizon_ = true;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(path, coeff);
  if (!inserted) {
    it->second = k.add(it->second, coeff);
    if (k.is_zero(it->second)) terms_.erase(it);
  }
}

void check_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.species_ptr() != y.species_ptr() && !(x.species() == y.species())) {
    throw Error(ErrorCode::species_mismatch, "elements live on different species");
  }
  if (x.truncation() != y.truncation()) {
    throw Error(ErrorCode::species_mismatch, "elements have different truncation orders");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_same_algebra(*this, other);
  for (const auto& [p, a] : other.terms_) add_term(p, a);
  horizon_ = horizon_ || other.horizon_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_same_algebra(*this, other);
  const BaseField& k = species_->base();
  for (const auto& [p, a] : other.terms_) add_term(p, k.neg(a));
  horizon_ = horizon_ || other.horizon_;
  return *this;
}

AlgebraElement AlgebraElement::scaled(Scalar s) const {
  AlgebraElement out(species_, truncation_);
  out.horizon_ = horizon_;
  const BaseField& k = species_->base();
  if (k.is_zero(s)) return out;
  for (const auto& [p, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), p, k.mul(s, a));
  return out;
}

AlgebraElement AlgebraElement::negated() const { return scaled(species_->base().neg(species_->base().one())); }

AlgebraElement AlgebraElement::component(std::size_t length) const {
  AlgebraElement out(species_, truncation_);
  for (const auto& [p, a] : terms_) {
    if (p.length() == length) out.terms_.emplace_hint(out.terms_.end(), p, a);
  }
  return out;
}

AlgebraElement AlgebraElement::tail_from(std::size_t length) const {
  AlgebraElement out(species_, truncation_);
  out.horizon_ = horizon_;
  for (const auto& [p, a] : terms_) {
    if (p.length() >= length) out.terms_.emplace_hint(out.terms_.end(), p, a);
  }
  return out;
}

std::size_t AlgebraElement::min_length() const {
  return terms_.empty() ? 0 : terms_.begin()->first.length();
}

std::size_t AlgebraElement::max_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.species_ptr() != b.species_ptr() && !(a.species() == b.species())) return false;
  return a.truncation() == b.truncation() && a.terms() == b.terms();
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_algebra(x, y);
  const Species& sp = x.species();
  const BaseField& k = sp.base();
  const FieldTower& tower = sp.tower();
  AlgebraElement out(x.species_ptr(), x.truncation());
  if (x.horizon() || y.horizon()) out.mark_horizon();

  std::vector<std::vector<const AlgebraElement::TermMap::value_type*>> by_head(sp.vertex_count());
  for (const auto& term : y.terms()) by_head[term.first.head].push_back(&term);

  for (const auto& [px, cx] : x.terms()) {
    const std::size_t join = path_tail(sp, px);
    for (const auto* ty : by_head[join]) {
      const Path& py = ty->first;
      if (px.length() + py.length() > x.truncation()) {
        out.mark_horizon();
        continue;
      }
      Path p;
      p.head = px.head;
      p.arrows.reserve(px.length() + py.length());
      p.arrows = px.arrows;
      p.arrows.insert(p.arrows.end(), py.arrows.begin(), py.arrows.end());
      p.omegas.assign(px.omegas.begin(), px.omegas.end() - 1);
      const BasisProduct m = tower.merge(px.omegas.back(), py.omegas.front());
      p.omegas.push_back(m.exponent);
      p.omegas.insert(p.omegas.end(), py.omegas.begin() + 1, py.omegas.end());
      out.add_term(p, k.mul(k.mul(cx, ty->second), m.scalar));
    }
  }
  return out;
}

AlgebraElement module_act(const TowerElement& u, const AlgebraElement& x, std::size_t vertex,
                          Side side) {
  const Species& sp = x.species();
  const FieldTower& tower = sp.tower();
  const BaseField& k = sp.base();
  if (vertex >= sp.vertex_count()) {
    throw Error(ErrorCode::unknown_vertex, "unknown vertex " + std::to_string(vertex + 1));
  }
  if (u.coords.size() != tower.d() || !tower.supported_on_subfield(u, vertex)) {
    throw Error(ErrorCode::not_in_subfield,
                "scalar does not lie in the field at vertex " + std::to_string(vertex + 1));
  }
  AlgebraElement out(x.species_ptr(), x.truncation());
  if (x.horizon()) out.mark_horizon();
  for (const auto& [p, a] : x.terms()) {
    const std::size_t boundary = side == Side::left ? p.head : path_tail(sp, p);
    if (boundary != vertex) {
      throw Error(ErrorCode::vertex_mismatch, "term does not meet vertex " + std::to_string(vertex + 1));
    }
    for (unsigned m : sp.basis(vertex)) {
      if (k.is_zero(u.coords[m])) continue;
      Path q = p;
      std::uint32_t& slot = side == Side::left ? q.omegas.front() : q.omegas.back();
      const BasisProduct e = side == Side::left ? tower.merge(m, slot) : tower.merge(slot, m);
      slot = e.exponent;
      out.add_term(q, k.mul(k.mul(u.coords[m], a), e.scalar));
    }
  }
  return out;
}

Potential::Potential(AlgebraElement element) : element_(std::move(element)) {
  for (const auto& [p, a] : element_.terms()) {
    if (!is_cyclic_path(element_.species(), p)) {
      throw Error(ErrorCode::not_cyclic, "potential has a term that is not a cycle of positive length");
    }
  }
}

Potential Potential::zero(SpeciesPtr species, unsigned truncation) {
  return Potential(AlgebraElement(std::move(species), truncation));
}

CyclicWord normalize_cycle(const Species& species, const Path& path, Scalar coeff) {
  const BaseField& k = species.base();
  CyclicWord word;
  word.arrows = path.arrows;
  word.omegas.assign(path.omegas.begin() + 1, path.omegas.end());
  const BasisProduct m = species.tower().merge(word.omegas.back(), path.omegas.front());
  word.omegas.back() = m.exponent;
  word.coeff = k.mul(coeff, m.scalar);
  return word;
}

Path rotation_path(const Species& species, const CyclicWord& word, std::size_t start) {
  const std::size_t len = word.arrows.size();
  Path p;
  p.arrows.resize(len);
  p.omegas.assign(len + 1, 0);
  for (std::size_t q = 0; q < len; ++q) {
    p.arrows[q] = word.arrows[(start + q) % len];
    p.omegas[q + 1] = word.omegas[(start + q) % len];
  }
  p.head = static_cast<std::uint32_t>(species.head(p.arrows.front()));
  return p;
}

Potential canonical_cyclic_form(const Potential& s) {
  const Species& sp = s.species();
  AlgebraElement out(s.species_ptr(), s.truncation());
  if (s.element().horizon()) out.mark_horizon();
  for (const auto& [p, a] : s.element().terms()) {
    const CyclicWord word = normalize_cycle(sp, p, a);
    Path best = rotation_path(sp, word, 0);
    for (std::size_t start = 1; start < word.arrows.size(); ++start) {
      Path candidate = rotation_path(sp, word, start);
      if (candidate < best) best = std::move(candidate);
    }
    out.add_term(best, word.coeff);
  }
  return Potential(std::move(out));
}

bool cyclically_equivalent(const Potential& s, const Potential& t) {
  return canonical_cyclic_form(s) == canonical_cyclic_form(t);
}

AlgebraElement cyclic_derivative(const Potential& s, std::size_t arrow) {
  const Species& sp = s.species();
  AlgebraElement out(s.species_ptr(), s.truncation());
  if (s.element().horizon()) out.mark_horizon();
  for (const auto& [p, a] : s.element().terms()) {
    if (std::find(p.arrows.begin(), p.arrows.end(), arrow) == p.arrows.end()) continue;
    const CyclicWord word = normalize_cycle(sp, p, a);
    const std::size_t len = word.arrows.size();
    for (std::size_t q = 0; q < len; ++q) {
      if (word.arrows[q] != arrow) continue;
      Path d;
      d.head = static_cast<std::uint32_t>(sp.tail(arrow));
      d.omegas = {word.omegas[q]};
      for (std::size_t step = 1; step < len; ++step) {
        const std::size_t idx = (q + step) % len;
        d.arrows.push_back(word.arrows[idx]);
        d.omegas.push_back(word.omegas[idx]);
      }
      out.add_term(d, word.coeff);
    }
  }
  return out;
}

}  // namespace spm
