#include "spm/cycles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "spm/error.hpp"

namespace spm {

std::vector<Path> enumerate_cycles(const SpeciesPtr& species_ptr, unsigned maxlen) {
  if (maxlen < 2) throw Error(ErrorCode::invalid_argument, "cycle length bound must be at least 2");
  const Species& species = *species_ptr;
  const BaseField& k = species.base();
  std::set<Path> reps;
  for (unsigned len = 1; len <= maxlen; ++len) {
    for (const Path& p : enumerate_paths(species, len)) {
      if (p.omegas[0] != 0 || !is_cyclic_path(species, p)) continue;
      AlgebraElement single(species_ptr, len);
      single.add_term(p, k.one());
      const Potential canon = canonical_cyclic_form(Potential(std::move(single)));
      reps.insert(canon.element().terms().begin()->first);
    }
  }
  return {reps.begin(), reps.end()};
}

unsigned longest_chordless_cycle(const WeightedQuiver& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Arrow& a : q.arrows()) adj[a.source][a.target] = true;

  unsigned best = 0;
  std::vector<std::size_t> stack;
  std::vector<bool> on(n, false);
  auto chordless = [&]() {
    const std::size_t len = stack.size();
    for (std::size_t x = 0; x < len; ++x) {
      for (std::size_t y = 0; y < len; ++y) {
        if (x == y || !adj[stack[x]][stack[y]]) continue;
        if (y != (x + 1) % len) return false;
      }
    }
    return true;
  };
  // Cycles are rooted at their smallest vertex so each is visited once per orientation.
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t root, std::size_t v) {
    for (std::size_t w = root; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (w == root) {
        if (stack.size() >= 2 && chordless()) best = std::max(best, static_cast<unsigned>(stack.size()));
        continue;
      }
      if (on[w]) continue;
      on[w] = true;
      stack.push_back(w);
      walk(root, w);
      stack.pop_back();
      on[w] = false;
    }
  };
  for (std::size_t root = 0; root < n; ++root) {
    on[root] = true;
    stack = {root};
    walk(root, root);
    on[root] = false;
  }
  return best;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::invalid_argument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

Potential random_potential(const SpeciesPtr& species, unsigned maxlen, std::mt19937_64& rng,
                           unsigned truncation) {
  AlgebraElement out(species, truncation);
  if (maxlen < 2) return Potential(std::move(out));
  const std::uint64_t q = species->base().order();
  for (const Path& p : enumerate_cycles(species, std::min(maxlen, truncation))) {
    out.add_term(p, Scalar{uniform_below(rng, q)});
  }
  return canonical_cyclic_form(Potential(std::move(out)));
}

}  // namespace spm
