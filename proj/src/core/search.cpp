#include "spm/search.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <thread>

#include "spm/cycles.hpp"
#include "spm/error.hpp"

namespace spm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Candidate {
  bool ok = false;
  bool horizon = false;
  std::optional<SpeciesWithPotential> state;
  NondegeneracyTrace trace;
};

Candidate evaluate(const SpeciesPtr& species, unsigned maxlen, unsigned truncation, std::uint64_t seed,
                   const std::vector<std::size_t>& seq) {
  std::mt19937_64 rng(seed);
  SpeciesWithPotential start(species, random_potential(species, maxlen, rng, truncation));
  Candidate out;
  out.trace = is_nondegenerate_along(start, seq);
  out.ok = out.trace.nondegenerate;
  out.horizon = std::any_of(out.trace.steps.begin(), out.trace.steps.end(),
                            [](const NondegeneracyStep& s) { return s.horizon; });
  out.state = std::move(start);
  return out;
}

void check_sequence(const WeightedQuiver& q, const std::vector<std::size_t>& seq) {
  for (std::size_t k : seq) {
    if (k >= q.size()) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(k + 1) + " out of range");
  }
}

}  // namespace

std::size_t SearchResult::total_attempts() const {
  std::size_t total = 0;
  for (const auto& [r, n] : attempts_per_r) total += n;
  return total;
}

std::vector<unsigned> extension_ladder(unsigned d, unsigned max_r) {
  std::vector<unsigned> out;
  for (unsigned r = 1; r <= std::max(max_r, 1U); ++r) {
    if (std::gcd(r, d) == 1) out.push_back(r);
  }
  return out;
}

std::uint64_t candidate_seed(std::uint64_t seed, unsigned r, std::size_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ r) ^ index);
}

unsigned default_maxlen(const WeightedQuiver& q, unsigned truncation) {
  const unsigned cap = truncation > 2 ? truncation - 2 : 0;
  return std::min(longest_chordless_cycle(q), cap);
}

SearchResult search_nondegenerate(const WeightedQuiver& q, std::uint32_t p, const std::vector<std::size_t>& seq,
                                  const SearchOptions& options) {
  if (!is_2_acyclic(q)) throw Error(ErrorCode::not_two_acyclic, "quiver has an oriented 2-cycle");
  check_sequence(q, seq);
  const FieldTower base_tower = FieldTower::build(p, q.weights());
  const unsigned maxlen = options.maxlen.value_or(default_maxlen(q, options.truncation));

  SearchResult result;
  if (seq.empty()) {
    const SpeciesPtr species = make_species(base_tower, q);
    SearchWitness w{1, SpeciesWithPotential(species, options.truncation), 0, options.seed, 0, 0, maxlen, {}};
    w.trace = is_nondegenerate_along(w.state, seq);
    result.witness = std::move(w);
    return result;
  }

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(threads, 1U);
  std::size_t drawn_before = 0;
  for (unsigned r : extension_ladder(base_tower.d(), options.max_r)) {
    const SpeciesPtr species = make_species(r == 1 ? base_tower : base_tower.extend_scalars(r), q);
    std::size_t drawn = 0;
    while (drawn < options.budget) {
      const std::size_t batch = std::min<std::size_t>(threads, options.budget - drawn);
      std::vector<Candidate> outcomes(batch);
      if (batch == 1) {
        outcomes[0] = evaluate(species, maxlen, options.truncation, candidate_seed(options.seed, r, drawn), seq);
      } else {
        std::vector<std::future<Candidate>> jobs;
        for (std::size_t b = 0; b < batch; ++b) {
          jobs.push_back(std::async(std::launch::async, evaluate, species, maxlen, options.truncation,
                                    candidate_seed(options.seed, r, drawn + b), std::cref(seq)));
        }
        for (std::size_t b = 0; b < batch; ++b) outcomes[b] = jobs[b].get();
      }
      for (std::size_t b = 0; b < batch; ++b) {
        const std::size_t index = drawn + b;
        if (outcomes[b].horizon) ++result.horizon_attempts;
        if (!outcomes[b].ok) continue;
        result.attempts_per_r.emplace_back(r, index + 1);
        SearchWitness w{r,
                        std::move(*outcomes[b].state),
                        drawn_before + index + 1,
                        options.seed,
                        candidate_seed(options.seed, r, index),
                        index,
                        maxlen,
                        std::move(outcomes[b].trace)};
        result.witness = std::move(w);
        return result;
      }
      drawn += batch;
    }
    result.attempts_per_r.emplace_back(r, drawn);
    drawn_before += drawn;
  }
  return result;
}

bool replay_witness(const WeightedQuiver& q, std::uint32_t p, const std::vector<std::size_t>& seq,
                    const SearchWitness& witness, unsigned truncation) {
  check_sequence(q, seq);
  FieldTower tower = FieldTower::build(p, q.weights());
  if (witness.extension_degree != 1) tower = tower.extend_scalars(witness.extension_degree);
  const SpeciesPtr species = make_species(tower, q);
  if (seq.empty()) return witness.state.potential.is_zero();
  if (witness.candidate_seed != candidate_seed(witness.seed, witness.extension_degree, witness.candidate_index)) {
    return false;
  }
  std::mt19937_64 rng(witness.candidate_seed);
  const Potential redrawn = random_potential(species, witness.maxlen, rng, truncation);
  if (!(redrawn == witness.state.potential)) return false;
  return is_nondegenerate_along(SpeciesWithPotential(species, redrawn), seq).nondegenerate;
}

}  // namespace spm
