#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spm/sp_mutation.hpp"

namespace spm {

struct SearchOptions {
  std::size_t budget = 100;
  unsigned max_r = 7;
  std::uint64_t seed = 1;
  unsigned truncation = kDefaultTruncation;
  /// Longest cycle length drawn; defaults to the longest chordless cycle, capped at N - 2.
  std::optional<unsigned> maxlen;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SearchWitness {
  unsigned extension_degree = 1;
  SpeciesWithPotential state;
  /// Total candidates evaluated over every extension degree tried.
  std::size_t attempts = 0;
  std::uint64_t seed = 0;
  /// Seed of the mt19937_64 stream that drew this potential.
  std::uint64_t candidate_seed = 0;
  std::size_t candidate_index = 0;
  unsigned maxlen = 0;
  NondegeneracyTrace trace;
};

struct SearchResult {
  std::optional<SearchWitness> witness;
  /// (r, candidates drawn) for every extension degree tried.
  std::vector<std::pair<unsigned, std::size_t>> attempts_per_r;
  /// Candidates where some step dropped terms at the truncation order.
  std::size_t horizon_attempts = 0;
  std::size_t total_attempts() const;
};

/// Extension degrees tried, in order: 1, then ascending r <= max_r coprime to d.
std::vector<unsigned> extension_ladder(unsigned d, unsigned max_r);

/// splitmix64 of (seed, r, index): the stream seed of one candidate.
std::uint64_t candidate_seed(std::uint64_t seed, unsigned r, std::size_t index);

unsigned default_maxlen(const WeightedQuiver& q, unsigned truncation);

/// Searches for a potential on the species of q over GF(p^r) that is
/// non-degenerate along seq (0-based vertices, applied first to last).
SearchResult search_nondegenerate(const WeightedQuiver& q, std::uint32_t p, const std::vector<std::size_t>& seq,
                                  const SearchOptions& options = {});

/// Redraws the witness's potential from its seed and re-runs the
/// non-degeneracy check from scratch.
bool replay_witness(const WeightedQuiver& q, std::uint32_t p, const std::vector<std::size_t>& seq,
                    const SearchWitness& witness, unsigned truncation = kDefaultTruncation);

}  // namespace spm
