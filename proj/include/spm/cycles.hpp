#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spm/algebra_element.hpp"

namespace spm {

/// Decorated basis cycles of length 1..maxlen, one per rotation orbit, each
/// in canonical cyclic form, in Path order.
std::vector<Path> enumerate_cycles(const SpeciesPtr& species_ptr, unsigned maxlen);

/// Length of the longest directed cycle whose vertex set induces no other
/// arrows; 0 for an acyclic quiver.
unsigned longest_chordless_cycle(const WeightedQuiver& q);

/// Uniform integer in [0, bound) drawn by rejection, so the stream is the
/// same on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Independent uniform base-field coefficients (zero allowed) on every cycle
/// representative of length <= maxlen, in enumeration order.
Potential random_potential(const SpeciesPtr& species, unsigned maxlen, std::mt19937_64& rng,
                           unsigned truncation = kDefaultTruncation);

}  // namespace spm
