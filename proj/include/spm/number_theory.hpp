#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spm {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order (empty for n <= 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Multiplicative inverse modulo a prime; the argument must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

std::uint64_t lcm_of(std::span<const unsigned> values);

/// Smallest prime p with p = 1 (mod d).
std::uint64_t smallest_admissible_prime(std::uint64_t d);

}  // namespace spm
