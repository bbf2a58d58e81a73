#include "spm/number_theory.hpp"

#include <numeric>

#include "spm/error.hpp"

namespace spm {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_prime: return "not_prime";
    case ErrorCode::inadmissible_prime: return "inadmissible_prime";
    case ErrorCode::no_admissible_constant: return "no_admissible_constant";
    case ErrorCode::not_coprime: return "not_coprime";
    case ErrorCode::irreducibility_failure: return "irreducibility_failure";
    case ErrorCode::unknown_vertex: return "unknown_vertex";
    case ErrorCode::unknown_arrow: return "unknown_arrow";
    case ErrorCode::malformed_matrix: return "malformed_matrix";
    case ErrorCode::not_two_acyclic: return "not_two_acyclic";
    case ErrorCode::not_strongly_primitive: return "not_strongly_primitive";
    case ErrorCode::species_mismatch: return "species_mismatch";
    case ErrorCode::not_in_subfield: return "not_in_subfield";
    case ErrorCode::vertex_mismatch: return "vertex_mismatch";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::invalid_substitution: return "invalid_substitution";
    case ErrorCode::not_cyclic: return "not_cyclic";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  __extension__ using u128 = unsigned __int128;
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = static_cast<std::uint64_t>(u128(result) * base % modulus);
    base = static_cast<std::uint64_t>(u128(base) * base % modulus);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  return pow_mod(a, p - 2, p);
}

std::uint64_t lcm_of(std::span<const unsigned> values) {
  std::uint64_t out = 1;
  for (unsigned v : values) out = std::lcm(out, static_cast<std::uint64_t>(v));
  return out;
}

std::uint64_t smallest_admissible_prime(std::uint64_t d) {
  // p = 2 only qualifies for d = 1, and no Kummer constant exists there.
  for (std::uint64_t p = d + 1;; p += d) {
    if (p > 2 && is_prime(p)) return p;
  }
}

}  // namespace spm
