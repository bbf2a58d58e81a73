#pragma once

#include <stdexcept>
#include <string>

namespace spm {

enum class ErrorCode {
  invalid_argument = 1,
  not_prime,
  inadmissible_prime,
  no_admissible_constant,
  not_coprime,
  irreducibility_failure,
  unknown_vertex,
  unknown_arrow,
  malformed_matrix,
  not_two_acyclic,
  not_strongly_primitive,
  species_mismatch,
  not_in_subfield,
  vertex_mismatch,
  division_by_zero,
  invalid_substitution,
  not_cyclic,
  parse_error,
  internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spm
