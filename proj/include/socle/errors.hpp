#pragma once

#include <stdexcept>
#include <string>

namespace socle {

enum class ErrorCode {
  parse_error,
  ring_mismatch,
  order_mismatch,
  zero_polynomial,
  non_monomial_input,
  division_not_exact,
  non_homogeneous_relation,
  variable_not_nilpotent,
  base_residue_not_prime_field,
  invalid_presentation,
  not_artinian,
  regular_sequence_not_found,
  negative_defect,
  certificate_missing,
  divisibility_violation,
  internal_error,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace socle
