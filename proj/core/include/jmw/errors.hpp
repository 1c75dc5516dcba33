#pragma once

#include <stdexcept>
#include <string>

namespace jmw {

enum class errc {
  char_two,
  not_prime,
  zero_denominator,
  malformed_literal,
  division_by_zero,
  not_finite,
  dimension_mismatch,
  field_mismatch,
  not_square,
  singular,
  inconsistent,
  wrong_field,
  not_rank_one_square_zero,
  bad_indices,
  not_sl,
  exceptional_parameter,
  zero_determinant,
  not_singular,
  unsupported_field,
  dimension_not_square,
  not_triangular,
  trivial_character,
  unknown_identity,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw error(code, detail);
}

}  // namespace jmw
