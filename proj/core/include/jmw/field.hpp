#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "jmw/errors.hpp"

namespace jmw {

enum class field_kind { rationals, prime_field };

// Q or F_p with p an odd prime. Construction rejects p = 2 (CharTwo) and
// composite moduli (NotPrime).
class field_spec {
 public:
  static field_spec rationals() noexcept {
    return field_spec(field_kind::rationals, 0);
  }
  static field_spec prime(std::uint64_t p);
  static field_spec parse(const std::string& name);

  field_kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == field_kind::rationals; }
  bool is_prime() const noexcept { return kind_ == field_kind::prime_field; }
  // 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  bool operator==(const field_spec&) const = default;

 private:
  field_spec(field_kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  field_kind kind_;
  std::uint64_t p_;
};

field_spec make_field(field_kind kind, std::uint64_t modulus = 0);

// Field element. Exactly one representation is live: rep_ for F_p (the
// canonical residue in [0, p)), q_ for Q (always canonicalized).
class scalar {
 public:
  static scalar zero(field_spec field) { return scalar(field); }
  static scalar one(field_spec field) { return of_int(field, 1); }
  static scalar of_int(field_spec field, long long value);
  static scalar of_fraction(field_spec field, long long num, long long den);
  static scalar of_rational(field_spec field, const mpq_class& value);

  field_spec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  std::uint64_t residue() const;
  const mpq_class& rational() const;

  scalar operator+(const scalar& rhs) const;
  scalar operator-(const scalar& rhs) const;
  scalar operator*(const scalar& rhs) const;
  scalar operator/(const scalar& rhs) const;
  scalar operator-() const;
  scalar& operator+=(const scalar& rhs) { return *this = *this + rhs; }
  scalar& operator-=(const scalar& rhs) { return *this = *this - rhs; }
  scalar& operator*=(const scalar& rhs) { return *this = *this * rhs; }

  scalar inverse() const;
  scalar pow(long long exponent) const;

  bool operator==(const scalar& rhs) const;
  bool operator!=(const scalar& rhs) const { return !(*this == rhs); }

  std::string render() const;

 private:
  explicit scalar(field_spec field) : field_(field) {}

  void check_same_field(const scalar& rhs) const;

  field_spec field_;
  std::uint64_t rep_ = 0;
  mpq_class q_;
};

// Accepts an optional sign and "a" or "a/b" over Q; bare digits over F_p,
// reduced mod p. Rejects anything else with MalformedLiteral.
scalar parse_scalar(field_spec field, const std::string& text);
scalar invert(const scalar& x);

// Smallest generator of F_p^*. NotFinite over Q.
scalar multiplicative_generator(field_spec field);

bool is_odd_prime(std::uint64_t p);

}  // namespace jmw
