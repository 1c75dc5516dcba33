#include "jmw/field.hpp"

#include <cctype>

namespace jmw {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool miller_rabin(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t extended_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and a != 0 mod p.
  return powmod(a, p - 2, p);
}

}  // namespace

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::char_two: return "CharTwo";
    case errc::not_prime: return "NotPrime";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::malformed_literal: return "MalformedLiteral";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_finite: return "NotFinite";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_square: return "NotSquare";
    case errc::singular: return "Singular";
    case errc::inconsistent: return "Inconsistent";
    case errc::wrong_field: return "WrongField";
    case errc::not_rank_one_square_zero: return "NotRankOneSquareZero";
    case errc::bad_indices: return "BadIndices";
    case errc::not_sl: return "NotSL";
    case errc::exceptional_parameter: return "ExceptionalParameter";
    case errc::zero_determinant: return "ZeroDeterminant";
    case errc::not_singular: return "NotSingular";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::dimension_not_square: return "DimensionNotSquare";
    case errc::not_triangular: return "NotTriangular";
    case errc::trivial_character: return "TrivialCharacter";
    case errc::unknown_identity: return "UnknownIdentity";
  }
  return "UnknownError";
}

bool is_odd_prime(std::uint64_t p) { return p >= 3 && miller_rabin(p); }

field_spec field_spec::prime(std::uint64_t p) {
  if (p == 2) fail(errc::char_two, "characteristic 2 is not supported");
  if (!miller_rabin(p)) {
    fail(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
  }
  return field_spec(field_kind::prime_field, p);
}

field_spec field_spec::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.rfind("Fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    if (digits.empty()) {
      fail(errc::unsupported_field, "missing modulus in '" + name + "'");
    }
    std::uint64_t p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(errc::unsupported_field, "bad modulus in '" + name + "'");
      }
      if (p > (UINT64_MAX - 9) / 10) {
        fail(errc::unsupported_field, "modulus overflow in '" + name + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  fail(errc::unsupported_field, "unknown field '" + name + "' (want Q or Fp:<p>)");
}

std::string field_spec::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

field_spec make_field(field_kind kind, std::uint64_t modulus) {
  return kind == field_kind::rationals ? field_spec::rationals()
                                       : field_spec::prime(modulus);
}

scalar scalar::of_int(field_spec field, long long value) {
  scalar s(field);
  if (field.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(value));
  } else {
    const std::uint64_t p = field.characteristic();
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    s.rep_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

scalar scalar::of_fraction(field_spec field, long long num, long long den) {
  if (den == 0) fail(errc::zero_denominator, "denominator is zero");
  return of_int(field, num) / of_int(field, den);
}

scalar scalar::of_rational(field_spec field, const mpq_class& value) {
  scalar s(field);
  if (field.is_rational()) {
    s.q_ = value;
    s.q_.canonicalize();
  } else {
    const std::uint64_t p = field.characteristic();
    const mpz_class num_mod = value.get_num() % static_cast<long>(p);
    const mpz_class den_mod = value.get_den() % static_cast<long>(p);
    std::uint64_t num = mpz_class(num_mod < 0 ? num_mod + static_cast<long>(p)
                                              : num_mod).get_ui();
    std::uint64_t den = den_mod.get_ui();
    if (den == 0) {
      fail(errc::zero_denominator,
           "denominator vanishes mod " + std::to_string(p));
    }
    s.rep_ = mulmod(num, extended_inverse(den, p), p);
  }
  return s;
}

bool scalar::is_zero() const noexcept {
  return field_.is_rational() ? q_.get_num() == 0 : rep_ == 0;
}

bool scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : rep_ == 1;
}

std::uint64_t scalar::residue() const {
  if (!field_.is_prime()) fail(errc::wrong_field, "residue() needs F_p");
  return rep_;
}

const mpq_class& scalar::rational() const {
  if (!field_.is_rational()) fail(errc::wrong_field, "rational() needs Q");
  return q_;
}

void scalar::check_same_field(const scalar& rhs) const {
  if (field_ != rhs.field_) {
    fail(errc::field_mismatch,
         field_.name() + " vs " + rhs.field_.name());
  }
}

scalar scalar::operator+(const scalar& rhs) const {
  check_same_field(rhs);
  scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = q_ + rhs.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t sum = rep_ + rhs.rep_;
    out.rep_ = sum >= p ? sum - p : sum;
  }
  return out;
}

scalar scalar::operator-(const scalar& rhs) const {
  check_same_field(rhs);
  scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = q_ - rhs.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    out.rep_ = rep_ >= rhs.rep_ ? rep_ - rhs.rep_ : rep_ + p - rhs.rep_;
  }
  return out;
}

scalar scalar::operator*(const scalar& rhs) const {
  check_same_field(rhs);
  scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = q_ * rhs.q_;
  } else {
    out.rep_ = mulmod(rep_, rhs.rep_, field_.characteristic());
  }
  return out;
}

scalar scalar::operator/(const scalar& rhs) const { return *this * rhs.inverse(); }

scalar scalar::operator-() const {
  scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.rep_ = rep_ == 0 ? 0 : field_.characteristic() - rep_;
  }
  return out;
}

scalar scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.rep_ = extended_inverse(rep_, field_.characteristic());
  }
  return out;
}

scalar scalar::pow(long long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  scalar acc = one(field_);
  scalar base = *this;
  unsigned long long e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool scalar::operator==(const scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  return field_.is_rational() ? q_ == rhs.q_ : rep_ == rhs.rep_;
}

std::string scalar::render() const {
  if (field_.is_prime()) return std::to_string(rep_);
  return q_.get_str();
}

scalar parse_scalar(field_spec field, const std::string& text) {
  if (text.empty()) fail(errc::malformed_literal, "empty scalar literal");
  std::size_t pos = 0;
  bool negative = false;
  if (field.is_rational() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    pos = 1;
  }
  const auto read_digits = [&](mpz_class& out) {
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail(errc::malformed_literal, "bad scalar literal '" + text + "'");
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    out = mpz_class(text.substr(start, pos - start));
  };
  mpz_class num;
  read_digits(num);
  mpz_class den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/' || field.is_prime()) {
      fail(errc::malformed_literal, "bad scalar literal '" + text + "'");
    }
    ++pos;
    read_digits(den);
    if (pos != text.size()) {
      fail(errc::malformed_literal, "bad scalar literal '" + text + "'");
    }
    if (den == 0) fail(errc::zero_denominator, "literal '" + text + "'");
  }
  mpq_class value(num, den);
  value.canonicalize();
  if (negative) value = -value;
  return scalar::of_rational(field, value);
}

scalar invert(const scalar& x) { return x.inverse(); }

scalar multiplicative_generator(field_spec field) {
  if (!field.is_prime()) {
    fail(errc::not_finite, "multiplicative generator needs a finite field");
  }
  const std::uint64_t p = field.characteristic();
  // Factor p - 1, then test candidates g via g^((p-1)/q) != 1.
  std::uint64_t m = p - 1;
  std::uint64_t prime_factors[64];
  int factor_count = 0;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_factors[factor_count++] = q;
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_factors[factor_count++] = m;
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (int i = 0; i < factor_count; ++i) {
      if (powmod(g, (p - 1) / prime_factors[i], p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return scalar::of_int(field, static_cast<long long>(g));
  }
  fail(errc::not_prime, "no generator found (modulus not prime?)");
}

}  // namespace jmw
