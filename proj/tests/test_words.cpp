#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <random>

#include "jmw/errors.hpp"
#include "jmw/operators.hpp"
#include "jmw/words.hpp"

namespace {

using jmw::errc;
using jmw::field_spec;
using jmw::matrix;
using jmw::scalar;
using jmw::word;

// Oracle: the word's operator as a plain left-to-right product of the
// factor multiplication matrices.
matrix evaluate_naive(const word& w) {
  const std::size_t d = w.n() * w.n();
  matrix acc = matrix::identity(w.field(), d);
  for (std::size_t k = 0; k < w.length(); ++k) acc = acc * jmw::op_L(w.factor(k));
  return acc;
}

matrix random_matrix(field_spec field, std::size_t n, std::mt19937_64& rng) {
  matrix A(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long v = field.is_rational()
                        ? static_cast<long long>(rng() % 9) - 4
                        : static_cast<long long>(rng() % field.characteristic());
      A.set(i, j, scalar::of_int(field, v));
    }
  return A;
}

word random_word(field_spec field, std::size_t n, std::size_t length,
                 std::mt19937_64& rng) {
  word w(field, n);
  for (std::size_t k = 0; k < length; ++k) w.append(random_matrix(field, n, rng));
  return w;
}

}  // namespace

TEST_CASE("empty word evaluates to the identity operator") {
  for (auto field : {field_spec::rationals(), field_spec::prime(3)}) {
    for (std::size_t n : {1, 2, 3}) {
      word w(field, n);
      CHECK(jmw::evaluate(w) == matrix::identity(field, n * n));
    }
  }
}

TEST_CASE("evaluate matches the naive operator product") {
  std::mt19937_64 rng(41);
  for (auto field : {field_spec::rationals(), field_spec::prime(5)}) {
    for (std::size_t n : {2, 3}) {
      for (std::size_t length = 1; length <= 8; ++length) {
        word w = random_word(field, n, length, rng);
        CHECK(jmw::evaluate(w) == evaluate_naive(w));
      }
    }
  }
}

TEST_CASE("the last factor applies first") {
  auto q = field_spec::rationals();
  matrix A = matrix::of_ints(q, {{1, 1}, {0, 1}});
  matrix B = matrix::of_ints(q, {{2, 0}, {0, 1}});
  word w(q, 2);
  w.append(A);
  w.append(B);
  matrix X = matrix::of_ints(q, {{0, 1}, {1, 0}});
  CHECK(jmw::apply_op(jmw::evaluate(w), X) ==
        jmw::jordan_product(A, jmw::jordan_product(B, X)));
}

TEST_CASE("word_of_factors, concat and repeat compose factor lists") {
  std::mt19937_64 rng(42);
  auto f7 = field_spec::prime(7);
  word w1 = random_word(f7, 2, 3, rng);
  word w2 = random_word(f7, 2, 2, rng);
  word c = jmw::concat(w1, w2);
  CHECK(c.length() == 5);
  CHECK(jmw::evaluate(c) == jmw::evaluate(w1) * jmw::evaluate(w2));
  word r = jmw::repeat(w2, 3);
  CHECK(r.length() == 6);
  matrix v2 = jmw::evaluate(w2);
  CHECK(jmw::evaluate(r) == v2 * v2 * v2);
  CHECK(jmw::repeat(w2, 0).length() == 0);
  word w3(f7, 2);
  w3.append_word(w1);
  w3.append_word(w2);
  CHECK(jmw::evaluate(w3) == jmw::evaluate(c));
  matrix A = matrix::of_ints(f7, {{1, 2}, {3, 4}});
  word lit = jmw::word_of_factors(f7, 2, {A, A});
  CHECK(lit.length() == 2);
  CHECK(lit.factor(0) == A);
}

TEST_CASE("three repetitions of the signed pair give id plus U over F_5") {
  auto f5 = field_spec::prime(5);
  matrix M = matrix::unit(f5, 2, 0, 1);
  matrix I = matrix::identity(f5, 2);
  word block = jmw::word_of_factors(f5, 2, {I + M, I - M});
  word w = jmw::repeat(block, 3);
  CHECK(jmw::evaluate(w) == matrix::identity(f5, 4) + jmw::op_U(M));
}

TEST_CASE("append rejects foreign fields and shapes") {
  word w(field_spec::prime(5), 2);
  try {
    w.append(matrix::identity(field_spec::rationals(), 2));
    FAIL("foreign field factor accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::field_mismatch);
  }
  try {
    w.append(matrix::identity(field_spec::prime(5), 3));
    FAIL("wrong-size factor accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
  word other(field_spec::prime(5), 3);
  try {
    w.append_word(other);
    FAIL("wrong-size word accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
}

TEST_CASE("verify reports exact equality and the word length") {
  std::mt19937_64 rng(43);
  auto q = field_spec::rationals();
  word w = random_word(q, 2, 4, rng);
  matrix value = jmw::evaluate(w);
  auto good = jmw::verify(w, value);
  CHECK(good.verified);
  CHECK(good.length == 4);
  CHECK(good.target == value);
  matrix off = value + matrix::unit(q, 4, 0, 0);
  auto bad = jmw::verify(w, off);
  CHECK_FALSE(bad.verified);
  try {
    jmw::verify(w, matrix::identity(q, 9));
    FAIL("target of wrong size accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
  try {
    jmw::verify(w, matrix::identity(field_spec::prime(5), 4));
    FAIL("target over wrong field accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::field_mismatch);
  }
}
