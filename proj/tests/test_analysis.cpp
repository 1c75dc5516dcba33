#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "jmw/analysis.hpp"
#include "jmw/errors.hpp"
#include "jmw/operators.hpp"
#include "jmw/transvect.hpp"

namespace {

using jmw::errc;
using jmw::field_spec;
using jmw::matrix;
using jmw::scalar;

// Oracle: the character sum by brute force, with its own generator search
// and discrete logarithm.
std::complex<double> sigma_naive(std::uint64_t p, long long m, std::size_t j) {
  std::uint64_t g = 0;
  for (std::uint64_t c = 2; c < p; ++c) {
    std::uint64_t x = c, order = 1;
    while (x != 1) {
      x = x * c % p;
      ++order;
    }
    if (order == p - 1) {
      g = c;
      break;
    }
  }
  std::vector<std::size_t> dlog(p, 0);
  std::uint64_t x = 1;
  for (std::size_t a = 0; a + 1 < p; ++a) {
    dlog[x] = a;
    x = x * g % p;
  }
  auto chi = [&](std::size_t jj, std::uint64_t value) -> std::complex<double> {
    if (value % p == 0) return {0.0, 0.0};
    double angle = 2.0 * std::numbers::pi *
                   static_cast<double>(jj % (p - 1)) *
                   static_cast<double>(dlog[value % p]) /
                   static_cast<double>(p - 1);
    return {std::cos(angle), std::sin(angle)};
  };
  std::complex<double> acc = 0.0;
  std::size_t jm = (j * static_cast<std::size_t>(m)) % (p - 1);
  for (std::uint64_t t = 1; t + 1 < p; ++t) acc += chi(j, t) * chi(jm, t + 1);
  return acc;
}

matrix random_triangular(field_spec field, std::size_t n, bool upper,
                         std::mt19937_64& rng) {
  matrix A(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (upper ? (j < i) : (j > i)) continue;
      long long v = field.is_rational()
                        ? static_cast<long long>(rng() % 9) - 4
                        : static_cast<long long>(rng() % field.characteristic());
      A.set(i, j, scalar::of_int(field, v));
    }
  return A;
}

}  // namespace

TEST_CASE("det_L_formula equals the determinant of the operator matrix") {
  std::mt19937_64 rng(71);
  for (auto field : {field_spec::rationals(), field_spec::prime(5),
                     field_spec::prime(7)}) {
    for (std::size_t n : {2, 3}) {
      for (int trial = 0; trial < 10; ++trial) {
        matrix A = random_triangular(field, n, trial % 2 == 0, rng);
        CHECK(jmw::det_L_formula(A) == jmw::determinant(jmw::op_L(A)));
      }
    }
  }
  auto q = field_spec::rationals();
  try {
    jmw::det_L_formula(matrix::of_ints(q, {{1, 1}, {1, 1}}));
    FAIL("non-triangular matrix accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::not_triangular);
  }
}

TEST_CASE("det_L_formula closed forms for corank-one diagonals") {
  auto q = field_spec::rationals();
  for (std::size_t n : {2, 3}) {
    std::vector<scalar> diag(n, scalar::one(q));
    diag[0] = scalar::zero(q);
    CHECK(jmw::det_L_formula(matrix::diagonal(q, diag)).is_zero());
    scalar u = scalar::of_int(q, 3);
    diag[0] = u;
    scalar expected =
        u * ((u + scalar::one(q)) * scalar::of_fraction(q, 1, 2))
                .pow(static_cast<long long>(2 * n - 2));
    CHECK(jmw::det_L_formula(matrix::diagonal(q, diag)) == expected);
    CHECK(jmw::det_L_formula(matrix::identity(q, n)).is_one());
  }
  // Singular exactly when some eigenvalue pair cancels.
  CHECK(jmw::det_L_formula(matrix::of_ints(q, {{1, 0}, {0, -1}})).is_zero());
  CHECK_FALSE(jmw::det_L_formula(matrix::of_ints(q, {{1, 0}, {0, -2}})).is_zero());
}

TEST_CASE("character tables are multiplicative with the smallest generator") {
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    auto table = jmw::make_character_table(p);
    CHECK(table.p == p);
    CHECK(table.order == p - 1);
    CHECK(table.generator == jmw::multiplicative_generator(field_spec::prime(p)).residue());
    for (std::size_t j = 0; j < p - 1; ++j) {
      CHECK(std::abs(table.chi(j, 0)) < 1e-12);
      for (std::uint64_t a = 1; a < p; ++a) {
        if (j == 0) CHECK(std::abs(table.chi(0, a) - 1.0) < 1e-9);
        for (std::uint64_t b = 1; b < p; ++b) {
          auto lhs = table.chi(j, a) * table.chi(j, b);
          auto rhs = table.chi(j, a * b % p);
          CHECK(std::abs(lhs - rhs) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("jacobi_sigma agrees with brute-force summation") {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    for (long long m : {2, 4}) {
      for (std::size_t j = 1; j + 1 < p; ++j) {
        auto row = jmw::jacobi_sigma(p, m, j);
        CHECK(std::abs(row.value - sigma_naive(p, m, j)) < 1e-9);
      }
    }
  }
}

TEST_CASE("jacobi_sigma classifies magnitudes by character triviality") {
  auto expect = [](std::uint64_t p, long long m, std::size_t j,
                   jmw::sigma_class cls, double magnitude) {
    auto row = jmw::jacobi_sigma(p, m, j);
    CHECK(row.classification == cls);
    CHECK(std::abs(std::abs(row.value) - magnitude) < 1e-9);
  };
  expect(5, 2, 2, jmw::sigma_class::trivial_power, 1.0);
  expect(5, 2, 1, jmw::sigma_class::jacobi_case, std::sqrt(5.0));
  expect(5, 2, 3, jmw::sigma_class::jacobi_case, std::sqrt(5.0));
  expect(7, 2, 2, jmw::sigma_class::inverse_case, 1.0);
  expect(7, 2, 4, jmw::sigma_class::inverse_case, 1.0);
  expect(7, 2, 3, jmw::sigma_class::trivial_power, 1.0);
  expect(7, 2, 1, jmw::sigma_class::jacobi_case, std::sqrt(7.0));
  for (std::size_t j : {std::size_t{0}, std::size_t{6}}) {
    try {
      jmw::jacobi_sigma(7, 2, j);
      FAIL("trivial character accepted: j = ", j);
    } catch (const jmw::error& e) {
      CHECK(e.code() == errc::trivial_character);
    }
  }
}

TEST_CASE("delta_survey reaches the full unit group with matching words") {
  struct probe {
    std::uint64_t p;
    std::size_t n;
  };
  for (probe pr : {probe{3, 2}, probe{5, 2}, probe{7, 3}, probe{13, 2}}) {
    auto survey = jmw::delta_survey(pr.p, pr.n);
    CHECK(survey.full_group);
    CHECK(survey.order == pr.p - 1);
    CHECK(survey.elements.size() == survey.order);
    CHECK(survey.words.size() == survey.order);
    for (std::size_t i = 0; i < survey.elements.size(); ++i) {
      scalar det = jmw::determinant(jmw::evaluate(survey.words[i]));
      CHECK(det.residue() == survey.elements[i]);
      if (i > 0) CHECK(survey.elements[i - 1] < survey.elements[i]);
    }
  }
}

TEST_CASE("identity registry runs every identity and flags unknown ids") {
  const auto& ids = jmw::identity_ids();
  CHECK(ids.size() == 9);
  auto all_q = jmw::check_identities("all", field_spec::rationals(), 2);
  CHECK(all_q.size() == ids.size());
  for (const auto& row : all_q) {
    CAPTURE(row.id);
    CAPTURE(row.counterexample);
    CHECK(row.pass);
  }
  auto all_f7 = jmw::check_identities("all", field_spec::prime(7), 3);
  CHECK(all_f7.size() == ids.size());
  for (const auto& row : all_f7) {
    CAPTURE(row.id);
    CAPTURE(row.counterexample);
    CHECK(row.pass);
  }
  auto all_f3 = jmw::check_identities("all", field_spec::prime(3), 2);
  CHECK(all_f3.size() == ids.size());
  for (const auto& row : all_f3) {
    CAPTURE(row.id);
    CAPTURE(row.counterexample);
    CHECK(row.pass);
  }
  auto single = jmw::check_identities("g-inverse", field_spec::prime(3), 2);
  CHECK(single.size() == 1);
  CHECK(single[0].pass);
  // Over F_3 the four-factor item degenerates to exhaustive rejection.
  auto degenerate = jmw::check_identities("four-factor", field_spec::prime(3), 2);
  CHECK(degenerate.size() == 1);
  CHECK(degenerate[0].pass);
  try {
    jmw::check_identities("no-such-id", field_spec::rationals(), 2);
    FAIL("unknown identity accepted");
  } catch (const jmw::error& e) {
    CHECK(e.code() == errc::unknown_identity);
  }
}

TEST_CASE("check_e12_product detects a corrupted factor list") {
  auto clean = jmw::check_e12_product(2);
  CHECK(clean.pass);
  CHECK(clean.counterexample.empty());
  auto q = field_spec::rationals();
  jmw::word good = jmw::word_id_pm_U_E12_char0(q, 2, +1);
  std::vector<matrix> factors;
  for (std::size_t k = 0; k < good.length(); ++k) factors.push_back(good.factor(k));
  factors[2] = factors[2] + matrix::unit(q, 2, 0, 0);
  auto bad = jmw::check_e12_product(2, &factors);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.counterexample.empty());
}
