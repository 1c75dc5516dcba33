// Acceptance gate: ten pass/fail criteria over the whole pipeline, one
// printed line each. All algebraic comparisons are exact; the only
// tolerances are the pinned floating-point bounds below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jmw/analysis.hpp"
#include "jmw/errors.hpp"
#include "jmw/factor.hpp"
#include "jmw/json_io.hpp"
#include "jmw/operators.hpp"
#include "jmw/transvect.hpp"

namespace {

using jmw::field_spec;
using jmw::matrix;
using jmw::scalar;
using jmw::word;

constexpr double k_jacobi_tolerance = 1e-6;  // |Sigma| magnitude comparisons
constexpr double k_limit_appendix_a = 1.0;   // seconds
constexpr double k_limit_appendix_b = 5.0;   // seconds
constexpr double k_limit_round_trip = 600.0; // seconds

struct outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

class stopwatch {
 public:
  stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void note(outcome& result, bool ok, const std::string& what) {
  if (ok) return;
  result.pass = false;
  if (!result.detail.empty()) result.detail += "; ";
  result.detail += what;
}

matrix random_matrix(field_spec field, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
  matrix A(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long long v = field.is_rational()
                        ? static_cast<long long>(rng() % 9) - 4
                        : static_cast<long long>(rng() % field.characteristic());
      A.set(i, j, scalar::of_int(field, v));
    }
  return A;
}

matrix random_rank(field_spec field, std::size_t d, std::size_t r,
                   std::mt19937_64& rng) {
  if (r == 0) return matrix(field, d, d);
  for (;;) {
    matrix A = random_matrix(field, d, r, rng) * random_matrix(field, r, d, rng);
    if (jmw::rank(A) == r) return A;
  }
}

// Criterion 1: the explicit sixteen- and twenty-factor words equal
// id + U_{E12} exactly, and the shifted halves multiply to the pinned
// scalar blocks, all within the one-second budget.
outcome criterion_appendix_a() {
  outcome result;
  stopwatch clock;
  auto q = field_spec::rationals();
  word w2 = jmw::word_id_pm_U_E12_char0(q, 2, +1);
  note(result, w2.length() == 16, "sixteen-factor length");
  note(result,
       jmw::evaluate(w2) ==
           matrix::identity(q, 4) + jmw::op_U(matrix::unit(q, 2, 0, 1)),
       "sixteen-factor product");
  word w3 = jmw::word_id_pm_U_E12_char0(q, 3, +1);
  note(result, w3.length() == 20, "twenty-factor length");
  note(result,
       jmw::evaluate(w3) ==
           matrix::identity(q, 9) + jmw::op_U(matrix::unit(q, 3, 0, 1)),
       "twenty-factor product");

  const scalar half = scalar::of_fraction(q, 1, 2);
  matrix I2 = matrix::identity(q, 2);
  std::vector<matrix> C;
  for (std::size_t k = 0; k < 16; ++k) C.push_back(half * (w2.factor(k) + I2));
  auto scalar_block = [&](const matrix& M, long long num, long long den) {
    return M == scalar::of_fraction(q, num, den) * I2;
  };
  note(result, scalar_block(C[0] * C[1], 13, 16), "C1C2");
  note(result, scalar_block(C[10] * C[11], 13, 16), "C11C12");
  for (std::size_t k : {std::size_t{2}, std::size_t{4}, std::size_t{12},
                        std::size_t{14}})
    note(result, scalar_block(C[k] * C[k + 1], 1, 4),
         "C" + std::to_string(k + 1) + "C" + std::to_string(k + 2));
  note(result, scalar_block(C[6] * C[7], 1, 1), "C7C8");
  note(result, scalar_block(C[8] * C[9], 1, 1), "C9C10");
  matrix prod = I2;
  for (const auto& Ck : C) prod = prod * Ck;
  note(result, scalar_block(prod, 169, 65536), "full C product");

  result.seconds = clock.seconds();
  note(result, result.seconds < k_limit_appendix_a, "time budget");
  return result;
}

// Criterion 2: the six basis identities hold exactly over Q and F_5 with
// ten random parameters each, within the five-second budget.
outcome criterion_appendix_b() {
  outcome result;
  stopwatch clock;
  for (auto field : {field_spec::rationals(), field_spec::prime(5)}) {
    auto rows = jmw::check_identities("appendix-b", field, 2);
    for (const auto& row : rows)
      note(result, row.pass, field.name() + ": " + row.counterexample);
  }
  result.seconds = clock.seconds();
  note(result, result.seconds < k_limit_appendix_b, "time budget");
  return result;
}

// Criterion 3: factorize and re-evaluate random operators exactly: at
// least 100 per prime field at n = 2 covering every rank 0..4, and at
// least 20 each over Q and F_3 at n = 3, within the ten-minute budget.
outcome criterion_round_trip(jmw::word_cache& cache) {
  outcome result;
  stopwatch clock;
  std::size_t total_ops = 0;
  std::size_t total_factors = 0;

  auto run_op = [&](const matrix& T, const std::string& tag,
                    std::set<std::size_t>& ranks) {
    ranks.insert(jmw::rank(T));
    auto rep = jmw::factorize(T, &cache);
    note(result, rep.verified, tag + " not verified");
    note(result, jmw::evaluate(rep.w) == T, tag + " re-evaluation mismatch");
    ++total_ops;
    total_factors += rep.length;
  };

  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    auto field = field_spec::prime(p);
    std::mt19937_64 rng(0xACC3000 + p);
    std::set<std::size_t> ranks;
    for (std::size_t r = 0; r <= 4; ++r)
      run_op(random_rank(field, 4, r, rng), field.name() + " forced", ranks);
    for (int k = 0; k < 95; ++k)
      run_op(random_matrix(field, 4, 4, rng), field.name() + " random", ranks);
    note(result, ranks.size() == 5, field.name() + " rank coverage");
  }

  {
    auto f3 = field_spec::prime(3);
    std::mt19937_64 rng(0xACC3100);
    std::set<std::size_t> ranks;
    for (std::size_t r = 0; r <= 9; ++r)
      run_op(random_rank(f3, 9, r, rng), "Fp:3 n=3 forced", ranks);
    for (int k = 0; k < 10; ++k)
      run_op(random_matrix(f3, 9, 9, rng), "Fp:3 n=3 random", ranks);
    note(result, ranks.size() == 10, "Fp:3 n=3 rank coverage");
  }

  {
    auto q = field_spec::rationals();
    std::mt19937_64 rng(0xACC3200);
    std::set<std::size_t> ranks;
    for (std::size_t r : {std::size_t{8}, std::size_t{5}, std::size_t{2}})
      run_op(random_rank(q, 9, r, rng), "Q n=3 forced", ranks);
    for (int k = 0; k < 17; ++k)
      run_op(random_matrix(q, 9, 9, rng), "Q n=3 random", ranks);
    note(result, ranks.count(9) == 1, "Q n=3 invertible coverage");
  }

  result.seconds = clock.seconds();
  note(result, result.seconds < k_limit_round_trip, "time budget");
  if (result.pass)
    result.detail = std::to_string(total_ops) + " operators, " +
                    std::to_string(total_factors) + " factors";
  return result;
}

// Criterion 4: standard transvection words for every ordered pair of
// distinct units at n = 2 and n = 3, t in {1, -1, 3}, over Q and F_5.
outcome criterion_transvections() {
  outcome result;
  std::size_t words = 0;
  for (auto field : {field_spec::rationals(), field_spec::prime(5)}) {
    for (std::size_t n : {2, 3}) {
      const std::size_t d = n * n;
      matrix I = matrix::identity(field, d);
      for (std::size_t target = 0; target < d; ++target)
        for (std::size_t source = 0; source < d; ++source) {
          if (target == source) continue;
          for (long long tv : {1, -1, 3}) {
            scalar t = scalar::of_int(field, tv);
            word w = jmw::word_standard_tau(field, n, target / n, target % n,
                                            source / n, source % n, t);
            bool ok = jmw::evaluate(w) ==
                      I + t * matrix::unit(field, d, target, source);
            note(result, ok,
                 field.name() + " n=" + std::to_string(n) + " pair " +
                     std::to_string(target) + "<-" + std::to_string(source));
            ++words;
          }
        }
    }
  }
  if (result.pass) result.detail = std::to_string(words) + " words";
  return result;
}

// Criterion 5: the closed determinant formula equals det(op_L) on 50
// random triangular matrices per field and n, with the singularity
// criterion λ_i + λ_j = 0 exact in both directions.
outcome criterion_det_formula() {
  outcome result;
  std::size_t checked = 0;
  for (auto field : {field_spec::rationals(), field_spec::prime(5),
                     field_spec::prime(7)}) {
    std::mt19937_64 rng(0xACC5000 + field.characteristic());
    for (std::size_t n : {2, 3}) {
      for (int trial = 0; trial < 50; ++trial) {
        matrix A(field, n, n);
        bool upper = trial % 2 == 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (upper ? (j < i) : (j > i)) continue;
            long long v =
                field.is_rational()
                    ? static_cast<long long>(rng() % 9) - 4
                    : static_cast<long long>(rng() % field.characteristic());
            A.set(i, j, scalar::of_int(field, v));
          }
        scalar formula = jmw::det_L_formula(A);
        note(result, formula == jmw::determinant(jmw::op_L(A)),
             field.name() + " formula mismatch");
        bool pair_cancels = false;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if ((A.at(i, i) + A.at(j, j)).is_zero()) pair_cancels = true;
        note(result, formula.is_zero() == pair_cancels,
             field.name() + " singularity criterion");
        ++checked;
      }
      // Forced eigenvalue cancellation.
      std::vector<scalar> diag(n, scalar::one(field));
      diag[n - 1] = -scalar::one(field);
      note(result, jmw::det_L_formula(matrix::diagonal(field, diag)).is_zero(),
           field.name() + " forced singular");
    }
  }
  if (result.pass) result.detail = std::to_string(checked) + " triangulars";
  return result;
}

// Criterion 6: the determinant subgroup is all of F_p^* for p in
// {3,5,7,11,13} and n in {2,3}, every element's word re-evaluates to its
// determinant, and 20 random rational targets match exactly.
outcome criterion_delta() {
  outcome result;
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    for (std::size_t n : {2, 3}) {
      auto survey = jmw::delta_survey(p, n);
      std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      note(result, survey.full_group, tag + " subgroup is proper");
      note(result, survey.order == p - 1, tag + " order");
      note(result, survey.elements.size() == survey.words.size(), tag + " sizes");
      for (std::size_t i = 0; i < survey.elements.size(); ++i) {
        scalar det = jmw::determinant(jmw::evaluate(survey.words[i]));
        note(result, det.residue() == survey.elements[i], tag + " word det");
      }
    }
  }
  auto q = field_spec::rationals();
  std::mt19937_64 rng(0xACC6000);
  for (std::size_t n : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      long long num = static_cast<long long>(rng() % 17) - 8;
      long long den = 1 + static_cast<long long>(rng() % 9);
      if (num == 0) num = 5;
      scalar gamma = scalar::of_fraction(q, num, den);
      word w = jmw::det_match_word(gamma, n);
      note(result, jmw::determinant(jmw::evaluate(w)) == gamma,
           "rational target " + gamma.render());
    }
  }
  return result;
}

// Criterion 7: Jacobi magnitudes for p in {5,7,11,13}, m = 2n-2, every
// nontrivial character: |Sigma| is 1 or sqrt(p) within the pinned
// tolerance, and always strictly below p-2.
outcome criterion_jacobi() {
  outcome result;
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    for (std::size_t n : {2, 3}) {
      long long m = 2 * static_cast<long long>(n) - 2;
      for (std::size_t j = 1; j + 1 < p; ++j) {
        auto row = jmw::jacobi_sigma(p, m, j);
        double mag = std::abs(row.value);
        double expected = row.classification == jmw::sigma_class::jacobi_case
                              ? std::sqrt(static_cast<double>(p))
                              : 1.0;
        std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m) +
                          " j=" + std::to_string(j);
        note(result, std::abs(mag - expected) <= k_jacobi_tolerance,
             tag + " magnitude");
        note(result, mag < static_cast<double>(p - 2), tag + " bound");
      }
    }
  }
  return result;
}

// Criterion 8: the operator identity suite (multiplication splits,
// nilpotent U properties, conjugation covariance, g-inverse, four-factor
// scalars, u-inverses) on 30 random inputs per field and size.
outcome criterion_identities() {
  outcome result;
  const std::vector<std::string> ids = {
      "l-split",   "quadratic-nilpotent", "conjugation-covariance",
      "g-inverse", "four-factor",         "u-inverse"};
  for (auto field : {field_spec::rationals(), field_spec::prime(3),
                     field_spec::prime(5), field_spec::prime(7)}) {
    for (std::size_t n : {2, 3}) {
      for (const auto& id : ids) {
        auto rows = jmw::check_identities(id, field, n);
        for (const auto& row : rows)
          note(result, row.pass,
               id + " " + field.name() + " n=" + std::to_string(n) + ": " +
                   row.counterexample);
      }
    }
  }
  return result;
}

// Criterion 9: characteristic two is rejected with the CharTwo error at
// every entry point that names a field.
outcome criterion_char_two() {
  outcome result;
  auto expect_char_two = [&](const char* tag, auto&& thunk) {
    try {
      thunk();
      note(result, false, std::string(tag) + " accepted char 2");
    } catch (const jmw::error& e) {
      note(result, e.code() == jmw::errc::char_two,
           std::string(tag) + " wrong error code");
    }
  };
  expect_char_two("field_spec::prime", [] { field_spec::prime(2); });
  expect_char_two("field_spec::parse", [] { field_spec::parse("Fp:2"); });
  expect_char_two("matrix_from_json", [] {
    jmw::matrix_from_json(
        R"({"field":"Fp:2","rows":1,"cols":1,"entries":[["1"]]})");
  });
  expect_char_two("word_from_json", [] {
    jmw::word_from_json(
        R"({"field":"Fp:2","n":2,"convention":"apply-last-first","factors":[]})");
  });
  note(result, !jmw::is_odd_prime(2), "is_odd_prime(2)");
  return result;
}

void print_line(int index, const char* label, const outcome& result) {
  std::printf("criterion %2d: %s  %s  [%.2fs]%s%s\n", index,
              result.pass ? "PASS" : "FAIL", label, result.seconds,
              result.detail.empty() ? "" : "  ", result.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  jmw::word_cache cache;
  int failed = 0;
  auto run = [&](int index, const char* label, auto&& criterion) {
    stopwatch clock;
    outcome result = criterion();
    if (result.seconds == 0.0) result.seconds = clock.seconds();
    print_line(index, label, result);
    if (!result.pass) ++failed;
    return result.pass;
  };

  run(1, "explicit E12 words and scalar C-blocks", criterion_appendix_a);
  run(2, "corner basis identities over Q and F_5", criterion_appendix_b);
  bool c3 = run(3, "factorization round-trips across rank classes",
                [&] { return criterion_round_trip(cache); });
  bool c4 = run(4, "standard transvections for all unit pairs",
                criterion_transvections);
  run(5, "triangular determinant formula", criterion_det_formula);
  run(6, "determinant subgroup surveys and rational targets", criterion_delta);
  run(7, "Jacobi magnitude classification", criterion_jacobi);
  run(8, "operator identity suite", criterion_identities);
  run(9, "characteristic-two rejection", criterion_char_two);

  run(10, "surjectivity substitute: criteria 3 and 4 in full", [&] {
    outcome substitute;
    substitute.pass = c3 && c4;
    if (!substitute.pass) substitute.detail = "criteria 3 and 4 must both pass";
    return substitute;
  });

  std::printf("acceptance: %d/10 PASS\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
