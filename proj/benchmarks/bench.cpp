#include <benchmark/benchmark.h>

#include <random>

#include "jmw/factor.hpp"
#include "jmw/operators.hpp"
#include "jmw/transvect.hpp"

namespace {

using jmw::field_spec;
using jmw::matrix;
using jmw::scalar;
using jmw::word;

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

word random_word(field_spec field, std::size_t n, std::size_t length) {
  std::mt19937_64 rng(7);
  word w(field, n);
  for (std::size_t k = 0; k < length; ++k) w.append(random_matrix(field, n, rng));
  return w;
}

void bm_evaluate_fp(benchmark::State& state) {
  auto field = field_spec::prime(5);
  word w = random_word(field, static_cast<std::size_t>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(jmw::evaluate(w));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_evaluate_fp)->Arg(2)->Arg(3);

void bm_evaluate_q(benchmark::State& state) {
  auto field = field_spec::rationals();
  word w = random_word(field, static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(jmw::evaluate(w));
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(bm_evaluate_q)->Arg(2)->Arg(3);

void bm_op_l(benchmark::State& state) {
  std::mt19937_64 rng(11);
  auto field = field_spec::prime(7);
  matrix A = random_matrix(field, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(jmw::op_L(A));
}
BENCHMARK(bm_op_l)->Arg(2)->Arg(3)->Arg(4);

void bm_factorize_invertible_fp(benchmark::State& state) {
  std::mt19937_64 rng(13);
  auto field = field_spec::prime(5);
  matrix G(field, 4, 4);
  do {
    G = random_matrix(field, 4, rng);
  } while (jmw::determinant(G).is_zero());
  for (auto _ : state) benchmark::DoNotOptimize(jmw::factorize(G));
}
BENCHMARK(bm_factorize_invertible_fp);

void bm_factorize_singular_fp(benchmark::State& state) {
  std::mt19937_64 rng(17);
  auto field = field_spec::prime(5);
  matrix T(field, 4, 4);
  do {
    T = random_matrix(field, 4, rng);
    T.set(3, 3, scalar::zero(field));
  } while (jmw::rank(T) != 3);
  jmw::word_cache cache;
  for (auto _ : state) benchmark::DoNotOptimize(jmw::factorize(T, &cache));
}
BENCHMARK(bm_factorize_singular_fp);

void bm_standard_tau(benchmark::State& state) {
  auto field = field_spec::prime(7);
  scalar t = scalar::of_int(field, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(jmw::word_standard_tau(field, 3, 2, 2, 0, 1, t));
}
BENCHMARK(bm_standard_tau);

void bm_rank_normal_form(benchmark::State& state) {
  std::mt19937_64 rng(19);
  auto field = field_spec::prime(3);
  matrix T = random_matrix(field, 9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(jmw::rank_normal_form(T));
}
BENCHMARK(bm_rank_normal_form);

}  // namespace

BENCHMARK_MAIN();
