#pragma once

#include <array>

#include "jmw/words.hpp"

namespace jmw {

// Scalars v_1..v_4 with v_1v_2v_3v_4 = 1 and (1+v_1)(1+v_2)(1+v_3)(1+v_4) = σ.
// Defined for σ ∉ {0, 2, −2, −4}.
std::array<scalar, 4> scalar_four_factors(const scalar& sigma);

// Word over Q evaluating to id + sign·op_U(E_12) on M_n. For sign −1 this is
// the four-factor word [(I+E_12), (I−E_12), (I+E_12), (I−E_12)]; for sign +1
// the sixteen-factor 2×2 word, padded and corrected by four scalar-block
// factors when n ≥ 3.
word word_id_pm_U_E12_char0(field_spec field, std::size_t n, int sign);

// Word over F_p evaluating to id + sign·op_U(M) for rank-one square-zero M:
// r repetitions of [(I+M), (I−M)] with r ≡ −2·sign (mod p).
word word_id_pm_U_charp(const matrix& M, int sign);

// Invertible S with M = S·E_12·S⁻¹, built deterministically from the first
// nonzero column of M and an echelon-order kernel completion.
matrix similarity_to_E12(const matrix& M);

// Word evaluating to id + t·op_U(N) for rank-one square-zero N.
word word_u_of_N(const matrix& N, const scalar& t);

// Word evaluating to the inverse of op_L(I+R) for rank-one square-zero R.
word word_g_inverse(const matrix& R);

// Corner rows/cols, 0-based, i < j.
struct corner_index {
  std::size_t i;
  std::size_t j;
};

// Word evaluating to the elementary transvection x_rs(t) (0-based positions
// r, s ∈ 0..3, r ≠ s) on the corner C_ij relative to the transported basis
// (E_ji + (E_ii+E_jj)/2, E_ij, E_ii+E_jj+E_ij, E_ii−E_jj), identity on the
// complementary units.
word word_m2_elementary(field_spec field, std::size_t n, corner_index corner,
                        std::size_t r, std::size_t s, const scalar& t);

// Coordinate transvection in the d-dimensional standard-unit basis:
// adds t times the source coordinate to the target coordinate.
struct transvection_spec {
  std::size_t target;
  std::size_t source;
  scalar t;
};

// Word evaluating to the operator that sends E_{si,sj} to
// E_{si,sj} + t·E_{ti,tj} and fixes every other unit.
word word_standard_tau(field_spec field, std::size_t n, std::size_t ti,
                       std::size_t tj, std::size_t si, std::size_t sj,
                       const scalar& t);

}  // namespace jmw
