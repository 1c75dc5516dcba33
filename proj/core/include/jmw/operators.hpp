#pragma once

#include "jmw/matrix.hpp"

namespace jmw {

// Coordinate of E_{ij} under the fixed row-major vectorization (0-based).
inline std::size_t unit_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n + j;
}

// n×n matrix -> n²×1 coordinate column, and back.
matrix vec(const matrix& X);
matrix unvec(const matrix& column, std::size_t n);

// Operator matrices are plain d×d matrices with d = n². Returns n; rejects
// sides that are not perfect squares.
std::size_t operator_side(const matrix& T);

// (AB + BA)/2.
matrix jordan_product(const matrix& A, const matrix& B);

// Matrix of X ↦ A∘X acting on coordinate columns by left multiplication.
matrix op_L(const matrix& A);

// Matrix of X ↦ AXA.
matrix op_U(const matrix& A);

enum class mult_side { left, right };

// Matrix of X ↦ AX (left) or X ↦ XA (right).
matrix op_assoc_mult(const matrix& A, mult_side side);

// Matrix of X ↦ SXS⁻¹.
matrix conj_operator(const matrix& S);

// Tr(XY).
scalar trace_pairing(const matrix& X, const matrix& Y);

bool is_rank_one_square_zero(const matrix& N);

// unvec(T · vec(X)).
matrix apply_op(const matrix& T, const matrix& X);

}  // namespace jmw
