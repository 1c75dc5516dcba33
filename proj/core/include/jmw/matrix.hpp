#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "jmw/field.hpp"

namespace jmw {

// Dense matrix over Q or F_p. Row-major. Exactly one backing store is live:
// mod_ holds canonical residues for F_p, rat_ holds canonicalized rationals
// for Q.
class matrix {
 public:
  matrix(field_spec field, std::size_t rows, std::size_t cols);

  static matrix identity(field_spec field, std::size_t n);
  // E_{ij}, 0-based.
  static matrix unit(field_spec field, std::size_t n, std::size_t i,
                     std::size_t j);
  static matrix diagonal(field_spec field, const std::vector<scalar>& d);
  // Entries given as integer literals row by row.
  static matrix of_ints(field_spec field,
                        std::initializer_list<std::initializer_list<long long>>
                            rows);
  static matrix column(const std::vector<scalar>& entries);

  field_spec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const scalar& value);

  // Copies src into this matrix with its top-left corner at (row, col).
  void paste(const matrix& src, std::size_t row, std::size_t col);
  matrix block(std::size_t row, std::size_t col, std::size_t nrows,
               std::size_t ncols) const;

  matrix operator+(const matrix& rhs) const;
  matrix operator-(const matrix& rhs) const;
  matrix operator*(const matrix& rhs) const;
  matrix operator-() const;
  matrix scaled(const scalar& c) const;
  matrix transposed() const;

  bool operator==(const matrix& rhs) const;
  bool operator!=(const matrix& rhs) const { return !(*this == rhs); }
  bool is_zero() const;
  bool is_identity() const;

  scalar trace() const;

  // Raw backend access for the word-evaluation kernels.
  std::vector<std::uint64_t>& residue_data() { return mod_; }
  const std::vector<std::uint64_t>& residue_data() const { return mod_; }
  std::vector<mpq_class>& rational_data() { return rat_; }
  const std::vector<mpq_class>& rational_data() const { return rat_; }

 private:
  void check_same_shape(const matrix& rhs) const;

  field_spec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> mod_;
  std::vector<mpq_class> rat_;
};

matrix operator*(const scalar& c, const matrix& A);

scalar determinant(const matrix& A);
matrix inverse(const matrix& A);

// One exact solution of A·x = b (free variables set to zero). Pivots are the
// first nonzero entries scanning top-to-bottom, left-to-right.
matrix solve_linear(const matrix& A, const matrix& b);

// Basis of the null space, ordered by increasing free-column index.
std::vector<matrix> kernel_basis(const matrix& A);

std::size_t rank(const matrix& A);

// T = U · diag(I_r, 0) · W with U, W invertible.
struct rank_decomposition {
  matrix U;
  std::size_t r;
  matrix W;
};

rank_decomposition rank_normal_form(const matrix& T);

}  // namespace jmw
