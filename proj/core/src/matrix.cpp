#include "jmw/matrix.hpp"

#include <utility>

namespace jmw {

namespace {

void require(bool ok, errc code, const char* what) {
  if (!ok) fail(code, what);
}

}  // namespace

matrix::matrix(field_spec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, errc::dimension_mismatch,
          "matrix dimensions must be positive");
  if (field_.is_prime()) {
    mod_.assign(rows * cols, 0);
  } else {
    rat_.assign(rows * cols, mpq_class(0));
  }
}

matrix matrix::identity(field_spec field, std::size_t n) {
  matrix I(field, n, n);
  const scalar one = scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) I.set(i, i, one);
  return I;
}

matrix matrix::unit(field_spec field, std::size_t n, std::size_t i,
                    std::size_t j) {
  require(i < n && j < n, errc::bad_indices, "matrix unit index out of range");
  matrix E(field, n, n);
  E.set(i, j, scalar::one(field));
  return E;
}

matrix matrix::diagonal(field_spec field, const std::vector<scalar>& d) {
  matrix D(field, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) D.set(i, i, d[i]);
  return D;
}

matrix matrix::of_ints(
    field_spec field,
    std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  require(r > 0, errc::dimension_mismatch, "empty literal matrix");
  const std::size_t c = rows.begin()->size();
  matrix A(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, errc::dimension_mismatch, "ragged literal matrix");
    std::size_t j = 0;
    for (long long v : row) A.set(i, j++, scalar::of_int(field, v));
    ++i;
  }
  return A;
}

matrix matrix::column(const std::vector<scalar>& entries) {
  require(!entries.empty(), errc::dimension_mismatch, "empty column");
  matrix v(entries.front().field(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) v.set(i, 0, entries[i]);
  return v;
}

scalar matrix::at(std::size_t i, std::size_t j) const {
  require(i < rows_ && j < cols_, errc::bad_indices, "entry index out of range");
  const std::size_t k = i * cols_ + j;
  if (field_.is_prime()) {
    return scalar::of_int(field_, static_cast<long long>(mod_[k]));
  }
  return scalar::of_rational(field_, rat_[k]);
}

void matrix::set(std::size_t i, std::size_t j, const scalar& value) {
  require(i < rows_ && j < cols_, errc::bad_indices, "entry index out of range");
  require(value.field() == field_, errc::field_mismatch,
          "entry field differs from matrix field");
  const std::size_t k = i * cols_ + j;
  if (field_.is_prime()) {
    mod_[k] = value.residue();
  } else {
    rat_[k] = value.rational();
  }
}

void matrix::paste(const matrix& src, std::size_t row, std::size_t col) {
  require(src.field_ == field_, errc::field_mismatch, "paste field mismatch");
  require(row + src.rows_ <= rows_ && col + src.cols_ <= cols_,
          errc::dimension_mismatch, "paste exceeds target");
  for (std::size_t i = 0; i < src.rows_; ++i) {
    for (std::size_t j = 0; j < src.cols_; ++j) {
      set(row + i, col + j, src.at(i, j));
    }
  }
}

matrix matrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                     std::size_t ncols) const {
  require(row + nrows <= rows_ && col + ncols <= cols_,
          errc::dimension_mismatch, "block exceeds source");
  matrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      out.set(i, j, at(row + i, col + j));
    }
  }
  return out;
}

void matrix::check_same_shape(const matrix& rhs) const {
  require(field_ == rhs.field_, errc::field_mismatch, "field mismatch");
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, errc::dimension_mismatch,
          "shape mismatch");
}

matrix matrix::operator+(const matrix& rhs) const {
  check_same_shape(rhs);
  matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.set(i, j, at(i, j) + rhs.at(i, j));
    }
  }
  return out;
}

matrix matrix::operator-(const matrix& rhs) const {
  check_same_shape(rhs);
  matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.set(i, j, at(i, j) - rhs.at(i, j));
    }
  }
  return out;
}

matrix matrix::operator*(const matrix& rhs) const {
  require(field_ == rhs.field_, errc::field_mismatch, "field mismatch");
  require(cols_ == rhs.rows_, errc::dimension_mismatch,
          "inner dimensions differ");
  matrix out(field_, rows_, rhs.cols_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        unsigned __int128 acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
          acc += static_cast<unsigned __int128>(mod_[i * cols_ + k]) *
                 rhs.mod_[k * rhs.cols_ + j];
        }
        out.mod_[i * rhs.cols_ + j] = static_cast<std::uint64_t>(acc % p);
      }
    }
  } else {
    mpq_class acc;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
          acc += rat_[i * cols_ + k] * rhs.rat_[k * rhs.cols_ + j];
        }
        out.rat_[i * rhs.cols_ + j] = acc;
      }
    }
  }
  return out;
}

matrix matrix::operator-() const {
  return scaled(-scalar::one(field_));
}

matrix matrix::scaled(const scalar& c) const {
  require(c.field() == field_, errc::field_mismatch, "field mismatch");
  matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.set(i, j, c * at(i, j));
    }
  }
  return out;
}

matrix matrix::transposed() const {
  matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.set(j, i, at(i, j));
    }
  }
  return out;
}

bool matrix::operator==(const matrix& rhs) const {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    return false;
  }
  return field_.is_prime() ? mod_ == rhs.mod_ : rat_ == rhs.rat_;
}

bool matrix::is_zero() const {
  if (field_.is_prime()) {
    for (std::uint64_t v : mod_) {
      if (v != 0) return false;
    }
    return true;
  }
  for (const mpq_class& v : rat_) {
    if (v != 0) return false;
  }
  return true;
}

bool matrix::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(field_, rows_);
}

scalar matrix::trace() const {
  require(is_square(), errc::not_square, "trace of non-square matrix");
  scalar t = scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

matrix operator*(const scalar& c, const matrix& A) { return A.scaled(c); }

namespace {

// In-place reduced row echelon form. Pivots are sought only in the first
// pivot_cols columns, each pivot the first nonzero entry scanning
// top-to-bottom down the leftmost unfinished column. Row operations apply to
// the full width. Returns the pivot columns in order.
std::vector<std::size_t> rref(matrix& M, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < pivot_cols && next_row < M.rows(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < M.rows() && M.at(pivot_row, col).is_zero()) {
      ++pivot_row;
    }
    if (pivot_row == M.rows()) continue;
    if (pivot_row != next_row) {
      for (std::size_t j = 0; j < M.cols(); ++j) {
        const scalar tmp = M.at(next_row, j);
        M.set(next_row, j, M.at(pivot_row, j));
        M.set(pivot_row, j, tmp);
      }
    }
    const scalar inv = M.at(next_row, col).inverse();
    for (std::size_t j = 0; j < M.cols(); ++j) {
      M.set(next_row, j, inv * M.at(next_row, j));
    }
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == next_row) continue;
      const scalar factor = M.at(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < M.cols(); ++j) {
        M.set(i, j, M.at(i, j) - factor * M.at(next_row, j));
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

scalar determinant(const matrix& A) {
  if (!A.is_square()) fail(errc::not_square, "determinant of non-square matrix");
  matrix M = A;
  const std::size_t n = M.rows();
  bool negate = false;
  scalar det = scalar::one(M.field());
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < n && M.at(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == n) return scalar::zero(M.field());
    if (pivot_row != next_row) {
      negate = !negate;
      for (std::size_t j = col; j < n; ++j) {
        const scalar tmp = M.at(next_row, j);
        M.set(next_row, j, M.at(pivot_row, j));
        M.set(pivot_row, j, tmp);
      }
    }
    const scalar pivot = M.at(next_row, col);
    det *= pivot;
    const scalar inv = pivot.inverse();
    for (std::size_t i = next_row + 1; i < n; ++i) {
      const scalar factor = M.at(i, col) * inv;
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) {
        M.set(i, j, M.at(i, j) - factor * M.at(next_row, j));
      }
    }
    ++next_row;
  }
  return negate ? -det : det;
}

matrix inverse(const matrix& A) {
  if (!A.is_square()) fail(errc::not_square, "inverse of non-square matrix");
  const std::size_t n = A.rows();
  matrix aug(A.field(), n, 2 * n);
  aug.paste(A, 0, 0);
  aug.paste(matrix::identity(A.field(), n), 0, n);
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) fail(errc::singular, "matrix is not invertible");
  return aug.block(0, n, n, n);
}

matrix solve_linear(const matrix& A, const matrix& b) {
  if (A.field() != b.field()) fail(errc::field_mismatch, "field mismatch");
  if (b.cols() != 1 || b.rows() != A.rows()) {
    fail(errc::dimension_mismatch, "right-hand side shape mismatch");
  }
  matrix aug(A.field(), A.rows(), A.cols() + 1);
  aug.paste(A, 0, 0);
  aug.paste(b, 0, A.cols());
  const auto pivots = rref(aug, A.cols());
  for (std::size_t i = pivots.size(); i < A.rows(); ++i) {
    if (!aug.at(i, A.cols()).is_zero()) {
      fail(errc::inconsistent, "right-hand side outside the column span");
    }
  }
  matrix x(A.field(), A.cols(), 1);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x.set(pivots[k], 0, aug.at(k, A.cols()));
  }
  return x;
}

std::vector<matrix> kernel_basis(const matrix& A) {
  matrix M = A;
  const auto pivots = rref(M, M.cols());
  std::vector<bool> is_pivot(M.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<matrix> basis;
  for (std::size_t free_col = 0; free_col < M.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    matrix v(A.field(), M.cols(), 1);
    v.set(free_col, 0, scalar::one(A.field()));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v.set(pivots[k], 0, -M.at(k, free_col));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const matrix& A) {
  matrix M = A;
  return rref(M, M.cols()).size();
}

rank_decomposition rank_normal_form(const matrix& T) {
  if (!T.is_square()) fail(errc::not_square, "rank normal form needs a square matrix");
  const std::size_t d = T.rows();
  matrix M = T;
  matrix P = matrix::identity(T.field(), d);
  matrix Q = matrix::identity(T.field(), d);
  // Invariant: P · T · Q = M with P, Q invertible.
  std::size_t r = 0;
  for (; r < d; ++r) {
    // First nonzero entry of the trailing block in row-major scan order.
    std::size_t pi = d, pj = d;
    for (std::size_t i = r; i < d && pi == d; ++i) {
      for (std::size_t j = r; j < d; ++j) {
        if (!M.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == d) break;
    const auto swap_rows = [d](matrix& X, std::size_t a, std::size_t b) {
      if (a == b) return;
      for (std::size_t j = 0; j < d; ++j) {
        const scalar tmp = X.at(a, j);
        X.set(a, j, X.at(b, j));
        X.set(b, j, tmp);
      }
    };
    const auto swap_cols = [d](matrix& X, std::size_t a, std::size_t b) {
      if (a == b) return;
      for (std::size_t i = 0; i < d; ++i) {
        const scalar tmp = X.at(i, a);
        X.set(i, a, X.at(i, b));
        X.set(i, b, tmp);
      }
    };
    swap_rows(M, r, pi);
    swap_rows(P, r, pi);
    swap_cols(M, r, pj);
    swap_cols(Q, r, pj);
    const scalar inv = M.at(r, r).inverse();
    for (std::size_t j = 0; j < d; ++j) {
      M.set(r, j, inv * M.at(r, j));
      P.set(r, j, inv * P.at(r, j));
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r) continue;
      const scalar factor = M.at(i, r);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        M.set(i, j, M.at(i, j) - factor * M.at(r, j));
        P.set(i, j, P.at(i, j) - factor * P.at(r, j));
      }
    }
    for (std::size_t j = r + 1; j < d; ++j) {
      const scalar factor = M.at(r, j);
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < d; ++i) {
        M.set(i, j, M.at(i, j) - factor * M.at(i, r));
        Q.set(i, j, Q.at(i, j) - factor * Q.at(i, r));
      }
    }
  }
  return rank_decomposition{inverse(P), r, inverse(Q)};
}

}  // namespace jmw
