#include "jmw/operators.hpp"

namespace jmw {

matrix vec(const matrix& X) {
  const std::size_t n = X.rows();
  if (X.cols() != n) fail(errc::not_square, "vec of non-square matrix");
  matrix v(X.field(), n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      v.set(unit_index(n, i, j), 0, X.at(i, j));
    }
  }
  return v;
}

matrix unvec(const matrix& column, std::size_t n) {
  if (column.cols() != 1 || column.rows() != n * n) {
    fail(errc::dimension_mismatch, "coordinate column has wrong length");
  }
  matrix X(column.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      X.set(i, j, column.at(unit_index(n, i, j), 0));
    }
  }
  return X;
}

std::size_t operator_side(const matrix& T) {
  if (!T.is_square()) fail(errc::not_square, "operator matrix must be square");
  const std::size_t d = T.rows();
  std::size_t n = 0;
  while (n * n < d) ++n;
  if (n * n != d) {
    fail(errc::dimension_not_square,
         "operator side " + std::to_string(d) + " is not a perfect square");
  }
  return n;
}

matrix jordan_product(const matrix& A, const matrix& B) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows()) {
    fail(errc::dimension_mismatch, "jordan product needs equal square shapes");
  }
  const scalar half = scalar::of_fraction(A.field(), 1, 2);
  return (A * B + B * A).scaled(half);
}

matrix op_L(const matrix& A) {
  if (!A.is_square()) fail(errc::not_square, "op_L of non-square matrix");
  const std::size_t n = A.rows();
  const scalar half = scalar::of_fraction(A.field(), 1, 2);
  matrix T(A.field(), n * n, n * n);
  // L_A(E_kl) = (1/2)(A E_kl + E_kl A): coordinate ((i,j),(k,l)) is
  // (A_ik δ_jl + δ_ik A_lj)/2.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const scalar a_ik = half * A.at(i, k);
      if (!a_ik.is_zero()) {
        for (std::size_t j = 0; j < n; ++j) {
          T.set(unit_index(n, i, j), unit_index(n, k, j), a_ik);
        }
      }
    }
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      const scalar a_lj = half * A.at(l, j);
      if (a_lj.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = unit_index(n, i, j);
        const std::size_t col = unit_index(n, i, l);
        T.set(row, col, T.at(row, col) + a_lj);
      }
    }
  }
  return T;
}

matrix op_U(const matrix& A) {
  if (!A.is_square()) fail(errc::not_square, "op_U of non-square matrix");
  const std::size_t n = A.rows();
  matrix T(A.field(), n * n, n * n);
  // U_A(E_kl) = A E_kl A: coordinate ((i,j),(k,l)) is A_ik · A_lj.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const scalar a_ik = A.at(i, k);
      if (a_ik.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) {
          T.set(unit_index(n, i, j), unit_index(n, k, l), a_ik * A.at(l, j));
        }
      }
    }
  }
  return T;
}

matrix op_assoc_mult(const matrix& A, mult_side side) {
  if (!A.is_square()) fail(errc::not_square, "op_assoc_mult of non-square matrix");
  const std::size_t n = A.rows();
  matrix T(A.field(), n * n, n * n);
  if (side == mult_side::left) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const scalar a_ik = A.at(i, k);
        if (a_ik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          T.set(unit_index(n, i, j), unit_index(n, k, j), a_ik);
        }
      }
    }
  } else {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < n; ++j) {
        const scalar a_lj = A.at(l, j);
        if (a_lj.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
          T.set(unit_index(n, i, j), unit_index(n, i, l), a_lj);
        }
      }
    }
  }
  return T;
}

matrix conj_operator(const matrix& S) {
  const matrix S_inv = inverse(S);
  const std::size_t n = S.rows();
  matrix T(S.field(), n * n, n * n);
  // Φ_S(E_kl) = S E_kl S⁻¹: coordinate ((i,j),(k,l)) is S_ik · (S⁻¹)_lj.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const scalar s_ik = S.at(i, k);
      if (s_ik.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) {
          T.set(unit_index(n, i, j), unit_index(n, k, l),
                s_ik * S_inv.at(l, j));
        }
      }
    }
  }
  return T;
}

scalar trace_pairing(const matrix& X, const matrix& Y) {
  if (!X.is_square() || !Y.is_square() || X.rows() != Y.rows()) {
    fail(errc::dimension_mismatch, "trace pairing needs equal square shapes");
  }
  if (X.field() != Y.field()) fail(errc::field_mismatch, "field mismatch");
  scalar t = scalar::zero(X.field());
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (std::size_t j = 0; j < X.cols(); ++j) {
      t += X.at(i, j) * Y.at(j, i);
    }
  }
  return t;
}

bool is_rank_one_square_zero(const matrix& N) {
  if (!N.is_square()) fail(errc::not_square, "expected a square matrix");
  return rank(N) == 1 && (N * N).is_zero();
}

matrix apply_op(const matrix& T, const matrix& X) {
  const std::size_t n = operator_side(T);
  if (X.rows() != n || X.cols() != n) {
    fail(errc::dimension_mismatch, "operator side does not match argument");
  }
  return unvec(T * vec(X), n);
}

}  // namespace jmw
