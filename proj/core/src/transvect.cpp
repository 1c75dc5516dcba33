#include "jmw/transvect.hpp"

#include <algorithm>
#include <queue>

namespace jmw {

namespace {

void check_rank_one_square_zero(const matrix& M) {
  if (!is_rank_one_square_zero(M)) {
    fail(errc::not_rank_one_square_zero,
         "expected a rank-one matrix with zero square");
  }
}

// Numerators over denominator 2 of the sixteen 2×2 factors whose word
// evaluates to id + op_U(E_12) over Q.
constexpr long long k_e12_factor_halves[16][4] = {
    {2, 3, 1, 2},   {2, -3, -1, 2}, {2, 6, 2, 2},   {2, -6, -2, 2},
    {2, 2, 6, 2},   {2, -2, -6, 2}, {2, 0, 2, 2},   {2, 0, -2, 2},
    {2, 0, 2, 2},   {2, 0, -2, 2},  {2, 1, 3, 2},   {2, -1, -3, 2},
    {2, 2, 6, 2},   {2, -2, -6, 2}, {2, 6, 2, 2},   {2, -6, -2, 2},
};

matrix e12_factor(field_spec field, std::size_t i) {
  matrix B(field, 2, 2);
  B.set(0, 0, scalar::of_fraction(field, k_e12_factor_halves[i][0], 2));
  B.set(0, 1, scalar::of_fraction(field, k_e12_factor_halves[i][1], 2));
  B.set(1, 0, scalar::of_fraction(field, k_e12_factor_halves[i][2], 2));
  B.set(1, 1, scalar::of_fraction(field, k_e12_factor_halves[i][3], 2));
  return B;
}

}  // namespace

std::array<scalar, 4> scalar_four_factors(const scalar& sigma) {
  const field_spec field = sigma.field();
  const auto of = [&](long long v) { return scalar::of_int(field, v); };
  if (sigma.is_zero() || sigma == of(2) || sigma == of(-2) ||
      sigma == of(-4)) {
    fail(errc::exceptional_parameter,
         "four-factor scalars need sigma outside {0, 2, -2, -4}");
  }
  const scalar v1 = -of(8) / (sigma * (sigma + of(2)));
  const scalar v2 = (sigma + of(2)) / (sigma - of(2));
  const scalar v3 = (sigma - of(2)) * (sigma + of(4)) / of(8);
  const scalar v4 = -sigma / (sigma + of(4));
  return {v1, v2, v3, v4};
}

word word_id_pm_U_E12_char0(field_spec field, std::size_t n, int sign) {
  if (!field.is_rational()) {
    fail(errc::wrong_field, "the explicit E_12 word is rational");
  }
  if (n < 2) fail(errc::dimension_mismatch, "need n >= 2");
  word w(field, n);
  if (sign < 0) {
    const matrix P = matrix::identity(field, n) + matrix::unit(field, n, 0, 1);
    const matrix M = matrix::identity(field, n) - matrix::unit(field, n, 0, 1);
    w.append(P);
    w.append(M);
    w.append(P);
    w.append(M);
    return w;
  }
  if (n >= 3) {
    // Four scalar-block factors cancel the constant the padded word
    // produces outside the corner.
    const scalar s0 = scalar::of_fraction(field, 1024, 13);
    const auto v = scalar_four_factors(s0 * s0);
    for (const scalar& vj : v) {
      matrix D = matrix::identity(field, n);
      D.set(0, 0, vj);
      D.set(1, 1, vj);
      w.append(D);
    }
  }
  for (std::size_t i = 0; i < 16; ++i) {
    matrix B = matrix::identity(field, n);
    B.paste(e12_factor(field, i), 0, 0);
    w.append(B);
  }
  return w;
}

word word_id_pm_U_charp(const matrix& M, int sign) {
  const field_spec field = M.field();
  if (!field.is_prime()) {
    fail(errc::wrong_field, "repetition word needs positive characteristic");
  }
  check_rank_one_square_zero(M);
  const std::uint64_t p = field.characteristic();
  const std::uint64_t r = sign > 0 ? p - 2 : 2;
  const matrix I = matrix::identity(field, M.rows());
  const word block = word_of_factors(field, M.rows(), {I + M, I - M});
  return repeat(block, r);
}

matrix similarity_to_E12(const matrix& M) {
  check_rank_one_square_zero(M);
  const std::size_t n = M.rows();
  std::size_t col = n;
  for (std::size_t j = 0; j < n && col == n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!M.at(i, j).is_zero()) {
        col = j;
        break;
      }
    }
  }
  const matrix b1 = M.block(0, col, n, 1);
  const matrix b2 = solve_linear(M, b1);
  matrix S(M.field(), n, n);
  S.paste(b1, 0, 0);
  S.paste(b2, 0, 1);
  std::size_t next = 2;
  for (const matrix& v : kernel_basis(M)) {
    if (next == n) break;
    S.paste(v, 0, next);
    if (rank(S.block(0, 0, n, next + 1)) == next + 1) ++next;
  }
  if (next != n) fail(errc::singular, "kernel completion failed");
  return S;
}

word word_u_of_N(const matrix& N, const scalar& t) {
  check_rank_one_square_zero(N);
  const field_spec field = N.field();
  const std::size_t n = N.rows();
  word w(field, n);
  if (t.is_zero()) return w;
  const scalar half = scalar::of_fraction(field, 1, 2);
  const scalar one = scalar::one(field);
  // t = x² − y², so id + t·U_N = (id + U_{xN})(id − U_{yN}).
  const struct {
    scalar z;
    int sign;
  } branches[2] = {{(t + one) * half, +1}, {(t - one) * half, -1}};
  for (const auto& b : branches) {
    if (b.z.is_zero()) continue;
    const matrix zN = b.z * N;
    if (field.is_prime()) {
      w.append_word(word_id_pm_U_charp(zN, b.sign));
    } else {
      const word base = word_id_pm_U_E12_char0(field, n, b.sign);
      const matrix S = similarity_to_E12(zN);
      const matrix S_inv = inverse(S);
      for (std::size_t k = 0; k < base.length(); ++k) {
        w.append(S * base.factor(k) * S_inv);
      }
    }
  }
  return w;
}

word word_g_inverse(const matrix& R) {
  word w = word_u_of_N(R, scalar::of_fraction(R.field(), 1, 2));
  w.append(matrix::identity(R.field(), R.rows()) - R);
  return w;
}

namespace {

struct m2_context {
  field_spec field;
  std::size_t n;
  std::size_t a;
  std::size_t b;
};

matrix embed_corner(const m2_context& c, long long e11, long long e12,
                    long long e21, long long e22) {
  matrix M(c.field, c.n, c.n);
  M.set(c.a, c.a, scalar::of_int(c.field, e11));
  M.set(c.a, c.b, scalar::of_int(c.field, e12));
  M.set(c.b, c.a, scalar::of_int(c.field, e21));
  M.set(c.b, c.b, scalar::of_int(c.field, e22));
  return M;
}

// Word for op_L(I+R) · (id + t·op_U(N)) · op_L(I+R)⁻¹.
word conjugated_u(const m2_context& c, const matrix& R, const matrix& N,
                  const scalar& t) {
  word w(c.field, c.n);
  w.append(matrix::identity(c.field, c.n) + R);
  w.append_word(word_u_of_N(N, t));
  w.append_word(word_g_inverse(R));
  return w;
}

word m2_word(const m2_context& c, std::size_t r, std::size_t s,
             const scalar& t);

word m2_commutator(const m2_context& c, std::size_t r1, std::size_t s1,
                   const scalar& t1, std::size_t r2, std::size_t s2,
                   const scalar& t2) {
  word w = m2_word(c, r1, s1, t1);
  w.append_word(m2_word(c, r2, s2, t2));
  w.append_word(m2_word(c, r1, s1, -t1));
  w.append_word(m2_word(c, r2, s2, -t2));
  return w;
}

word m2_word(const m2_context& c, std::size_t r, std::size_t s,
             const scalar& t) {
  if (t.is_zero()) return word(c.field, c.n);
  const scalar one = scalar::one(c.field);
  const scalar half = scalar::of_fraction(c.field, 1, 2);
  switch (r * 4 + s) {
    case 1 * 4 + 0:  // x_21(t) = id + t·op_U(E_12) on the corner basis
      return word_u_of_N(embed_corner(c, 0, 1, 0, 0), t);
    case 0 * 4 + 1:  // x_12(t): conjugate id + t·op_U(E_21) by op_L(I+E_12)
      return conjugated_u(c, embed_corner(c, 0, 1, 0, 0),
                          embed_corner(c, 0, 0, 1, 0), t);
    case 0 * 4 + 2: {  // x_13(t): the ε_12, ε_14 parts of two conjugates cancel
      word w = conjugated_u(c, embed_corner(c, 1, 1, -1, -1),
                            embed_corner(c, 0, 0, 1, 0), -t);
      w.append_word(conjugated_u(c, embed_corner(c, -1, 1, -1, 1),
                                 embed_corner(c, 0, 0, 1, 0), -t));
      w.append_word(m2_word(c, 0, 1, t));
      return w;
    }
    case 0 * 4 + 3: {  // x_14(t): opposite parameters keep only the ε_14 part
      word w = conjugated_u(c, embed_corner(c, 1, 1, -1, -1),
                            embed_corner(c, 0, 0, 1, 0), t * half);
      w.append_word(conjugated_u(c, embed_corner(c, -1, 1, -1, 1),
                                 embed_corner(c, 0, 0, 1, 0), -(t * half)));
      return w;
    }
    case 1 * 4 + 2:  // x_23(t) = [x_21(1), x_13(t)]
      return m2_commutator(c, 1, 0, one, 0, 2, t);
    case 1 * 4 + 3:  // x_24(t) = [x_21(1), x_14(t)]
      return m2_commutator(c, 1, 0, one, 0, 3, t);
    case 2 * 4 + 1:  // x_32(t): conjugate by op_L(I+2E_21), half parameter
      return conjugated_u(c, embed_corner(c, 0, 0, 2, 0),
                          embed_corner(c, 0, 1, 0, 0), t * half);
    case 2 * 4 + 0:  // x_31(t) = [x_32(t), x_21(1)]
      return m2_commutator(c, 2, 1, t, 1, 0, one);
    case 3 * 4 + 1: {  // x_42(t): two corrections cancel the extra parts
      word w = m2_word(c, 0, 1, t);
      w.append_word(m2_word(c, 2, 1, -t));
      w.append_word(conjugated_u(c, embed_corner(c, -2, -1, 4, 2),
                                 embed_corner(c, -1, -1, 1, 1), t));
      return w;
    }
    case 3 * 4 + 0:  // x_41(t) = [x_42(t), x_21(1)]
      return m2_commutator(c, 3, 1, t, 1, 0, one);
    case 3 * 4 + 2:  // x_43(t) = [x_42(t), x_23(1)]
      return m2_commutator(c, 3, 1, t, 1, 2, one);
    case 2 * 4 + 3:  // x_34(t) = [x_32(1), x_24(t)]
      return m2_commutator(c, 2, 1, one, 1, 3, t);
    default:
      fail(errc::bad_indices, "corner transvection positions out of range");
  }
}

// Numerators over denominator 2: coordinates of each corner unit in the
// transported 4-element basis, and the rows of the basis-change matrix whose
// columns are those basis elements in unit coordinates. Unit order within
// the corner: E_aa, E_ab, E_ba, E_bb.
constexpr long long k_unit_in_corner_basis[4][4] = {
    {0, -1, 1, 1},
    {0, 2, 0, 0},
    {2, 1, -1, 0},
    {0, -1, 1, -1},
};
constexpr long long k_basis_change_rows[4][4] = {
    {1, 0, 2, 2},
    {0, 2, 2, 0},
    {2, 0, 0, 0},
    {1, 0, 2, -2},
};

std::size_t corner_position(std::size_t a, std::size_t i, std::size_t j) {
  if (i == a) return j == a ? 0 : 1;
  return j == a ? 2 : 3;
}

// Transvection between two units of the corner C_ab, decomposed into corner
// elementary transvections: with w the target unit's corner-basis column and
// z the source unit's basis-change row (so z·w = 0), the operator id + t·wzᵀ
// equals X·(∏_j x_{aj}(t·w_a·z_j))·X⁻¹ for X = ∏_{i≠a} x_{ia}(w_i/w_a),
// a the first index with w_a ≠ 0.
word tau_in_corner(field_spec field, std::size_t n, std::size_t a,
                   std::size_t b, std::size_t pu, std::size_t pv,
                   const scalar& t) {
  const m2_context ctx{field, n, a, b};
  const auto of_half = [&](long long num) {
    return scalar::of_fraction(field, num, 2);
  };
  scalar w[4] = {of_half(k_unit_in_corner_basis[pu][0]),
                 of_half(k_unit_in_corner_basis[pu][1]),
                 of_half(k_unit_in_corner_basis[pu][2]),
                 of_half(k_unit_in_corner_basis[pu][3])};
  scalar z[4] = {of_half(k_basis_change_rows[pv][0]),
                 of_half(k_basis_change_rows[pv][1]),
                 of_half(k_basis_change_rows[pv][2]),
                 of_half(k_basis_change_rows[pv][3])};
  std::size_t piv = 0;
  while (w[piv].is_zero()) ++piv;
  word out(field, n);
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == piv || w[k].is_zero()) continue;
    out.append_word(m2_word(ctx, k, piv, w[k] / w[piv]));
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == piv || z[k].is_zero()) continue;
    out.append_word(m2_word(ctx, piv, k, t * w[piv] * z[k]));
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == piv || w[k].is_zero()) continue;
    out.append_word(m2_word(ctx, k, piv, -(w[k] / w[piv])));
  }
  return out;
}

bool units_share_corner(std::size_t n, std::size_t u, std::size_t v,
                        std::size_t& a, std::size_t& b) {
  std::vector<std::size_t> idx = {u / n, u % n, v / n, v % n};
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.size() > 2) return false;
  a = idx.front();
  b = idx.size() == 2 ? idx.back() : a + 1;
  if (b >= n) {
    b = a;
    a = b - 1;
  }
  return true;
}

// Shortest path between units in the graph whose edges join units lying in
// a common corner. Neighbor order follows the coordinate order, so paths
// are deterministic.
std::vector<std::size_t> unit_path(std::size_t n, std::size_t u,
                                   std::size_t v) {
  const std::size_t d = n * n;
  std::vector<std::size_t> parent(d, d);
  std::queue<std::size_t> queue;
  parent[u] = u;
  queue.push(u);
  std::size_t sa = 0, sb = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop();
    if (x == v) break;
    for (std::size_t y = 0; y < d; ++y) {
      if (y == x || parent[y] != d) continue;
      if (!units_share_corner(n, x, y, sa, sb)) continue;
      parent[y] = x;
      queue.push(y);
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t x = v;; x = parent[x]) {
    path.push_back(x);
    if (x == u) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

word tau_build(field_spec field, std::size_t n, std::size_t u, std::size_t v,
               const scalar& t) {
  std::size_t a = 0, b = 0;
  if (units_share_corner(n, u, v, a, b)) {
    return tau_in_corner(field, n, a, b, corner_position(a, u / n, u % n),
                         corner_position(a, v / n, v % n), t);
  }
  const std::vector<std::size_t> path = unit_path(n, u, v);
  const std::size_t mid = path[path.size() - 2];
  const scalar one = scalar::one(field);
  // [τ_{u,mid}(1), τ_{mid,v}(t)] = τ_{u,v}(t) since u, mid, v are distinct.
  word w = tau_build(field, n, u, mid, one);
  w.append_word(tau_build(field, n, mid, v, t));
  w.append_word(tau_build(field, n, u, mid, -one));
  w.append_word(tau_build(field, n, mid, v, -t));
  return w;
}

}  // namespace

word word_m2_elementary(field_spec field, std::size_t n, corner_index corner,
                        std::size_t r, std::size_t s, const scalar& t) {
  if (corner.i >= corner.j || corner.j >= n) {
    fail(errc::bad_indices, "corner indices must satisfy i < j < n");
  }
  if (r == s || r > 3 || s > 3) {
    fail(errc::bad_indices, "corner transvection needs distinct positions in 0..3");
  }
  return m2_word(m2_context{field, n, corner.i, corner.j}, r, s, t);
}

word word_standard_tau(field_spec field, std::size_t n, std::size_t ti,
                       std::size_t tj, std::size_t si, std::size_t sj,
                       const scalar& t) {
  if (n < 2 || ti >= n || tj >= n || si >= n || sj >= n) {
    fail(errc::bad_indices, "unit indices out of range");
  }
  if (ti == si && tj == sj) {
    fail(errc::bad_indices, "transvection needs distinct units");
  }
  if (t.is_zero()) return word(field, n);
  return tau_build(field, n, unit_index(n, ti, tj), unit_index(n, si, sj), t);
}

}  // namespace jmw
