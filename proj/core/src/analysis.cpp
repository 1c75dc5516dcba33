#include "jmw/analysis.hpp"

#include <functional>
#include <numbers>
#include <queue>
#include <random>

#include "jmw/factor.hpp"
#include "jmw/operators.hpp"
#include "jmw/transvect.hpp"

namespace jmw {

scalar det_L_formula(const matrix& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) fail(errc::dimension_mismatch, "need a square matrix");
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j && !A.at(i, j).is_zero()) upper = false;
      if (i < j && !A.at(i, j).is_zero()) lower = false;
    }
  }
  if (!upper && !lower) {
    fail(errc::not_triangular, "eigenvalues must be on the diagonal");
  }
  scalar prod = scalar::one(A.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      prod = prod * (A.at(i, i) + A.at(j, j));
    }
  }
  const scalar two = scalar::of_int(A.field(), 2);
  return prod / two.pow(static_cast<long long>(n * n));
}

character_table make_character_table(std::uint64_t p) {
  const field_spec field = field_spec::prime(p);
  const std::uint64_t g = multiplicative_generator(field).residue();
  character_table table{p, g, static_cast<std::size_t>(p - 1),
                        std::vector<std::size_t>(p, 0)};
  std::uint64_t x = 1;
  for (std::size_t a = 0; a + 1 < p; ++a) {
    table.log[x] = a;
    x = x * g % p;
  }
  return table;
}

std::complex<double> character_table::chi(std::size_t j, std::uint64_t x) const {
  x %= p;
  if (x == 0) return {0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi *
                       static_cast<double>(j % order) *
                       static_cast<double>(log[x]) / static_cast<double>(order);
  return std::polar(1.0, angle);
}

sigma_value jacobi_sigma(std::uint64_t p, long long m, std::size_t j) {
  const character_table table = make_character_table(p);
  const std::uint64_t len = p - 1;
  if (j % len == 0) {
    fail(errc::trivial_character, "need a nontrivial character");
  }
  const std::size_t jj = j % len;
  const auto reduce = [&](long long v) {
    long long r = v % static_cast<long long>(len);
    if (r < 0) r += static_cast<long long>(len);
    return static_cast<std::size_t>(r);
  };
  const std::size_t jm = reduce(static_cast<long long>(jj) * m);
  std::complex<double> sum{0.0, 0.0};
  // t = 0 and t = p−1 contribute nothing: χ(0) = 0.
  for (std::uint64_t t = 1; t + 1 < p; ++t) {
    sum += table.chi(jj, t) * table.chi(jm, t + 1);
  }
  const sigma_class cls =
      jm == 0 ? sigma_class::trivial_power
      : reduce(static_cast<long long>(jj) * (m + 1)) == 0
          ? sigma_class::inverse_case
          : sigma_class::jacobi_case;
  return {p, m, jj, sum, cls};
}

subgroup_survey delta_survey(std::uint64_t p, std::size_t n) {
  const field_spec field = field_spec::prime(p);
  const scalar one = scalar::one(field);
  const scalar half = scalar::of_fraction(field, 1, 2);
  const long long r = 2 * static_cast<long long>(n) - 2;
  std::vector<std::uint64_t> values;
  for (std::uint64_t t = 1; t + 1 < p; ++t) {
    const scalar ts = scalar::of_int(field, static_cast<long long>(t));
    values.push_back((ts * ((ts + one) * half).pow(r)).residue());
  }
  if (p == 3) values.push_back(2);
  std::vector<bool> seen(p, false);
  std::queue<std::uint64_t> queue;
  seen[1] = true;
  queue.push(1);
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop();
    for (const std::uint64_t v : values) {
      const std::uint64_t next = s * v % p;
      if (seen[next]) continue;
      seen[next] = true;
      queue.push(next);
    }
  }
  subgroup_survey out{p, n, 0, false, {}, {}};
  for (std::uint64_t e = 1; e < p; ++e) {
    if (!seen[e]) continue;
    out.elements.push_back(e);
    out.words.push_back(
        det_match_word(scalar::of_int(field, static_cast<long long>(e)), n));
  }
  out.order = out.elements.size();
  out.full_group = out.order == p - 1;
  return out;
}

namespace {

constexpr std::size_t k_samples = 30;

class sampler {
 public:
  sampler(field_spec field, std::uint64_t seed) : field_(field), rng_(seed) {}

  scalar pick() {
    if (field_.is_prime()) {
      return scalar::of_int(
          field_, static_cast<long long>(rng_() % field_.characteristic()));
    }
    const long long num = static_cast<long long>(rng_() % 19) - 9;
    const long long den = static_cast<long long>(rng_() % 9) + 1;
    return scalar::of_fraction(field_, num, den);
  }

  scalar pick_nonzero() {
    for (;;) {
      const scalar s = pick();
      if (!s.is_zero()) return s;
    }
  }

  matrix pick_matrix(std::size_t rows, std::size_t cols) {
    matrix M(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) M.set(i, j, pick());
    }
    return M;
  }

  matrix pick_invertible(std::size_t n) {
    for (;;) {
      const matrix M = pick_matrix(n, n);
      if (!determinant(M).is_zero()) return M;
    }
  }

  matrix pick_rank_one_square_zero(std::size_t n) {
    for (;;) {
      matrix u(field_, n, 1);
      for (std::size_t i = 0; i < n; ++i) u.set(i, 0, pick());
      std::size_t lead = n;
      for (std::size_t i = 0; i < n && lead == n; ++i) {
        if (!u.at(i, 0).is_zero()) lead = i;
      }
      if (lead == n) continue;
      matrix v(field_, 1, n);
      scalar dot = scalar::zero(field_);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == lead) continue;
        v.set(0, j, pick());
        dot = dot + v.at(0, j) * u.at(j, 0);
      }
      v.set(0, lead, -(dot / u.at(lead, 0)));
      if (v.is_zero()) continue;
      return u * v;
    }
  }

 private:
  field_spec field_;
  std::mt19937_64 rng_;
};

std::uint64_t item_seed(const std::string& id, field_spec field,
                        std::size_t n) {
  return 0x6a6d770000000000ULL ^
         std::hash<std::string>{}(id + "/" + field.name() + "/" +
                                  std::to_string(n));
}

void record_failure(identity_check& row, const std::string& what) {
  if (!row.pass) return;
  row.pass = false;
  row.counterexample = what;
}

std::string show(const matrix& M) {
  std::string out = "[";
  for (std::size_t i = 0; i < M.rows(); ++i) {
    out += i == 0 ? "[" : " [";
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (j) out += ", ";
      out += M.at(i, j).render();
    }
    out += "]";
  }
  return out + "]";
}

identity_check item_appendix_a(std::size_t n) {
  identity_check row = check_e12_product(2);
  if (n >= 3 && row.pass) {
    const identity_check padded = check_e12_product(n);
    if (!padded.pass) return padded;
    row.n = n;
  }
  const field_spec field = field_spec::rationals();
  const word w = word_id_pm_U_E12_char0(field, 2, +1);
  const matrix I = matrix::identity(field, 2);
  const scalar half = scalar::of_fraction(field, 1, 2);
  std::vector<matrix> C;
  for (std::size_t i = 0; i < 16; ++i) C.push_back(half * (w.factor(i) + I));
  const auto scaled_id = [&](long long num, long long den) {
    return scalar::of_fraction(field, num, den) * I;
  };
  const struct {
    std::size_t i, j;  // 1-based pair
    long long num, den;
  } pair_checks[] = {{1, 2, 13, 16},  {11, 12, 13, 16}, {3, 4, 1, 4},
                     {5, 6, 1, 4},    {13, 14, 1, 4},   {15, 16, 1, 4},
                     {7, 8, 1, 1},    {9, 10, 1, 1}};
  for (const auto& c : pair_checks) {
    if (C[c.i - 1] * C[c.j - 1] != scaled_id(c.num, c.den)) {
      record_failure(row, "C_" + std::to_string(c.i) + "·C_" +
                              std::to_string(c.j) + " is not " +
                              std::to_string(c.num) + "/" +
                              std::to_string(c.den) + "·I");
    }
  }
  matrix prod = I;
  for (const matrix& Ci : C) prod = prod * Ci;
  if (prod != scaled_id(169, 65536)) {
    record_failure(row, "C_1···C_16 is not 169/65536·I");
  }
  return row;
}

identity_check item_appendix_b(field_spec field) {
  const std::size_t n = 2;
  identity_check row{"appendix-b", field, n, true, ""};
  const auto of = [&](long long num, long long den) {
    return scalar::of_fraction(field, num, den);
  };
  // Basis E_21 + I/2, E_12, I + E_12, E_11 − E_22 as coordinate columns.
  matrix C(field, 4, 4);
  const long long cols[4][4] = {
      {1, 0, 2, 1}, {0, 2, 0, 0}, {2, 2, 0, 2}, {2, 0, 0, -2}};
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) C.set(i, j, of(cols[j][i], 2));
  }
  const matrix C_inv = inverse(C);
  const matrix I4 = matrix::identity(field, 4);
  const auto unit = [&](std::size_t i, std::size_t j) {
    return matrix::unit(field, n, i, j);
  };
  const matrix I2 = matrix::identity(field, n);
  struct basis_term {
    std::size_t i, j;  // 1-based ε position
    long long num, den;
  };
  struct identity_case {
    const char* name;
    matrix R;                       // conjugate by op_L(I + R); R = 0 → none
    matrix N;                       // inner factor id + t·op_U(N)
    std::vector<basis_term> terms;  // coefficients of t
  };
  const std::vector<identity_case> cases = {
      {"u_{E12}(t)", matrix(field, n, n), unit(0, 1), {{2, 1, 1, 1}}},
      {"g_{E12} u_{E21}(t) g^{-1}", unit(0, 1), unit(1, 0), {{1, 2, 1, 1}}},
      {"g_{R+} u_{E21}(t) g^{-1}",
       matrix::of_ints(field, {{1, 1}, {-1, -1}}),
       unit(1, 0),
       {{1, 2, 1, 2}, {1, 3, -1, 2}, {1, 4, 1, 1}}},
      {"g_{R-} u_{E21}(t) g^{-1}",
       matrix::of_ints(field, {{-1, 1}, {-1, 1}}),
       unit(1, 0),
       {{1, 2, 1, 2}, {1, 3, -1, 2}, {1, 4, -1, 1}}},
      {"g_{2E21} u_{E12}(t) g^{-1}",
       matrix::of_ints(field, {{0, 0}, {2, 0}}),
       unit(0, 1),
       {{3, 2, 2, 1}}},
      {"g_R u_S(t) g_R^{-1}",
       matrix::of_ints(field, {{-2, -1}, {4, 2}}),
       matrix::of_ints(field, {{-1, -1}, {1, 1}}),
       {{1, 2, -1, 1}, {3, 2, 1, 1}, {4, 2, 1, 1}}},
  };
  sampler rng(field, item_seed("appendix-b", field, n));
  for (const auto& c : cases) {
    const matrix G = op_L(I2 + c.R);
    const matrix G_inv = inverse(G);
    const matrix U = op_U(c.N);
    for (std::size_t k = 0; k < 10; ++k) {
      const scalar t = rng.pick();
      const matrix lhs = G * (I4 + t * U) * G_inv;
      matrix combo(field, 4, 4);
      for (const auto& term : c.terms) {
        combo.set(term.i - 1, term.j - 1, t * of(term.num, term.den));
      }
      const matrix rhs = C * (I4 + combo) * C_inv;
      if (lhs != rhs) {
        record_failure(row, std::string(c.name) + " fails at t = " + t.render());
      }
    }
  }
  return row;
}

identity_check item_l_split(field_spec field, std::size_t n) {
  identity_check row{"l-split", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  const scalar two = scalar::of_int(field, 2);
  const scalar four = scalar::of_int(field, 4);
  for (std::size_t k = 0; k < k_samples; ++k) {
    const matrix A = rng.pick_matrix(n, n);
    const matrix B = rng.pick_matrix(n, n);
    const matrix LA = op_L(A), LB = op_L(B);
    if (two * LA !=
        op_assoc_mult(A, mult_side::left) + op_assoc_mult(A, mult_side::right)) {
      record_failure(row, "2·op_L(A) split fails for A = " + show(A));
    }
    const matrix comm = A * B - B * A;
    if (four * (LA * LB - LB * LA) !=
        op_assoc_mult(comm, mult_side::left) -
            op_assoc_mult(comm, mult_side::right)) {
      record_failure(row, "4[op_L(A), op_L(B)] split fails for A = " + show(A) +
                              ", B = " + show(B));
    }
  }
  return row;
}

identity_check item_quadratic_nilpotent(field_spec field, std::size_t n) {
  identity_check row{"quadratic-nilpotent", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  const scalar half = scalar::of_fraction(field, 1, 2);
  for (std::size_t k = 0; k < k_samples; ++k) {
    const matrix N = rng.pick_rank_one_square_zero(n);
    const matrix UN = op_U(N);
    if (op_L(N) * op_L(N) != half * UN) {
      record_failure(row, "op_L(N)² != op_U(N)/2 for N = " + show(N));
    }
    const matrix X = rng.pick_matrix(n, n);
    if (apply_op(UN, X) != trace_pairing(N, X) * N) {
      record_failure(row, "op_U(N)X != Tr(NX)·N for N = " + show(N));
    }
    if (rank(UN) != 1) {
      record_failure(row, "op_U(N) rank is not 1 for N = " + show(N));
    }
    if (!(UN * UN).is_zero()) {
      record_failure(row, "op_U(N)² != 0 for N = " + show(N));
    }
  }
  return row;
}

identity_check item_conjugation_covariance(field_spec field, std::size_t n) {
  identity_check row{"conjugation-covariance", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  for (std::size_t k = 0; k < k_samples; ++k) {
    const matrix S = rng.pick_invertible(n);
    const matrix A = rng.pick_matrix(n, n);
    const matrix S_inv = inverse(S);
    const matrix phi = conj_operator(S);
    const matrix phi_inv = conj_operator(S_inv);
    const matrix conjA = S * A * S_inv;
    if (phi * op_L(A) * phi_inv != op_L(conjA)) {
      record_failure(row, "op_L conjugation fails for S = " + show(S) +
                              ", A = " + show(A));
    }
    if (phi * op_U(A) * phi_inv != op_U(conjA)) {
      record_failure(row, "op_U conjugation fails for S = " + show(S) +
                              ", A = " + show(A));
    }
  }
  return row;
}

identity_check item_g_inverse(field_spec field, std::size_t n) {
  identity_check row{"g-inverse", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  const matrix I = matrix::identity(field, n);
  const matrix Id = matrix::identity(field, n * n);
  for (std::size_t k = 0; k < k_samples; ++k) {
    const matrix R = rng.pick_rank_one_square_zero(n);
    const matrix G = op_L(I + R);
    const matrix W = evaluate(word_g_inverse(R));
    if (W * G != Id || G * W != Id) {
      record_failure(row, "g-inverse word fails for R = " + show(R));
    }
  }
  return row;
}

identity_check item_four_factor(field_spec field, std::size_t n) {
  identity_check row{"four-factor", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  const auto of = [&](long long v) { return scalar::of_int(field, v); };
  const scalar one = of(1);
  // {0, 2, −2, −4} covers all of F_3, so there every sigma must be rejected.
  if (field.characteristic() == 3) {
    for (long long s = 0; s < 3; ++s) {
      try {
        scalar_four_factors(of(s));
        record_failure(row, "sigma = " + std::to_string(s) +
                                " accepted despite being exceptional");
      } catch (const error& e) {
        if (e.code() != errc::exceptional_parameter) {
          record_failure(row, std::string("wrong rejection: ") + e.what());
        }
      }
    }
    return row;
  }
  for (std::size_t k = 0; k < k_samples; ++k) {
    scalar sigma = rng.pick();
    while (sigma.is_zero() || sigma == of(2) || sigma == of(-2) ||
           sigma == of(-4)) {
      sigma = rng.pick();
    }
    const auto v = scalar_four_factors(sigma);
    scalar prod = one, shifted = one;
    bool unit_ok = true;
    for (const scalar& vj : v) {
      prod = prod * vj;
      shifted = shifted * (vj + one);
      if (vj.is_zero() || (vj + one).is_zero()) unit_ok = false;
    }
    if (!prod.is_one() || shifted != sigma || !unit_ok) {
      record_failure(row, "four-factor data fails at sigma = " + sigma.render());
    }
  }
  return row;
}

identity_check item_det_formula(field_spec field, std::size_t n) {
  identity_check row{"det-formula", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  for (std::size_t k = 0; k < k_samples; ++k) {
    matrix A(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool fill = k % 2 == 0 ? j >= i : j <= i;
        if (fill) A.set(i, j, rng.pick());
      }
    }
    if (det_L_formula(A) != determinant(op_L(A))) {
      record_failure(row, "product formula differs for A = " + show(A));
    }
  }
  return row;
}

identity_check item_u_inverse(field_spec field, std::size_t n) {
  identity_check row{"u-inverse", field, n, true, ""};
  sampler rng(field, item_seed(row.id, field, n));
  const matrix Id = matrix::identity(field, n * n);
  for (std::size_t k = 0; k < k_samples; ++k) {
    const matrix N = rng.pick_rank_one_square_zero(n);
    const scalar t = rng.pick();
    const matrix U = op_U(N);
    if ((Id + t * U) * (Id - t * U) != Id) {
      record_failure(row, "u_N(t)·u_N(−t) != id for N = " + show(N) +
                              ", t = " + t.render());
    }
  }
  return row;
}

identity_check run_item(const std::string& id, field_spec field,
                        std::size_t n) {
  if (id == "appendix-a") return item_appendix_a(n);
  if (id == "appendix-b") return item_appendix_b(field);
  if (id == "l-split") return item_l_split(field, n);
  if (id == "quadratic-nilpotent") return item_quadratic_nilpotent(field, n);
  if (id == "conjugation-covariance") {
    return item_conjugation_covariance(field, n);
  }
  if (id == "g-inverse") return item_g_inverse(field, n);
  if (id == "four-factor") return item_four_factor(field, n);
  if (id == "det-formula") return item_det_formula(field, n);
  if (id == "u-inverse") return item_u_inverse(field, n);
  fail(errc::unknown_identity, id);
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "appendix-a",   "appendix-b", "l-split",
      "quadratic-nilpotent",        "conjugation-covariance",
      "g-inverse",    "four-factor", "det-formula",
      "u-inverse"};
  return ids;
}

identity_check check_e12_product(std::size_t n,
                                 const std::vector<matrix>* factors) {
  const field_spec field = field_spec::rationals();
  word w(field, n);
  if (factors) {
    for (const matrix& f : *factors) w.append(f);
  } else {
    w = word_id_pm_U_E12_char0(field, n, +1);
  }
  const matrix target = matrix::identity(field, n * n) +
                        op_U(matrix::unit(field, n, 0, 1));
  identity_check row{"appendix-a", field, n, evaluate(w) == target, ""};
  if (!row.pass) {
    row.counterexample =
        "factor product differs from id + op_U(E_12) at n = " +
        std::to_string(n);
  }
  return row;
}

std::vector<identity_check> check_identities(const std::string& which,
                                             field_spec field, std::size_t n) {
  if (n < 2) n = 2;
  std::vector<identity_check> rows;
  if (which == "all") {
    for (const std::string& id : identity_ids()) {
      rows.push_back(run_item(id, field, n));
    }
    return rows;
  }
  rows.push_back(run_item(which, field, n));
  return rows;
}

}  // namespace jmw
