#include "jmw/factor.hpp"

#include <cstdint>
#include <queue>

#include "jmw/operators.hpp"

namespace jmw {

namespace {

scalar pivot_shift(const matrix& M, std::size_t k, std::size_t r) {
  const field_spec field = M.field();
  if (field.is_rational()) {
    for (long long step = 1;; ++step) {
      for (const long long t : {step, -step}) {
        const scalar c = scalar::of_int(field, t);
        if (!(M.at(k, k) + c * M.at(r, k)).is_zero()) return c;
      }
    }
  }
  for (std::uint64_t t = 1; t < field.characteristic(); ++t) {
    const scalar c = scalar::of_int(field, static_cast<long long>(t));
    if (!(M.at(k, k) + c * M.at(r, k)).is_zero()) return c;
  }
  fail(errc::not_sl, "no pivot shift exists");
}

void add_row(matrix& M, std::size_t dst, std::size_t src, const scalar& c) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    M.set(dst, j, M.at(dst, j) + c * M.at(src, j));
  }
}

void add_col(matrix& M, std::size_t dst, std::size_t src, const scalar& c) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    M.set(i, dst, M.at(i, dst) + c * M.at(i, src));
  }
}

}  // namespace

sl_decomposition sl_decompose(const matrix& G) {
  const field_spec field = G.field();
  const std::size_t d = G.rows();
  if (G.cols() != d) fail(errc::dimension_mismatch, "need a square matrix");
  if (determinant(G) != scalar::one(field)) {
    fail(errc::not_sl, "determinant must be 1");
  }
  matrix M = G;
  sl_decomposition out;
  std::vector<transvection_spec> post_rev;
  for (std::size_t k = 0; k < d; ++k) {
    if (M.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (M.at(r, k).is_zero()) ++r;
      const scalar t = pivot_shift(M, k, r);
      add_row(M, k, r, t);
      out.pre_specs.push_back({k, r, -t});
    }
    for (std::size_t r = k + 1; r < d; ++r) {
      if (M.at(r, k).is_zero()) continue;
      const scalar c = M.at(r, k) / M.at(k, k);
      add_row(M, r, k, -c);
      out.pre_specs.push_back({r, k, c});
    }
    for (std::size_t s = k + 1; s < d; ++s) {
      if (M.at(k, s).is_zero()) continue;
      const scalar c = M.at(k, s) / M.at(k, k);
      add_col(M, s, k, -c);
      post_rev.push_back({k, s, c});
    }
    out.diagonal.push_back(M.at(k, k));
  }
  out.post_specs.assign(post_rev.rbegin(), post_rev.rend());
  return out;
}

namespace {

void append_tau(word& w, std::size_t n, const transvection_spec& s) {
  if (s.t.is_zero()) return;
  w.append_word(word_standard_tau(w.field(), n, s.target / n, s.target % n,
                                  s.source / n, s.source % n, s.t));
}

}  // namespace

word word_for_sl(const matrix& G) {
  const field_spec field = G.field();
  const std::size_t n = operator_side(G);
  const sl_decomposition dec = sl_decompose(G);
  const scalar one = scalar::one(field);
  word w(field, n);
  for (const auto& s : dec.pre_specs) append_tau(w, n, s);
  scalar pi = one;
  for (std::size_t i = 0; i + 1 < dec.diagonal.size(); ++i) {
    pi = pi * dec.diagonal[i];
    if (pi == one) continue;
    // H(a) = x_{i,i+1}(a−1)·x_{i+1,i}(1)·x_{i,i+1}(a⁻¹−1)·x_{i+1,i}(−a)
    // scales coordinate i by a and coordinate i+1 by a⁻¹.
    append_tau(w, n, {i, i + 1, pi - one});
    append_tau(w, n, {i + 1, i, one});
    append_tau(w, n, {i, i + 1, pi.inverse() - one});
    append_tau(w, n, {i + 1, i, -pi});
  }
  for (const auto& s : dec.post_specs) append_tau(w, n, s);
  return w;
}

namespace {

bool exceptional_u(const scalar& u) {
  const field_spec field = u.field();
  const auto of = [&](long long v) { return scalar::of_int(field, v); };
  if (u.is_zero() || u == of(-1)) return true;
  const scalar sigma = of(64) * u / ((u + of(1)) * (u + of(1)));
  return sigma == of(2) || sigma == of(-2) || sigma == of(-4);
}

matrix diag_first(field_spec field, std::size_t n, const scalar& x) {
  matrix D = matrix::identity(field, n);
  D.set(0, 0, x);
  return D;
}

}  // namespace

word word_m_u_inverse(const scalar& u, std::size_t n) {
  const field_spec field = u.field();
  if (exceptional_u(u)) {
    fail(errc::exceptional_parameter,
         "u in {0, -1} or 64u/(u+1)^2 in {2, -2, -4}");
  }
  const scalar of64 = scalar::of_int(field, 64);
  const scalar one = scalar::one(field);
  const scalar sigma = of64 * u / ((u + one) * (u + one));
  const auto v = scalar_four_factors(sigma);
  word w(field, n);
  w.append(diag_first(field, n, u.inverse()));
  for (const scalar& vj : v) w.append(diag_first(field, n, vj));
  return w;
}

word det_match_word(const scalar& gamma, std::size_t n) {
  const field_spec field = gamma.field();
  if (gamma.is_zero()) {
    fail(errc::zero_determinant, "no word has determinant 0");
  }
  const scalar one = scalar::one(field);
  word w(field, n);
  if (gamma == one) return w;
  const long long r = 2 * static_cast<long long>(n) - 2;
  if (field.is_rational()) {
    for (long long yi = 2;; ++yi) {
      const scalar y = scalar::of_int(field, yi);
      const scalar yr = y.pow(r);
      if (yr == gamma || yr * y == gamma) continue;
      const scalar x = gamma / yr;
      const scalar b = (y - one) / (x - y);
      const scalar a = x * b;
      if (exceptional_u(a) || exceptional_u(b)) continue;
      w.append(diag_first(field, n, a));
      w.append_word(word_m_u_inverse(b, n));
      return w;
    }
  }
  const std::uint64_t p = field.characteristic();
  std::vector<std::pair<std::uint64_t, matrix>> gens;
  for (std::uint64_t t = 1; t + 1 < p; ++t) {
    const scalar ts = scalar::of_int(field, static_cast<long long>(t));
    const scalar val = ts * ((ts + one) * scalar::of_fraction(field, 1, 2)).pow(r);
    if (val.is_one()) continue;
    gens.emplace_back(val.residue(), diag_first(field, n, ts));
  }
  if (p == 3) {
    matrix B = matrix::identity(field, n);
    B.set(0, 0, scalar::zero(field));
    B.set(0, 1, one);
    B.set(1, 0, one);
    gens.emplace_back(2, B);
  }
  // BFS over F_p^× from 1: each edge multiplies by a generator value and
  // contributes that generator's single factor.
  std::vector<std::size_t> prev_state(p, p), prev_gen(p, p);
  std::queue<std::uint64_t> queue;
  prev_state[1] = 1;
  queue.push(1);
  while (!queue.empty() && prev_state[gamma.residue()] == p) {
    const std::uint64_t s = queue.front();
    queue.pop();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::uint64_t next =
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(s) * gens[g].first) % p);
      if (prev_state[next] != p) continue;
      prev_state[next] = s;
      prev_gen[next] = g;
      queue.push(next);
    }
  }
  if (prev_state[gamma.residue()] == p) {
    fail(errc::inconsistent, "determinant value not reachable");
  }
  for (std::uint64_t s = gamma.residue(); s != 1; s = prev_state[s]) {
    w.append(gens[prev_gen[s]].second);
  }
  return w;
}

word word_for_gl(const matrix& G) {
  const std::size_t n = operator_side(G);
  const scalar det = determinant(G);
  if (det.is_zero()) fail(errc::singular, "operator must be invertible");
  word w = det_match_word(det, n);
  const matrix rest = inverse(evaluate(w)) * G;
  w.append_word(word_for_sl(rest));
  return w;
}

word_cache::entry word_cache::get_or_build(
    const std::string& key, const std::function<entry()>& build) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) it = map_.emplace(key, build()).first;
  return it->second;
}

namespace {

// Word and exact value of E = diag(I_{d−1}, 0) in coordinates: conjugate the
// corank-one operator op_L(diag(0,1,…,1)) into rank normal form.
word_cache::entry corank_one_idempotent(field_spec field, std::size_t n,
                                        word_cache& cache) {
  const std::string key = "E/" + field.name() + "/" + std::to_string(n);
  return cache.get_or_build(key, [&]() {
    matrix A = matrix::identity(field, n);
    A.set(0, 0, scalar::zero(field));
    const rank_decomposition rd = rank_normal_form(op_L(A));
    word w(field, n);
    w.append_word(word_for_gl(inverse(rd.U)));
    w.append(A);
    w.append_word(word_for_gl(inverse(rd.W)));
    return word_cache::entry{w, std::make_shared<const matrix>(evaluate(w))};
  });
}

// Word and value of the idempotent killing coordinate k: conjugate E by the
// operator swapping coordinates k and d−1.
word_cache::entry coordinate_killer(field_spec field, std::size_t n,
                                    std::size_t k, word_cache& cache) {
  const std::string key =
      "Ek/" + field.name() + "/" + std::to_string(n) + "/" + std::to_string(k);
  return cache.get_or_build(key, [&]() {
    const word_cache::entry e = corank_one_idempotent(field, n, cache);
    const std::size_t d = n * n;
    if (k + 1 == d) return e;
    matrix P = matrix::identity(field, d);
    const scalar zero = scalar::zero(field);
    const scalar one = scalar::one(field);
    P.set(k, k, zero);
    P.set(d - 1, d - 1, zero);
    P.set(k, d - 1, one);
    P.set(d - 1, k, one);
    const word swap_word = word_for_gl(P);
    const matrix swap_value = evaluate(swap_word);
    word w = swap_word;
    w.append_word(e.w);
    w.append_word(swap_word);
    return word_cache::entry{
        w, std::make_shared<const matrix>(swap_value * *e.value * swap_value)};
  });
}

struct singular_parts {
  word head;                              // word_for_gl(U)
  matrix head_value;                      // evaluate(head)
  std::vector<word_cache::entry> killers; // idempotents for k = r..d−1
  word tail;                              // word_for_gl(W)
  matrix tail_value;                      // evaluate(tail)
};

singular_parts build_singular(const matrix& T, word_cache& cache) {
  const field_spec field = T.field();
  const std::size_t n = operator_side(T);
  const std::size_t d = T.rows();
  const rank_decomposition rd = rank_normal_form(T);
  if (rd.r == d) fail(errc::not_singular, "operator is invertible");
  singular_parts parts{word(field, n), matrix(field, d, d), {},
                       word(field, n), matrix(field, d, d)};
  parts.head = word_for_gl(rd.U);
  parts.head_value = evaluate(parts.head);
  for (std::size_t k = rd.r; k < d; ++k) {
    parts.killers.push_back(coordinate_killer(field, n, k, cache));
  }
  parts.tail = word_for_gl(rd.W);
  parts.tail_value = evaluate(parts.tail);
  return parts;
}

word assemble(const singular_parts& parts) {
  word w = parts.head;
  for (const auto& e : parts.killers) w.append_word(e.w);
  w.append_word(parts.tail);
  return w;
}

// op_L preimage if T is a single Jordan multiplication; L_A(I) = A.
bool single_factor(const matrix& T, matrix& A) {
  const std::size_t n = operator_side(T);
  A = unvec(T * vec(matrix::identity(T.field(), n)), n);
  return op_L(A) == T;
}

}  // namespace

word word_for_singular(const matrix& T, word_cache* cache) {
  const std::size_t n = operator_side(T);
  if (!determinant(T).is_zero()) {
    fail(errc::not_singular, "operator is invertible");
  }
  matrix A(T.field(), n, n);
  if (single_factor(T, A)) {
    word w(T.field(), n);
    w.append(A);
    return w;
  }
  word_cache local;
  return assemble(build_singular(T, cache ? *cache : local));
}

factorization_report factorize(const matrix& T, word_cache* cache) {
  const std::size_t n = operator_side(T);
  const field_spec field = T.field();
  if (n == 1) {
    word w(field, 1);
    w.append(T);
    return verify(w, T);
  }
  if (T.is_identity()) return verify(word(field, n), T);
  matrix A(field, n, n);
  if (single_factor(T, A)) {
    word w(field, n);
    w.append(A);
    return verify(w, T);
  }
  if (!determinant(T).is_zero()) return verify(word_for_gl(T), T);
  // Singular route: the word is verified blockwise against the exact cached
  // idempotent values, which multiply to the evaluation by associativity.
  word_cache local;
  const singular_parts parts = build_singular(T, cache ? *cache : local);
  matrix value = parts.head_value;
  for (const auto& e : parts.killers) value = value * *e.value;
  value = value * parts.tail_value;
  const word w = assemble(parts);
  return factorization_report{w, T, value == T, w.length()};
}

}  // namespace jmw
