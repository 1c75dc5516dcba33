#include "jmw/words.hpp"

#include <unordered_map>

namespace jmw {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

// Exact left multiplication of a column-major d×d residue accumulator by
// op_L(A), column by column: each column is a row-major n×n matrix X, and
// op_L(A)·vec(X) = vec((AX + XA)/2).
void apply_factor_mod(std::vector<std::uint64_t>& acc, const matrix& A,
                      std::size_t n, std::uint64_t p, std::uint64_t inv2) {
  const std::size_t d = n * n;
  const std::vector<std::uint64_t>& a = A.residue_data();
  std::vector<std::uint64_t> y(d);
  // 2n products of residues < p accumulate without overflow for p < 2^60.
  const bool narrow = p < (std::uint64_t{1} << 60);
  for (std::size_t c = 0; c < d; ++c) {
    std::uint64_t* x = acc.data() + c * d;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        unsigned __int128 s = 0;
        if (narrow) {
          for (std::size_t k = 0; k < n; ++k) {
            s += static_cast<unsigned __int128>(a[i * n + k]) * x[k * n + j];
            s += static_cast<unsigned __int128>(x[i * n + k]) * a[k * n + j];
          }
        } else {
          for (std::size_t k = 0; k < n; ++k) {
            s += mulmod64(a[i * n + k], x[k * n + j], p);
            s += mulmod64(x[i * n + k], a[k * n + j], p);
          }
        }
        y[i * n + j] =
            mulmod64(static_cast<std::uint64_t>(s % p), inv2, p);
      }
    }
    for (std::size_t e = 0; e < d; ++e) x[e] = y[e];
  }
}

matrix evaluate_mod(const word& w) {
  const std::size_t n = w.n();
  const std::size_t d = n * n;
  const std::uint64_t p = w.field().characteristic();
  const std::uint64_t inv2 = (p + 1) / 2;
  std::vector<std::uint64_t> acc(d * d, 0);
  for (std::size_t c = 0; c < d; ++c) acc[c * d + c] = 1;
  for (std::size_t idx = w.length(); idx-- > 0;) {
    apply_factor_mod(acc, w.factor(idx), n, p, inv2);
  }
  matrix out(w.field(), d, d);
  std::vector<std::uint64_t>& flat = out.residue_data();
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) flat[r * d + c] = acc[c * d + r];
  }
  return out;
}

// Factor with the common denominator pulled out: A = num / den entrywise.
struct integer_factor {
  std::vector<mpz_class> num;
  mpz_class den;
};

integer_factor integerize(const matrix& A) {
  const std::vector<mpq_class>& rat = A.rational_data();
  integer_factor f;
  f.den = 1;
  for (const mpq_class& q : rat) {
    mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  f.num.reserve(rat.size());
  mpz_class scale;
  for (const mpq_class& q : rat) {
    mpz_divexact(scale.get_mpz_t(), f.den.get_mpz_t(),
                 q.get_den().get_mpz_t());
    f.num.emplace_back(q.get_num() * scale);
  }
  return f;
}

matrix evaluate_rational(const word& w) {
  const std::size_t n = w.n();
  const std::size_t d = n * n;
  // Column-major integer accumulator over a single shared denominator.
  std::vector<mpz_class> acc(d * d, mpz_class(0));
  for (std::size_t c = 0; c < d; ++c) acc[c * d + c] = 1;
  mpz_class den = 1;
  std::vector<mpz_class> y(d);
  std::unordered_map<const matrix*, integer_factor> factors;
  mpz_class g;
  for (std::size_t idx = w.length(); idx-- > 0;) {
    const matrix& A = w.factor(idx);
    auto it = factors.find(&A);
    if (it == factors.end()) it = factors.emplace(&A, integerize(A)).first;
    const integer_factor& f = it->second;
    for (std::size_t c = 0; c < d; ++c) {
      mpz_class* x = acc.data() + c * d;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          mpz_class& s = y[i * n + j];
          s = 0;
          for (std::size_t k = 0; k < n; ++k) {
            s += f.num[i * n + k] * x[k * n + j];
            s += x[i * n + k] * f.num[k * n + j];
          }
        }
      }
      for (std::size_t e = 0; e < d; ++e) mpz_swap(x[e].get_mpz_t(), y[e].get_mpz_t());
    }
    den *= f.den;
    den *= 2;
    g = den;
    for (const mpz_class& e : acc) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g > 1) {
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
      for (mpz_class& e : acc) {
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
  matrix out(w.field(), d, d);
  std::vector<mpq_class>& flat = out.rational_data();
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) {
      mpq_class q(acc[c * d + r], den);
      q.canonicalize();
      flat[r * d + c] = q;
    }
  }
  return out;
}

}  // namespace

void word::append(const matrix& A) {
  append(std::make_shared<const matrix>(A));
}

void word::append(factor_ptr A) {
  if (A->field() != field_) fail(errc::field_mismatch, "factor field differs");
  if (A->rows() != n_ || A->cols() != n_) {
    fail(errc::dimension_mismatch, "factor is not n×n");
  }
  factors_.push_back(std::move(A));
}

void word::append_word(const word& w) {
  if (w.field_ != field_) fail(errc::field_mismatch, "word field differs");
  if (w.n_ != n_) fail(errc::dimension_mismatch, "word size differs");
  factors_.insert(factors_.end(), w.factors_.begin(), w.factors_.end());
}

word word_of_factors(field_spec field, std::size_t n,
                     std::initializer_list<matrix> factors) {
  word w(field, n);
  for (const matrix& A : factors) w.append(A);
  return w;
}

word concat(const word& w1, const word& w2) {
  word out = w1;
  out.append_word(w2);
  return out;
}

word repeat(const word& w, std::size_t r) {
  word out(w.field(), w.n());
  for (std::size_t i = 0; i < r; ++i) out.append_word(w);
  return out;
}

matrix evaluate(const word& w) {
  return w.field().is_prime() ? evaluate_mod(w) : evaluate_rational(w);
}

factorization_report verify(const word& w, const matrix& target) {
  if (target.field() != w.field()) {
    fail(errc::field_mismatch, "target field differs from word field");
  }
  const std::size_t d = w.n() * w.n();
  if (target.rows() != d || target.cols() != d) {
    fail(errc::dimension_mismatch, "target is not n²×n²");
  }
  const matrix value = evaluate(w);
  return factorization_report{w, target, value == target, w.length()};
}

}  // namespace jmw
