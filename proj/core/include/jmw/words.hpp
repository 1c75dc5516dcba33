#pragma once

#include <initializer_list>
#include <memory>
#include <vector>

#include "jmw/operators.hpp"

namespace jmw {

// Ordered list of n×n factors A_0, …, A_{k−1} denoting the operator
// product op_L(A_0)·op_L(A_1)⋯op_L(A_{k−1}): the last factor applies first
// to arguments. Factors are shared, so concatenation is cheap.
class word {
 public:
  using factor_ptr = std::shared_ptr<const matrix>;

  word(field_spec field, std::size_t n) : field_(field), n_(n) {}

  field_spec field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t length() const noexcept { return factors_.size(); }
  const matrix& factor(std::size_t k) const { return *factors_[k]; }
  const std::vector<factor_ptr>& factors() const noexcept { return factors_; }

  void append(const matrix& A);
  void append(factor_ptr A);
  void append_word(const word& w);

 private:
  field_spec field_;
  std::size_t n_;
  std::vector<factor_ptr> factors_;
};

word word_of_factors(field_spec field, std::size_t n,
                     std::initializer_list<matrix> factors);

word concat(const word& w1, const word& w2);
word repeat(const word& w, std::size_t r);

// The d×d matrix (d = n²) of the denoted operator product. The empty word
// evaluates to the identity.
matrix evaluate(const word& w);

struct factorization_report {
  word w;
  matrix target;
  bool verified;
  std::size_t length;
};

// Exact entrywise comparison of evaluate(w) with target.
factorization_report verify(const word& w, const matrix& target);

}  // namespace jmw
