#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "jmw/words.hpp"

namespace jmw {

// 2^{−n²}·∏_{i,j}(λ_i+λ_j) over the diagonal entries λ of a triangular A;
// equals det(op_L(A)).
scalar det_L_formula(const matrix& A);

// Multiplicative characters of F_p^×: χ_j(g^a) = e^{2πi·ja/(p−1)} for the
// smallest generator g, extended by χ_j(0) = 0.
struct character_table {
  std::uint64_t p;
  std::uint64_t generator;
  std::size_t order;               // p − 1
  std::vector<std::size_t> log;    // log[g^a mod p] = a for a in [0, p−2]

  std::complex<double> chi(std::size_t j, std::uint64_t x) const;
};

character_table make_character_table(std::uint64_t p);

enum class sigma_class { trivial_power, inverse_case, jacobi_case };

struct sigma_value {
  std::uint64_t p;
  long long m;
  std::size_t j;
  std::complex<double> value;
  sigma_class classification;
};

// Σ = Σ_{t∈F_p} χ_j(t)·χ_j^m(t+1) by direct summation; classification by
// triviality of χ^m (TrivialPower) and χ^{m+1} (InverseCase).
sigma_value jacobi_sigma(std::uint64_t p, long long m, std::size_t j);

// The subgroup of F_p^× generated by the determinant values
// t((t+1)/2)^{2n−2} (t ≠ 0, −1), plus the det-2 block element for p = 3,
// with a realizing word for every member.
struct subgroup_survey {
  std::uint64_t p;
  std::size_t n;
  std::size_t order;
  bool full_group;
  std::vector<std::uint64_t> elements;  // sorted subgroup members
  std::vector<word> words;              // words[i] evaluates with det elements[i]
};

subgroup_survey delta_survey(std::uint64_t p, std::size_t n);

struct identity_check {
  std::string id;
  field_spec field;
  std::size_t n;
  bool pass;
  std::string counterexample;  // empty when pass
};

// Registered identity ids, in suite order; "all" runs the whole list.
const std::vector<std::string>& identity_ids();

// Product of the explicit sixteen-factor (n = 2) or padded twenty-factor
// (n ≥ 3) word against id + op_U(E_12); a substituted factor list exercises
// the failure path.
identity_check check_e12_product(std::size_t n,
                                 const std::vector<matrix>* factors = nullptr);

std::vector<identity_check> check_identities(const std::string& which,
                                             field_spec field, std::size_t n);

}  // namespace jmw
