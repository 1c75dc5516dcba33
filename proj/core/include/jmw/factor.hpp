#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jmw/transvect.hpp"
#include "jmw/words.hpp"

namespace jmw {

// G = (∏ pre_specs) · diag(diagonal) · (∏ post_specs), specs as elementary
// matrices I + t·e_{target,source}; the diagonal entries multiply to 1.
struct sl_decomposition {
  std::vector<transvection_spec> pre_specs;
  std::vector<scalar> diagonal;
  std::vector<transvection_spec> post_specs;
};

sl_decomposition sl_decompose(const matrix& G);

// Word evaluating exactly to G for det(G) = 1, d = n² coordinates.
word word_for_sl(const matrix& G);

// 5-factor word evaluating to the inverse of op_L(diag(u,1,…,1)).
word word_m_u_inverse(const scalar& u, std::size_t n);

// Word whose evaluation is invertible with determinant exactly gamma.
word det_match_word(const scalar& gamma, std::size_t n);

// Memo for the idempotent words used by the singular route, keyed per
// field, n and killed coordinate. Each cached word carries its exact
// evaluated operator value; entries are built once under the lock.
class word_cache {
 public:
  struct entry {
    word w;
    std::shared_ptr<const matrix> value;
  };

  entry get_or_build(const std::string& key,
                     const std::function<entry()>& build);

 private:
  std::recursive_mutex mu_;
  std::map<std::string, entry> map_;
};

// Word evaluating exactly to invertible G.
word word_for_gl(const matrix& G);

// Word evaluating exactly to T of rank < d.
word word_for_singular(const matrix& T, word_cache* cache = nullptr);

// Full pipeline with mandatory exact verification.
factorization_report factorize(const matrix& T, word_cache* cache = nullptr);

}  // namespace jmw
