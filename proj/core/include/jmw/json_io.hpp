#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jmw/analysis.hpp"
#include "jmw/words.hpp"

namespace jmw {

// Matrix JSON: {"field", "rows", "cols", "entries": [[rendered scalars]]};
// operator JSON adds "n" with rows = cols = n². Keys are emitted sorted, so
// serialization is canonical.
std::string matrix_to_json(const matrix& M);
std::string operator_to_json(const matrix& T);
matrix matrix_from_json(const std::string& text);

// Word JSON: {"field", "n", "convention": "apply-last-first", "factors"}.
std::string word_to_json(const word& w);
word word_from_json(const std::string& text);

// {"verified", "length", "word", "target_hash"}.
std::string report_to_json(const factorization_report& r);

std::string identity_report_to_json(const std::vector<identity_check>& rows);
std::string subgroup_survey_to_json(const subgroup_survey& s);
std::string sigma_rows_to_json(const std::vector<sigma_value>& rows);

const char* sigma_class_name(sigma_class c);

std::uint64_t fnv1a64(const std::string& text);

// 16-hex FNV-1a digest of the canonical operator serialization.
std::string target_hash(const matrix& T);

}  // namespace jmw
