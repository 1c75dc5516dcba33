#include "jmw/json_io.hpp"

#include <cinttypes>
#include <cstdio>

#include <json.hpp>

#include "jmw/operators.hpp"

namespace jmw {

namespace {

using nlohmann::json;

json matrix_json(const matrix& M) {
  json j;
  j["field"] = M.field().name();
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(M.at(i, k).render());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

matrix matrix_from(const json& j) {
  const field_spec field = field_spec::parse(j.at("field").get<std::string>());
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) {
    fail(errc::malformed_literal, "entries must hold one array per row");
  }
  if (j.contains("n")) {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n * n != rows) {
      fail(errc::malformed_literal, "operator side n disagrees with rows");
    }
  }
  matrix M(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      fail(errc::malformed_literal, "row length differs from cols");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      M.set(i, k, parse_scalar(field, row[k].get<std::string>()));
    }
  }
  return M;
}

json word_json(const word& w) {
  json j;
  j["field"] = w.field().name();
  j["n"] = w.n();
  j["convention"] = "apply-last-first";
  json factors = json::array();
  for (std::size_t k = 0; k < w.length(); ++k) {
    factors.push_back(matrix_json(w.factor(k)));
  }
  j["factors"] = std::move(factors);
  return j;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(errc::malformed_literal, e.what());
  }
}

}  // namespace

std::string matrix_to_json(const matrix& M) { return matrix_json(M).dump(); }

std::string operator_to_json(const matrix& T) {
  json j = matrix_json(T);
  j["n"] = operator_side(T);
  return j.dump();
}

matrix matrix_from_json(const std::string& text) {
  return guarded([&] { return matrix_from(json::parse(text)); });
}

std::string word_to_json(const word& w) { return word_json(w).dump(); }

word word_from_json(const std::string& text) {
  return guarded([&] {
    const json j = json::parse(text);
    const field_spec field = field_spec::parse(j.at("field").get<std::string>());
    const std::size_t n = j.at("n").get<std::size_t>();
    if (j.at("convention").get<std::string>() != "apply-last-first") {
      fail(errc::malformed_literal, "unknown word convention");
    }
    word w(field, n);
    for (const json& f : j.at("factors")) w.append(matrix_from(f));
    return w;
  });
}

std::string report_to_json(const factorization_report& r) {
  json j;
  j["verified"] = r.verified;
  j["length"] = r.length;
  j["word"] = word_json(r.w);
  j["target_hash"] = target_hash(r.target);
  return j.dump();
}

std::string identity_report_to_json(const std::vector<identity_check>& rows) {
  json arr = json::array();
  for (const identity_check& row : rows) {
    json j;
    j["identity"] = row.id;
    j["field"] = row.field.name();
    j["n"] = row.n;
    j["pass"] = row.pass;
    if (!row.pass) j["counterexample"] = row.counterexample;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

std::string subgroup_survey_to_json(const subgroup_survey& s) {
  json j;
  j["p"] = s.p;
  j["n"] = s.n;
  j["order"] = s.order;
  j["full_group"] = s.full_group;
  json elements = json::array();
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    json e;
    e["value"] = s.elements[i];
    e["word"] = word_json(s.words[i]);
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  return j.dump();
}

std::string sigma_rows_to_json(const std::vector<sigma_value>& rows) {
  json arr = json::array();
  for (const sigma_value& s : rows) {
    json j;
    j["p"] = s.p;
    j["m"] = s.m;
    j["j"] = s.j;
    j["re"] = s.value.real();
    j["im"] = s.value.imag();
    j["abs"] = std::abs(s.value);
    j["classification"] = sigma_class_name(s.classification);
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

const char* sigma_class_name(sigma_class c) {
  switch (c) {
    case sigma_class::trivial_power:
      return "TrivialPower";
    case sigma_class::inverse_case:
      return "InverseCase";
    case sigma_class::jacobi_case:
      return "JacobiCase";
  }
  return "JacobiCase";
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string target_hash(const matrix& T) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(operator_to_json(T)));
  return buf;
}

}  // namespace jmw
