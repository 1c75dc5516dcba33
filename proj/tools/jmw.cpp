#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jmw/analysis.hpp"
#include "jmw/factor.hpp"
#include "jmw/json_io.hpp"
#include "jmw/operators.hpp"
#include "jmw/transvect.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text << "\n";
}

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& text,
                                                     std::size_t n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::runtime_error("expected 1-based indices as i,j: " + text);
  }
  const long i = std::stol(text.substr(0, comma));
  const long j = std::stol(text.substr(comma + 1));
  if (i < 1 || j < 1 || i > static_cast<long>(n) || j > static_cast<long>(n)) {
    throw std::runtime_error("indices must lie in 1.." + std::to_string(n));
  }
  return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
}

struct options {
  std::string field = "Q";
  std::size_t n = 2;
  std::string input;
  std::string output;
  std::string identity = "all";
  std::string target;
  std::string a, b;
  std::string t = "1";
  std::uint64_t p = 0;
  long long m = 2;
  bool stats = false;
  bool field_set = false;
  bool n_set = false;
};

int cmd_factorize(const options& opt) {
  const jmw::matrix T = jmw::matrix_from_json(read_file(opt.input));
  const std::size_t n = jmw::operator_side(T);
  if (opt.field_set && jmw::field_spec::parse(opt.field) != T.field()) {
    throw std::runtime_error("--field conflicts with the input file");
  }
  if (opt.n_set && opt.n != n) {
    throw std::runtime_error("--n conflicts with the input file");
  }
  const jmw::factorization_report report = jmw::factorize(T);
  write_output(opt.output, jmw::report_to_json(report));
  if (opt.stats) std::cerr << "length " << report.length << "\n";
  return report.verified ? 0 : 1;
}

int cmd_verify(const options& opt) {
  const jmw::word w = jmw::word_from_json(read_file(opt.input));
  const jmw::matrix T = jmw::matrix_from_json(read_file(opt.target));
  const jmw::factorization_report report = jmw::verify(w, T);
  write_output(opt.output, jmw::report_to_json(report));
  if (opt.stats) std::cerr << "length " << report.length << "\n";
  return report.verified ? 0 : 1;
}

int cmd_check(const options& opt) {
  const jmw::field_spec field = jmw::field_spec::parse(opt.field);
  const auto rows = jmw::check_identities(opt.identity, field, opt.n);
  bool all_pass = true;
  for (const jmw::identity_check& row : rows) {
    std::cout << row.id << "  field=" << row.field.name() << "  n=" << row.n
              << "  " << (row.pass ? "PASS" : "FAIL");
    if (!row.pass) std::cout << "  " << row.counterexample;
    std::cout << "\n";
    all_pass = all_pass && row.pass;
  }
  if (!opt.output.empty()) {
    write_output(opt.output, jmw::identity_report_to_json(rows));
  }
  return all_pass ? 0 : 1;
}

int cmd_survey_delta(const options& opt) {
  const jmw::subgroup_survey s = jmw::delta_survey(opt.p, opt.n);
  std::cout << "p=" << s.p << " n=" << s.n << " order=" << s.order
            << " full_group=" << (s.full_group ? "yes" : "no") << "\n";
  bool words_match = true;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const jmw::scalar det = jmw::determinant(jmw::evaluate(s.words[i]));
    const bool ok = det.residue() == s.elements[i];
    words_match = words_match && ok;
    std::cout << "  gamma=" << s.elements[i]
              << " word_length=" << s.words[i].length()
              << (ok ? "" : " DET-MISMATCH") << "\n";
  }
  if (!opt.output.empty()) {
    write_output(opt.output, jmw::subgroup_survey_to_json(s));
  }
  return s.full_group && words_match ? 0 : 1;
}

int cmd_survey_jacobi(const options& opt) {
  if (opt.p < 3) throw std::runtime_error("--p must be an odd prime");
  std::vector<jmw::sigma_value> rows;
  bool conclusion = true;
  for (std::size_t j = 1; j + 1 < opt.p; ++j) {
    rows.push_back(jmw::jacobi_sigma(opt.p, opt.m, j));
    const jmw::sigma_value& s = rows.back();
    const double mag = std::abs(s.value);
    const double expected =
        s.classification == jmw::sigma_class::jacobi_case
            ? std::sqrt(static_cast<double>(opt.p))
            : 1.0;
    const bool ok = std::abs(mag - expected) <= 1e-6 &&
                    (opt.p < 5 || mag < static_cast<double>(opt.p - 2));
    conclusion = conclusion && ok;
    std::cout << "j=" << s.j << " |Sigma|=" << mag << " "
              << jmw::sigma_class_name(s.classification)
              << (ok ? "" : " OUT-OF-TOLERANCE") << "\n";
  }
  if (!opt.output.empty()) {
    write_output(opt.output, jmw::sigma_rows_to_json(rows));
  }
  return conclusion ? 0 : 1;
}

int cmd_transvection(const options& opt) {
  const jmw::field_spec field = jmw::field_spec::parse(opt.field);
  const auto [ti, tj] = parse_index_pair(opt.a, opt.n);
  const auto [si, sj] = parse_index_pair(opt.b, opt.n);
  const jmw::scalar t = jmw::parse_scalar(field, opt.t);
  const jmw::word w = jmw::word_standard_tau(field, opt.n, ti, tj, si, sj, t);
  write_output(opt.output, jmw::word_to_json(w));
  if (opt.stats) std::cerr << "length " << w.length() << "\n";
  const std::size_t d = opt.n * opt.n;
  jmw::matrix target = jmw::matrix::identity(field, d);
  target.set(jmw::unit_index(opt.n, ti, tj), jmw::unit_index(opt.n, si, sj),
             target.at(jmw::unit_index(opt.n, ti, tj),
                       jmw::unit_index(opt.n, si, sj)) +
                 t);
  return jmw::evaluate(w) == target ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan multiplication words: factorization and surveys"};
  app.require_subcommand(1);
  options opt;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--field", opt.field, "field: Q or Fp:<p>");
    cmd->add_option("--n", opt.n, "matrix side n");
  };

  CLI::App* factorize = app.add_subcommand("factorize", "factor an operator");
  add_common(factorize);
  factorize->add_option("--input", opt.input, "operator JSON file")->required();
  factorize->add_option("--output", opt.output, "report JSON file");
  factorize->add_flag("--stats", opt.stats, "print word length to stderr");

  CLI::App* verify = app.add_subcommand("verify", "evaluate a word against a target");
  add_common(verify);
  verify->add_option("--input", opt.input, "word JSON file")->required();
  verify->add_option("--target", opt.target, "operator JSON file")->required();
  verify->add_option("--output", opt.output, "report JSON file");
  verify->add_flag("--stats", opt.stats, "print word length to stderr");

  CLI::App* check = app.add_subcommand("check", "run identity suite");
  add_common(check);
  check->add_option("--identity", opt.identity, "identity id or all");
  check->add_option("--output", opt.output, "report JSON file");

  CLI::App* survey = app.add_subcommand("survey", "determinant and character surveys");
  survey->require_subcommand(1);
  CLI::App* delta = survey->add_subcommand("delta", "determinant subgroup");
  delta->add_option("--p", opt.p, "odd prime")->required();
  delta->add_option("--n", opt.n, "matrix side n");
  delta->add_option("--output", opt.output, "survey JSON file");
  CLI::App* jacobi = survey->add_subcommand("jacobi", "Jacobi sums");
  jacobi->add_option("--p", opt.p, "odd prime")->required();
  jacobi->add_option("--m", opt.m, "character power");
  jacobi->add_option("--output", opt.output, "rows JSON file");

  CLI::App* transvection =
      app.add_subcommand("transvection", "emit a standard transvection word");
  add_common(transvection);
  transvection->add_option("--a", opt.a, "target unit as 1-based i,j")->required();
  transvection->add_option("--b", opt.b, "source unit as 1-based i,j")->required();
  transvection->add_option("--t", opt.t, "parameter scalar");
  transvection->add_option("--output", opt.output, "word JSON file");
  transvection->add_flag("--stats", opt.stats, "print word length to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opt.field_set = factorize->count("--field") > 0;
  opt.n_set = factorize->count("--n") > 0;

  try {
    if (app.got_subcommand(factorize)) return cmd_factorize(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(check)) return cmd_check(opt);
    if (app.got_subcommand(survey)) {
      if (survey->got_subcommand(delta)) return cmd_survey_delta(opt);
      return cmd_survey_jacobi(opt);
    }
    return cmd_transvection(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
