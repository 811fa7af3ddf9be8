// Copyright 2026 The qwmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwmix/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwmix/analysis/closed_form.hpp"
#include "qwmix/analysis/cospectral.hpp"
#include "qwmix/analysis/invariants.hpp"
#include "qwmix/cli/json_io.hpp"
#include "qwmix/discrete/walk.hpp"
#include "qwmix/error.hpp"
#include "qwmix/exact/rational.hpp"
#include "qwmix/graphs/graph.hpp"
#include "qwmix/graphs/graph6.hpp"
#include "qwmix/mixing/average_mixing.hpp"
#include "qwmix/schemes/scheme.hpp"

namespace qwmix::cli {

namespace {

enum class Format { json, csv, pretty };

struct InputOptions {
  std::string family;
  std::string graph6;
  std::string matrix_file;
  std::string loops;
  std::string basis = "adjacency";
};

struct Input {
  graphs::WeightedGraph graph{1};
  graphs::Basis basis = graphs::Basis::adjacency;
  exact::Matrix matrix;
};

std::size_t parse_index(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-')
    throw DescriptorError(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(sep, start)) != std::string::npos; start = pos + 1)
    parts.push_back(text.substr(start, pos - start));
  parts.push_back(text.substr(start));
  return parts;
}

// "0=2,5=2" -> {0: 2, 5: 2}
std::map<std::size_t, std::int64_t> parse_loops(const std::string& text) {
  std::map<std::size_t, std::int64_t> loops;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DescriptorError("loop '" + item + "' is not of the form v=w");
    const std::string weight = item.substr(eq + 1);
    std::size_t used = 0;
    long long w = 0;
    try {
      w = std::stoll(weight, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != weight.size() || weight.empty())
      throw DescriptorError("invalid loop weight '" + weight + "'");
    loops[parse_index(item.substr(0, eq), "loop vertex")] = w;
  }
  return loops;
}

Input load_input(const InputOptions& o) {
  const int sources = !o.family.empty() + !o.graph6.empty() + !o.matrix_file.empty();
  if (sources != 1)
    throw DescriptorError("exactly one of --family, --graph6, --matrix-file is required");
  Input in;
  in.basis = graphs::parse_basis(o.basis);
  if (!o.family.empty()) {
    in.graph = graphs::family(o.family);
  } else if (!o.graph6.empty()) {
    in.graph = graphs::parse_graph6(o.graph6);
  } else {
    const Json j = read_json_file(o.matrix_file);
    if (j.is_object() && j.contains("weights")) {
      in.graph = weighted_graph_from_json(j);
    } else {
      const exact::Matrix m = rational_matrix_from_json(j);
      if (!m.is_square() || !m.is_integral())
        throw DomainError("matrix file must hold a square integer matrix");
      std::vector<std::vector<std::int64_t>> w(m.rows(), std::vector<std::int64_t>(m.cols()));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (!m(r, c).get_num().fits_slong_p()) throw DomainError("matrix entry out of range");
          w[r][c] = m(r, c).get_num().get_si();
        }
      in.graph = graphs::WeightedGraph::from_weights(w);
    }
  }
  if (!o.loops.empty()) in.graph = graphs::add_loops(in.graph, parse_loops(o.loops));
  in.matrix = graphs::matrix_of(in.graph, in.basis);
  return in;
}

std::string decimal(const exact::Rational& x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", x.get_d());
  return buffer;
}

void write_matrix_csv(std::ostream& out, const exact::Matrix& m) {
  out << "# approximate decimal values, 12 significant digits\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << decimal(m(r, c));
    out << '\n';
  }
}

void write_matrix_pretty(std::ostream& out, const exact::Matrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      width[c] = std::max(width[c], exact::to_string(m(r, c)).size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = exact::to_string(m(r, c));
      out << std::string(width[c] - s.size() + (c ? 2 : 0), ' ') << s;
    }
    out << '\n';
  }
}

std::string scalar_text(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Flat key/value rendering for reports that are not a single matrix.
void write_fields(std::ostream& out, const Json& report, Format format, const std::string& prefix = "") {
  for (const auto& [key, value] : report.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      write_fields(out, value, format, name);
    } else if (format == Format::csv) {
      std::string text = scalar_text(value);
      if (text.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        text = quoted + "\"";
      }
      out << name << ',' << text << '\n';
    } else {
      out << name << ": " << scalar_text(value) << '\n';
    }
  }
}

int emit_report(std::ostream& out, const Json& report, Format format) {
  if (format == Format::json) {
    out << report.dump(2) << '\n';
  } else {
    if (format == Format::csv) out << "field,value\n";
    write_fields(out, report, format);
  }
  return ExitCode::ok;
}

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--family", o.family, "Graph family, e.g. path:6, cycle:9, circulant:8:1,3");
  cmd->add_option("--graph6", o.graph6, "Simple graph in graph6 format");
  cmd->add_option("--matrix-file", o.matrix_file,
                  "JSON weighted graph {\"n\", \"weights\"} or integer matrix");
  cmd->add_option("--loops", o.loops, "Loop weights as vertex=weight pairs, e.g. 0=2,5=2");
  cmd->add_option("--basis", o.basis, "Matrix of the graph")
      ->check(CLI::IsMember({"adjacency", "laplacian"}));
}

int run_compute(const InputOptions& o, Format format, std::ostream& out) {
  const Input in = load_input(o);
  const auto report = mixing::average_mixing(in.matrix);
  if (format == Format::csv) {
    write_matrix_csv(out, report.mixing);
    return ExitCode::ok;
  }
  if (format == Format::pretty) {
    out << "average mixing matrix (" << report.mixing.rows() << " x " << report.mixing.cols()
        << ", " << graphs::to_string(in.basis) << ")\n";
    write_matrix_pretty(out, report.mixing);
    Json rest = to_json(report);
    rest.erase("avg_mixing");
    write_fields(out, rest, format);
    return ExitCode::ok;
  }
  Json j = to_json(report);
  j["basis"] = std::string(graphs::to_string(in.basis));
  out << j.dump(2) << '\n';
  return ExitCode::ok;
}

// Closed-form family of a bare family descriptor, if the library knows one.
std::optional<analysis::ClosedForm> closed_form_for(const InputOptions& o, const Input& in) {
  if (o.family.empty() || !o.loops.empty()) return std::nullopt;
  const auto parts = split(o.family, ':');
  if (parts.size() != 2) return std::nullopt;
  const std::size_t n = in.graph.order();
  if (parts[0] == "path")
    return analysis::ClosedForm{in.basis == graphs::Basis::adjacency ? analysis::Family::path_adjacency
                                                                     : analysis::Family::path_laplacian,
                                n};
  // Cycles and complete graphs are regular, so both bases share idempotents.
  if (parts[0] == "cycle")
    return analysis::ClosedForm{n % 2 ? analysis::Family::cycle_odd : analysis::Family::cycle_even, n};
  if (parts[0] == "complete" && n >= 2)
    return analysis::ClosedForm{analysis::Family::pseudocyclic, n, n - 1};
  return std::nullopt;
}

int run_verify(const InputOptions& o, const std::string& check, Format format, std::ostream& out) {
  const Input in = load_input(o);
  const auto which = analysis::parse_check_set(check);
  const auto report = mixing::average_mixing(in.matrix);
  bool passed = true;

  Json j;
  j["n"] = in.graph.order();
  j["basis"] = std::string(graphs::to_string(in.basis));
  Json checks = Json::array();
  if (const auto form = closed_form_for(o, in)) {
    const bool ok = report.mixing == analysis::closed_form_matrix(*form);
    passed = passed && ok;
    checks.push_back({{"name", "closed_form"},
                      {"passed", ok},
                      {"detail", std::string(analysis::to_string(form->family))}});
  }
  for (const auto& r : analysis::check_invariants(in.matrix, report, which)) {
    // Informational: J/n is a legitimate answer for n <= 2.
    const bool counts = r.name != "not_uniform" || in.graph.order() >= 3;
    passed = passed && (r.passed || !counts);
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  j["checks"] = checks;
  j["passed"] = passed;

  if (format == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    if (format == Format::csv) out << "check,passed,detail\n";
    for (const auto& c : checks) {
      const std::string detail = c["detail"].get<std::string>();
      if (format == Format::csv)
        out << c["name"].get<std::string>() << ',' << (c["passed"].get<bool>() ? "true" : "false")
            << ",\"" << detail << "\"\n";
      else
        out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
            << (detail.empty() ? "" : ": " + detail) << '\n';
    }
    if (format == Format::pretty) out << (passed ? "all checks passed" : "some checks failed") << '\n';
  }
  return passed ? ExitCode::ok : ExitCode::verification_failed;
}

int run_analyze(const InputOptions& o, const std::string& pair, Format format, std::ostream& out) {
  const Input in = load_input(o);
  const auto report = mixing::average_mixing(in.matrix);
  Json j;
  j["n"] = in.graph.order();
  j["walk_regular"] = analysis::is_walk_regular(in.matrix);
  j["all_strongly_cospectral"] = analysis::all_strongly_cospectral_check(report);
  j["span_class"] = std::string(analysis::to_string(analysis::ij_span_check(report)));
  if (!pair.empty()) {
    const auto parts = split(pair, ',');
    if (parts.size() != 2) throw DescriptorError("--pair expects u,v");
    const std::size_t u = parse_index(parts[0], "vertex");
    const std::size_t v = parse_index(parts[1], "vertex");
    const auto verdict = analysis::pst_necessary(report, u, v);
    j["pair"] = {{"u", u},
                 {"v", v},
                 {"cospectral", analysis::are_cospectral(in.matrix, u, v)},
                 {"strongly_cospectral", analysis::are_strongly_cospectral(in.matrix, report, u, v)},
                 {"pst", std::string(analysis::to_string(verdict.status))},
                 {"pst_reason", verdict.reason}};
    j["no_pst_anywhere"] = verdict.no_pst_anywhere;
  }
  return emit_report(out, j, format);
}

int run_scheme(std::size_t q, std::size_t d, const std::string& file, Format format, std::ostream& out) {
  const bool field = q != 0 || d != 0;
  if (field == !file.empty()) throw DescriptorError("give either --q and --d or --matrix-file");
  if (field && (q == 0 || d == 0)) throw DescriptorError("--q and --d go together");
  const auto s = field ? schemes::cyclotomic_scheme(q, d)
                       : schemes::verify_scheme(scheme_matrices_from_json(read_json_file(file)));

  Json j;
  j["n"] = s.order();
  j["classes"] = s.classes;
  j["valencies"] = s.valencies;
  j["multiplicities"] = s.multiplicities;
  const bool pseudocyclic = schemes::is_pseudocyclic(s);
  const bool koppinen = schemes::koppinen_schur_check(s);
  j["pseudocyclic"] = pseudocyclic;
  j["koppinen_schur"] = koppinen;
  bool passed = koppinen;
  if (pseudocyclic) {
    const bool formula = schemes::pseudocyclic_mixing_check(s);
    j["pseudocyclic_mixing_formula"] = formula;
    passed = passed && formula;
  }
  if (format != Format::json) {
    j["valencies"] = Json(s.valencies).dump();
    j["multiplicities"] = Json(s.multiplicities).dump();
  }
  emit_report(out, j, format);
  return passed ? ExitCode::ok : ExitCode::verification_failed;
}

int run_discrete(const std::string& file, const std::string& mode, Format format, std::ostream& out,
                 std::ostream& err) {
  if (file.empty()) throw DescriptorError("--unitary-file is required");
  const discrete::DiscreteWalk w(rational_matrix_from_json(read_json_file(file)));
  const exact::Matrix literal = discrete::avg_mixing_literal(w);
  const exact::Matrix physical = discrete::avg_mixing_physical(w);
  const bool agree = literal == physical;
  if (!agree)
    err << "note: literal and physical average mixing differ for this non-symmetric walk; showing "
        << mode << '\n';
  const exact::Matrix& chosen = mode == "literal" ? literal : physical;
  if (format == Format::csv) {
    write_matrix_csv(out, chosen);
  } else if (format == Format::pretty) {
    out << mode << " average mixing matrix\n";
    write_matrix_pretty(out, chosen);
    out << "forms_agree: " << (agree ? "true" : "false") << '\n';
  } else {
    const Json j{{"mode", mode},
                 {"avg_mixing", to_json(chosen)},
                 {"literal", to_json(literal)},
                 {"physical", to_json(physical)},
                 {"forms_agree", agree}};
    out << j.dump(2) << '\n';
  }
  return ExitCode::ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact average mixing matrices of quantum walks", "qwmix"};
  app.require_subcommand(1);

  InputOptions input;
  std::string format_text = "json";
  std::string check = "all";
  std::string pair;
  std::size_t q = 0;
  std::size_t d = 0;
  std::string scheme_file;
  std::string unitary_file;
  std::string mode = "physical";

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
  };

  auto* compute = app.add_subcommand("compute", "Exact average mixing matrix and certificates");
  add_input_options(compute, input);
  add_format(compute);

  auto* verify = app.add_subcommand("verify", "Closed-form and invariant checks");
  add_input_options(verify, input);
  add_format(verify);
  verify->add_option("--check", check, "Invariant group")
      ->check(CLI::IsMember({"all", "psd", "stochastic", "integrality"}));

  auto* analyze = app.add_subcommand("analyze", "Cospectrality, state transfer and span analysis");
  add_input_options(analyze, input);
  add_format(analyze);
  analyze->add_option("--pair", pair, "Vertex pair u,v");

  auto* scheme = app.add_subcommand("scheme", "Association scheme verification");
  scheme->add_option("--q", q, "Prime order of the cyclotomic scheme");
  scheme->add_option("--d", d, "Number of classes, a divisor of q - 1");
  scheme->add_option("--matrix-file", scheme_file, "JSON list of 0/1 class matrices");
  add_format(scheme);

  auto* walk = app.add_subcommand("discrete", "Average mixing of a rational orthogonal walk");
  walk->add_option("--unitary-file", unitary_file, "JSON rational orthogonal matrix");
  walk->add_option("--mode", mode, "Limit to report")->check(CLI::IsMember({"literal", "physical"}));
  add_format(walk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ExitCode::ok : ExitCode::input_error;
  }

  const Format format = format_text == "csv"      ? Format::csv
                        : format_text == "pretty" ? Format::pretty
                                                  : Format::json;
  try {
    if (compute->parsed()) return run_compute(input, format, out);
    if (verify->parsed()) return run_verify(input, check, format, out);
    if (analyze->parsed()) return run_analyze(input, pair, format, out);
    if (scheme->parsed()) return run_scheme(q, d, scheme_file, format, out);
    return run_discrete(unitary_file, mode, format, out, err);
  } catch (const schemes::SchemeAxiomError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::verification_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal_error;
  }
}

}  // namespace qwmix::cli
