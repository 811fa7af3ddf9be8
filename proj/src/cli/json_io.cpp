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

#include "qwmix/cli/json_io.hpp"

#include <cstdint>
#include <fstream>

#include "qwmix/error.hpp"
#include "qwmix/exact/rational.hpp"

namespace qwmix::cli {

namespace {

const Json& rows_of(const Json& j, const char* key) {
  if (j.is_object()) {
    if (!j.contains(key)) throw DomainError(std::string("expected a \"") + key + "\" field");
    return j.at(key);
  }
  return j;
}

}  // namespace

Json to_json(const exact::Rational& x) { return exact::to_string(x); }

exact::Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return exact::Rational(exact::Integer(j.dump()));
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  throw DomainError("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

Json to_json(const exact::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

exact::Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("expected a nonempty array of rows");
  std::vector<std::vector<exact::Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw DomainError("matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& x : row) out.push_back(rational_from_json(x));
  }
  return exact::Matrix::from_rows(rows);
}

Json to_json(const exact::Polynomial& p) {
  Json coefficients = Json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(to_json(c));
  return coefficients;
}

Json to_json(const mixing::AvgMixReport& report) {
  return Json{
      {"n", report.mixing.rows()},
      {"avg_mixing", to_json(report.mixing)},
      {"min_poly", to_json(report.min_poly)},
      {"char_poly", to_json(report.char_poly)},
      {"disc_min", to_json(report.disc_min)},
      {"disc_char", to_json(report.disc_char)},
      {"simple_spectrum", report.simple_spectrum},
      {"common_denominator", to_json(exact::Rational(report.common_denominator))},
      {"certificates",
       {{"d2_integral", report.certificates.d2_integral},
        {"d_integral_simple", report.certificates.d_integral_simple},
        {"d_integral_minpoly", report.certificates.d_integral_minpoly}}},
  };
}

graphs::WeightedGraph weighted_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
    throw DomainError("weighted graph file needs \"n\" and \"weights\"");
  if (!j.at("n").is_number_integer() || j.at("n").get<std::int64_t>() < 1)
    throw DomainError("\"n\" must be a positive integer");
  const auto n = j.at("n").get<std::size_t>();
  const Json& w = j.at("weights");
  if (!w.is_array() || w.size() != n) throw DimensionError("\"weights\" must have n rows");
  std::vector<std::vector<std::int64_t>> weights;
  for (const auto& row : w) {
    if (!row.is_array() || row.size() != n) throw DimensionError("\"weights\" rows must have n entries");
    auto& out = weights.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw DomainError("weights must be integers");
      out.push_back(x.get<std::int64_t>());
    }
  }
  return graphs::WeightedGraph::from_weights(weights);
}

exact::Matrix rational_matrix_from_json(const Json& j) { return matrix_from_json(rows_of(j, "matrix")); }

std::vector<exact::Matrix> scheme_matrices_from_json(const Json& j) {
  const Json& list = rows_of(j, "matrices");
  if (!list.is_array() || list.empty()) throw DomainError("expected a nonempty list of matrices");
  std::vector<exact::Matrix> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what(), e.byte);
  }
}

}  // namespace qwmix::cli
