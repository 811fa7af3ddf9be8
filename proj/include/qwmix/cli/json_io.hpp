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

#ifndef QWMIX_CLI_JSON_IO_HPP
#define QWMIX_CLI_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/exact/polynomial.hpp"
#include "qwmix/graphs/graph.hpp"
#include "qwmix/mixing/average_mixing.hpp"

namespace qwmix::cli {

using Json = nlohmann::json;

// Rationals travel as canonical strings: "p/q" reduced with q > 0, or "p"
// for integers. Reading also accepts JSON integers.
Json to_json(const exact::Rational& x);
exact::Rational rational_from_json(const Json& j);

Json to_json(const exact::Matrix& m);
exact::Matrix matrix_from_json(const Json& j);

/// Coefficients in ascending order of degree.
Json to_json(const exact::Polynomial& p);

Json to_json(const mixing::AvgMixReport& report);

/// Weighted graph file: {"n": int, "weights": [[int, ...], ...]}.
graphs::WeightedGraph weighted_graph_from_json(const Json& j);

/// Rational matrix file: a bare array of rows or {"matrix": rows}.
exact::Matrix rational_matrix_from_json(const Json& j);

/// Scheme file: a list of 0/1 matrices, bare or under "matrices".
std::vector<exact::Matrix> scheme_matrices_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on malformed content,
/// DomainError when the file cannot be opened.
Json read_json_file(const std::string& path);

}  // namespace qwmix::cli

#endif  // QWMIX_CLI_JSON_IO_HPP
