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

#ifndef QWMIX_GRAPHS_GRAPH_HPP
#define QWMIX_GRAPHS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qwmix/exact/matrix.hpp"

namespace qwmix::graphs {

/// Symmetric integer-weighted graph on vertices 0..n-1. Off-diagonal
/// entries are edge weights (0 = no edge), diagonal entries loop weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t n);

  /// Throws DomainError unless the rows form a symmetric square matrix.
  static WeightedGraph from_weights(const std::vector<std::vector<std::int64_t>>& weights);

  std::size_t order() const noexcept { return n_; }
  std::int64_t weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set_weight(std::size_t i, std::size_t j, std::int64_t w);

  bool has_loops() const;
  /// 0/1 weights and no loops.
  bool is_simple() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> w_;
};

enum class Basis { adjacency, laplacian };

std::string_view to_string(Basis basis);
/// Accepts "adjacency" or "laplacian".
Basis parse_basis(std::string_view text);

WeightedGraph path(std::size_t n);
WeightedGraph cycle(std::size_t n);
WeightedGraph complete(std::size_t n);
WeightedGraph empty(std::size_t n);
/// Vertex i is adjacent to i +- c (mod n) for every c in the connection set,
/// which must lie in 1..n/2.
WeightedGraph circulant(std::size_t n, const std::vector<std::size_t>& connections);

/// Builds a family from "path:N", "cycle:N", "complete:N", "empty:N" or
/// "circulant:N:c1,c2,..." (braces around the set are accepted).
/// Throws DescriptorError on malformed or invalid parameters.
WeightedGraph family(std::string_view descriptor);

WeightedGraph add_loops(WeightedGraph g, const std::map<std::size_t, std::int64_t>& loops);

/// Adjacency: the weights as rationals. Laplacian: Delta - A with Delta the
/// absolute row sums; only loop-free graphs are accepted.
exact::Matrix matrix_of(const WeightedGraph& g, Basis basis);

/// Complement of a simple graph; throws UnsupportedError otherwise.
WeightedGraph complement(const WeightedGraph& g);

/// Connected components of the support of the off-diagonal entries,
/// as a component label per vertex.
std::vector<std::size_t> components(const exact::Matrix& m);
bool is_connected(const exact::Matrix& m);
bool is_connected(const WeightedGraph& g);

}  // namespace qwmix::graphs

#endif  // QWMIX_GRAPHS_GRAPH_HPP
