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

#include "qwmix/graphs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "qwmix/error.hpp"

namespace qwmix::graphs {

WeightedGraph::WeightedGraph(std::size_t n) : n_(n), w_(n * n, 0) {
  if (n == 0) throw DomainError("graph needs at least one vertex");
}

WeightedGraph WeightedGraph::from_weights(const std::vector<std::vector<std::int64_t>>& weights) {
  WeightedGraph g(weights.size());
  const std::size_t n = weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n) throw DomainError("weight matrix is not square");
    for (std::size_t j = 0; j < n; ++j) g.w_[i * n + j] = weights[i][j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.weight(i, j) != g.weight(j, i))
        throw DomainError("weight matrix is not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  return g;
}

void WeightedGraph::set_weight(std::size_t i, std::size_t j, std::int64_t w) {
  if (i >= n_ || j >= n_) throw IndexError("vertex out of range");
  w_[i * n_ + j] = w;
  w_[j * n_ + i] = w;
}

bool WeightedGraph::has_loops() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (weight(i, i) != 0) return true;
  return false;
}

bool WeightedGraph::is_simple() const {
  if (has_loops()) return false;
  return std::all_of(w_.begin(), w_.end(), [](std::int64_t x) { return x == 0 || x == 1; });
}

std::string_view to_string(Basis basis) {
  return basis == Basis::adjacency ? "adjacency" : "laplacian";
}

Basis parse_basis(std::string_view text) {
  if (text == "adjacency") return Basis::adjacency;
  if (text == "laplacian") return Basis::laplacian;
  throw DescriptorError("unknown basis '" + std::string(text) + "'");
}

WeightedGraph path(std::size_t n) {
  if (n < 1) throw DescriptorError("path needs n >= 1");
  WeightedGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_weight(i, i + 1, 1);
  return g;
}

WeightedGraph cycle(std::size_t n) {
  if (n < 3) throw DescriptorError("cycle needs n >= 3");
  WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.set_weight(i, (i + 1) % n, 1);
  return g;
}

WeightedGraph complete(std::size_t n) {
  if (n < 1) throw DescriptorError("complete graph needs n >= 1");
  WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set_weight(i, j, 1);
  return g;
}

WeightedGraph empty(std::size_t n) {
  if (n < 1) throw DescriptorError("empty graph needs n >= 1");
  return WeightedGraph(n);
}

WeightedGraph circulant(std::size_t n, const std::vector<std::size_t>& connections) {
  if (n < 1) throw DescriptorError("circulant needs n >= 1");
  WeightedGraph g(n);
  for (std::size_t c : connections) {
    if (c < 1 || c > n / 2)
      throw DescriptorError("circulant connection " + std::to_string(c) + " outside 1.." +
                            std::to_string(n / 2));
    for (std::size_t i = 0; i < n; ++i) g.set_weight(i, (i + c) % n, 1);
  }
  return g;
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw DescriptorError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

WeightedGraph family(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw DescriptorError("family descriptor needs 'name:n', got '" + std::string(descriptor) + "'");
  const std::string_view name = descriptor.substr(0, colon);
  std::string_view rest = descriptor.substr(colon + 1);
  if (name == "circulant") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos)
      throw DescriptorError("circulant descriptor needs 'circulant:n:c1,c2,...'");
    const std::size_t n = parse_count(rest.substr(0, second), "vertex count");
    std::string_view set = rest.substr(second + 1);
    if (set.size() >= 2 && set.front() == '{' && set.back() == '}')
      set = set.substr(1, set.size() - 2);
    std::vector<std::size_t> conn;
    if (!set.empty())
      for (auto part : split(set, ',')) conn.push_back(parse_count(part, "connection"));
    return circulant(n, conn);
  }
  const std::size_t n = parse_count(rest, "vertex count");
  if (name == "path") return path(n);
  if (name == "cycle") return cycle(n);
  if (name == "complete") return complete(n);
  if (name == "empty") return empty(n);
  throw DescriptorError("unknown family '" + std::string(name) + "'");
}

WeightedGraph add_loops(WeightedGraph g, const std::map<std::size_t, std::int64_t>& loops) {
  for (const auto& [v, w] : loops) {
    if (v >= g.order())
      throw IndexError("loop vertex " + std::to_string(v) + " out of range");
    g.set_weight(v, v, w);
  }
  return g;
}

exact::Matrix matrix_of(const WeightedGraph& g, Basis basis) {
  const std::size_t n = g.order();
  exact::Matrix m(n, n);
  if (basis == Basis::adjacency) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(g.weight(i, j));
    return m;
  }
  if (g.has_loops()) throw UnsupportedError("the Laplacian basis needs a loop-free graph");
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t degree = 0;
    for (std::size_t j = 0; j < n; ++j) {
      degree += std::llabs(g.weight(i, j));
      m(i, j) = -static_cast<long>(g.weight(i, j));
    }
    m(i, i) = static_cast<long>(degree);
  }
  return m;
}

WeightedGraph complement(const WeightedGraph& g) {
  if (!g.is_simple()) throw UnsupportedError("complement needs a simple graph");
  const std::size_t n = g.order();
  WeightedGraph c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.set_weight(i, j, 1 - g.weight(i, j));
  return c;
}

std::vector<std::size_t> components(const exact::Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || label[v] != n) continue;
        if (m(u, v) != 0 || m(v, u) != 0) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const exact::Matrix& m) {
  const auto label = components(m);
  return std::all_of(label.begin(), label.end(), [](std::size_t l) { return l == 0; });
}

bool is_connected(const WeightedGraph& g) { return is_connected(matrix_of(g, Basis::adjacency)); }

}  // namespace qwmix::graphs
