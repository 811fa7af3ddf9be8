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

#include "qwmix/analysis/cospectral.hpp"

#include <stdexcept>
#include <vector>

#include "qwmix/analysis/closed_form.hpp"
#include "qwmix/error.hpp"
#include "qwmix/exact/algebra.hpp"

namespace qwmix::analysis {

using exact::Matrix;
using exact::Rational;

namespace {

void check_pair(std::size_t n, std::size_t u, std::size_t v) {
  if (u >= n || v >= n) throw IndexError("vertex out of range");
  if (u == v) throw IndexError("vertex pair must be distinct");
}

bool walk_counts_agree(const Matrix& m, std::size_t u, std::size_t v) {
  const std::size_t n = m.rows();
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (power(u, u) != power(v, v)) return false;
    power = power * m;
  }
  return true;
}

Matrix adjacency(const graphs::WeightedGraph& g) {
  return graphs::matrix_of(g, graphs::Basis::adjacency);
}

// Exact least-squares-free span test: solve sum_k c_k B_k = target over all
// n^2 entries by Gaussian elimination on the augmented system.
bool in_span(const Matrix& target, const std::vector<Matrix>& basis) {
  const std::size_t n = target.rows();
  const std::size_t vars = basis.size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(vars + 1);
      for (std::size_t k = 0; k < vars; ++k) row[k] = basis[k](i, j);
      row[vars] = target(i, j);
      rows.push_back(std::move(row));
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k <= vars; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][vars] != 0) return false;
  return true;
}

}  // namespace

bool are_cospectral(const Matrix& m, std::size_t u, std::size_t v) {
  check_pair(m.rows(), u, v);
  const bool deleted = exact::char_poly(m.without(u)) == exact::char_poly(m.without(v));
  if (deleted != walk_counts_agree(m, u, v))
    throw std::logic_error("vertex-deleted and walk-count cospectrality criteria disagree");
  return deleted;
}

bool are_cospectral(const graphs::WeightedGraph& g, std::size_t u, std::size_t v) {
  return are_cospectral(adjacency(g), u, v);
}

bool are_strongly_cospectral(const Matrix& m, const mixing::AvgMixReport& report, std::size_t u,
                             std::size_t v) {
  check_pair(m.rows(), u, v);
  const bool strong = mixing::strong_cospectral_kernel(report, u, v);
  const bool plain = are_cospectral(m, u, v);
  if (strong && !plain)
    throw std::logic_error("strongly cospectral pair that is not cospectral");
  if (report.simple_spectrum && strong != plain)
    throw std::logic_error("simple spectrum but cospectral and strongly cospectral differ");
  return strong;
}

bool are_strongly_cospectral(const graphs::WeightedGraph& g, std::size_t u, std::size_t v) {
  const Matrix m = adjacency(g);
  return are_strongly_cospectral(m, mixing::average_mixing(m), u, v);
}

bool is_walk_regular(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n <= 1) return true;
  const auto first = exact::char_poly(m.without(0));
  for (std::size_t u = 1; u < n; ++u)
    if (exact::char_poly(m.without(u)) != first) return false;
  return true;
}

bool is_walk_regular(const graphs::WeightedGraph& g) { return is_walk_regular(adjacency(g)); }

std::string_view to_string(PstStatus status) {
  return status == PstStatus::candidate ? "CANDIDATE" : "BLOCKED";
}

PstVerdict pst_necessary(const mixing::AvgMixReport& report, std::size_t u, std::size_t v) {
  const Matrix& mix = report.mixing;
  const std::size_t n = mix.rows();
  check_pair(n, u, v);
  PstVerdict verdict;
  verdict.no_pst_anywhere = true;
  for (std::size_t a = 0; a < n && verdict.no_pst_anywhere; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mixing::strong_cospectral_kernel(report, a, b)) {
        verdict.no_pst_anywhere = false;
        break;
      }
  if (mixing::strong_cospectral_kernel(report, u, v)) {
    verdict.status = PstStatus::candidate;
    verdict.reason = "strongly cospectral (necessary condition met)";
  } else {
    verdict.status = PstStatus::blocked;
    verdict.reason = "not strongly cospectral";
  }
  return verdict;
}

PstVerdict pst_necessary(const graphs::WeightedGraph& g, std::size_t u, std::size_t v) {
  return pst_necessary(mixing::average_mixing(adjacency(g)), u, v);
}

bool all_strongly_cospectral_check(const mixing::AvgMixReport& report) {
  const std::size_t n = report.mixing.rows();
  for (std::size_t v = 1; v < n; ++v)
    if (!mixing::strong_cospectral_kernel(report, 0, v)) return false;
  return true;
}

bool all_strongly_cospectral_check(const graphs::WeightedGraph& g) {
  return all_strongly_cospectral_check(mixing::average_mixing(adjacency(g)));
}

std::string_view to_string(SpanClass c) {
  switch (c) {
    case SpanClass::ij: return "IJ";
    case SpanClass::ijt: return "IJT";
    case SpanClass::other: return "OTHER";
  }
  return "OTHER";
}

SpanClass ij_span_check(const mixing::AvgMixReport& report) {
  const Matrix& mix = report.mixing;
  const std::size_t n = mix.rows();
  if (in_span(mix, {Matrix::identity(n), Matrix::ones(n)})) return SpanClass::ij;
  if (in_span(mix, {Matrix::identity(n), Matrix::ones(n), reversal(n)})) return SpanClass::ijt;
  return SpanClass::other;
}

}  // namespace qwmix::analysis
