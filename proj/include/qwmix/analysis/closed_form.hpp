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

#ifndef QWMIX_ANALYSIS_CLOSED_FORM_HPP
#define QWMIX_ANALYSIS_CLOSED_FORM_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <string_view>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/graphs/graph.hpp"

namespace qwmix::analysis {

// Closed forms for the average mixing matrix, 0-indexed. T is the reversal
// j -> n-1-j and P^{n/2} the half-turn j -> j + n/2 (mod n).
//
//   path_adjacency  (2J + I + T) / (2n + 2)                  n >= 1
//   path_laplacian  ((n-1)J + (n/2)(I + T)) / n^2            n >= 2
//   cycle_odd       (n-1)/n^2 J + I/n                        n odd >= 3
//   cycle_even      (n-2)/n^2 J + (I + P^{n/2})/n            n even >= 4
//   pseudocyclic    (n-m+1)/n^2 J + (m-1)/n I                m | n-1, 1 <= m
enum class Family { path_adjacency, path_laplacian, cycle_odd, cycle_even, pseudocyclic };

struct ClosedForm {
  Family family;
  std::size_t n = 0;
  /// Common valency of the scheme graphs; pseudocyclic only.
  std::size_t m = 0;
};

std::string_view to_string(Family family);

/// Throws DescriptorError when the parameters are outside the family's range.
exact::Matrix closed_form_matrix(const ClosedForm& form);

exact::Matrix reversal(std::size_t n);
exact::Matrix cyclic_shift_power(std::size_t n, std::size_t k);

/// Exact comparison of the computed average mixing matrix with the closed
/// form, for the path and cycle families (the graph is built internally).
bool verify_closed_form(const ClosedForm& form);

/// Pseudocyclic variant: the graph is supplied by the caller, who is
/// responsible for its scheme membership (see schemes::is_pseudocyclic).
bool verify_closed_form(const ClosedForm& form, const graphs::WeightedGraph& g);

/// (E_r)_{jk} = 2/(n+1) sin((j+1) r pi/(n+1)) sin((k+1) r pi/(n+1)), 1 <= r <= n;
/// eigenvalue 2 cos(r pi/(n+1)) of A(P_n).
Eigen::MatrixXd path_idempotent_oracle(std::size_t n, std::size_t r);
double path_eigenvalue(std::size_t n, std::size_t r);

/// r = 0 gives J/n; 1 <= r <= n-1 gives
/// 2/n cos((2j+1) r pi/(2n)) cos((2k+1) r pi/(2n)), eigenvalue 2 - 2cos(r pi/n) of L(P_n).
Eigen::MatrixXd path_laplacian_idempotent_oracle(std::size_t n, std::size_t r);
double path_laplacian_eigenvalue(std::size_t n, std::size_t r);

}  // namespace qwmix::analysis

#endif  // QWMIX_ANALYSIS_CLOSED_FORM_HPP
