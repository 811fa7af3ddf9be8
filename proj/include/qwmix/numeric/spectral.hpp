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

#ifndef QWMIX_NUMERIC_SPECTRAL_HPP
#define QWMIX_NUMERIC_SPECTRAL_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/exact/polynomial.hpp"

namespace qwmix::numeric {

/// A = sum_r theta_r E_r over the distinct eigenvalues of a real symmetric A.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending, distinct
  std::vector<Eigen::MatrixXd> projectors;
  std::vector<int> multiplicities;
  double tolerance = 0.0;

  Eigen::Index order() const { return projectors.empty() ? 0 : projectors.front().rows(); }
};

Eigen::MatrixXd to_eigen(const exact::Matrix& m);

/// 1e-9 * n * max|entry|, with max|entry| floored at 1 so the zero matrix
/// still gets a positive threshold.
double default_tolerance(const Eigen::MatrixXd& m);

/// Dense symmetric eigensolve; eigenvalues within `tol` of their ascending
/// neighbour are clustered and their outer products summed.
SpectralDecomposition spectral_decomposition(const Eigen::MatrixXd& m,
                                             std::optional<double> tol = std::nullopt);

/// Throws ClusteringError unless the number of clusters equals deg(psi).
void check_cluster_count(const SpectralDecomposition& d, const exact::Polynomial& psi);

/// H(t) = sum_r exp(i theta_r t) E_r.
Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& d, double t);

/// M(t) = sum_r E_r o E_r + 2 sum_{r<s} cos((theta_r - theta_s) t) E_r o E_s.
Eigen::MatrixXd mixing_at(const SpectralDecomposition& d, double t);

/// (1/T) int_0^T M(t) dt in closed form: the cosine terms integrate to sinc
/// factors sin(delta T) / (delta T). Throws DomainError for T <= 0.
Eigen::MatrixXd average_upto(const SpectralDecomposition& d, double horizon);

/// sum_r E_r o E_r.
Eigen::MatrixXd numeric_avg_mixing(const SpectralDecomposition& d);

}  // namespace qwmix::numeric

#endif  // QWMIX_NUMERIC_SPECTRAL_HPP
