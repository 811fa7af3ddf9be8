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

#ifndef QWMIX_DISCRETE_WALK_HPP
#define QWMIX_DISCRETE_WALK_HPP

#include <Eigen/Dense>

#include <cstddef>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/exact/polynomial.hpp"

namespace qwmix::discrete {

/// Discrete walk driven by a real rational orthogonal matrix U.
class DiscreteWalk {
 public:
  /// Throws DomainError unless U is square with U U^T = I exactly.
  explicit DiscreteWalk(exact::Matrix u);

  const exact::Matrix& matrix() const noexcept { return u_; }
  /// Square-free part of the characteristic polynomial, the minimal
  /// polynomial since orthogonal matrices are diagonalizable.
  const exact::Polynomial& min_poly() const noexcept { return psi_; }
  std::size_t order() const noexcept { return u_.rows(); }

 private:
  exact::Matrix u_;
  exact::Polynomial psi_;
};

/// sum_r E_r o E_r, the limit of (1/N) sum_n U^n o U^-n.
exact::Matrix avg_mixing_literal(const DiscreteWalk& w);

/// sum_r E_r o conj(E_r), the limit of (1/N) sum_n U^n o conj(U^n).
/// Doubly stochastic and entrywise nonnegative.
exact::Matrix avg_mixing_physical(const DiscreteWalk& w);

struct CesaroPartial {
  /// (1/N) sum_{n<N} U^n o U^-n. Real because U is.
  Eigen::MatrixXd partial;
  /// A priori distance to the literal limit, entrywise.
  double bound = 0.0;
};

/// Throws DomainError for N = 0 and ClusteringError when the numeric
/// eigenvalues do not separate into deg(psi) clusters.
CesaroPartial cesaro_partial(const DiscreteWalk& w, std::size_t n);

}  // namespace qwmix::discrete

#endif  // QWMIX_DISCRETE_WALK_HPP
