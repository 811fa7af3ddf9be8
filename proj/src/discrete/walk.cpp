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

#include "qwmix/discrete/walk.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qwmix/error.hpp"
#include "qwmix/exact/algebra.hpp"
#include "qwmix/mixing/average_mixing.hpp"
#include "qwmix/numeric/spectral.hpp"

namespace qwmix::discrete {

DiscreteWalk::DiscreteWalk(exact::Matrix u) : u_(std::move(u)) {
  if (!u_.is_square() || u_.rows() == 0) throw DomainError("walk matrix must be square and nonempty");
  if (u_ * u_.transpose() != exact::Matrix::identity(u_.rows()))
    throw DomainError("walk matrix is not orthogonal");
  psi_ = exact::squarefree_part(exact::char_poly(u_));
}

exact::Matrix avg_mixing_literal(const DiscreteWalk& w) {
  return mixing::idempotent_square_sum(w.matrix(), w.min_poly());
}

exact::Matrix avg_mixing_physical(const DiscreteWalk& w) {
  return mixing::idempotent_inverse_pair_sum(w.matrix(), w.min_poly());
}

CesaroPartial cesaro_partial(const DiscreteWalk& w, std::size_t n) {
  if (n == 0) throw DomainError("Cesaro partial sum needs N >= 1");
  const Eigen::MatrixXd u = numeric::to_eigen(w.matrix());
  const Eigen::Index size = u.rows();

  CesaroPartial out;
  out.partial = Eigen::MatrixXd::Zero(size, size);
  Eigen::MatrixXd forward = Eigen::MatrixXd::Identity(size, size);
  Eigen::MatrixXd backward = forward;
  for (std::size_t k = 0; k < n; ++k) {
    out.partial += forward.cwiseProduct(backward);
    forward = forward * u;
    backward = backward * u.transpose();
  }
  out.partial /= static_cast<double>(n);

  // Distinct eigenvalues on the unit circle, then Lagrange projectors.
  using Complex = std::complex<double>;
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(u, false);
  std::vector<Complex> thetas;
  for (Eigen::Index i = 0; i < size; ++i) {
    const Complex z = solver.eigenvalues()(i);
    bool seen = false;
    for (const auto& t : thetas) seen = seen || std::abs(t - z) < 1e-6;
    if (!seen) thetas.push_back(z);
  }
  if (static_cast<int>(thetas.size()) != w.min_poly().degree())
    throw ClusteringError("found " + std::to_string(thetas.size()) +
                          " eigenvalue clusters, minimal polynomial has degree " +
                          std::to_string(w.min_poly().degree()));

  const Eigen::MatrixXcd uc = u.cast<Complex>();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(size, size);
  std::vector<Eigen::MatrixXcd> projectors;
  for (std::size_t r = 0; r < thetas.size(); ++r) {
    Eigen::MatrixXcd e = id;
    for (std::size_t s = 0; s < thetas.size(); ++s)
      if (s != r) e = e * (uc - thetas[s] * id) / (thetas[r] - thetas[s]);
    projectors.push_back(std::move(e));
  }
  double bound = 0.0;
  for (std::size_t r = 0; r < thetas.size(); ++r)
    for (std::size_t s = 0; s < thetas.size(); ++s) {
      if (r == s) continue;
      const double gap = std::abs(thetas[r] / thetas[s] - 1.0);
      bound += projectors[r].cwiseProduct(projectors[s]).cwiseAbs().maxCoeff() / gap;
    }
  out.bound = 2.0 * bound / static_cast<double>(n);
  return out;
}

}  // namespace qwmix::discrete
