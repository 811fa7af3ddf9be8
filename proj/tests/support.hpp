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

#ifndef QWMIX_TESTS_SUPPORT_HPP
#define QWMIX_TESTS_SUPPORT_HPP

// Generators and floating-point oracles shared by the test binaries. Nothing
// here calls into the exact average-mixing pipeline.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/exact/polynomial.hpp"
#include "qwmix/graphs/graph.hpp"

namespace qwmix::testing {

inline exact::Rational q(long p, long d = 1) {
  exact::Rational r(p, d);
  r.canonicalize();
  return r;
}

inline exact::Matrix random_symmetric(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  exact::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = dist(rng);
      m(j, i) = m(i, j);
    }
  return m;
}

inline graphs::WeightedGraph erdos_renyi(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  graphs::WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.set_weight(i, j, 1);
  return g;
}

/// Numeric roots of a polynomial via the eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> numeric_roots(const exact::Polynomial& p) {
  const int m = p.degree();
  if (m < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(m, m);
  const double lc = p.leading().get_d();
  for (int i = 1; i < m; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) c(i, m - 1) = -p.coefficient(static_cast<std::size_t>(i)).get_d() / lc;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < m; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

/// Numeric projector onto the eigenspace of symmetric `a` for eigenvalues within tol of theta.
inline Eigen::MatrixXd numeric_projector(const Eigen::MatrixXd& a, double theta, double tol = 1e-7) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    if (std::abs(solver.eigenvalues()(k) - theta) < tol)
      e += solver.eigenvectors().col(k) * solver.eigenvectors().col(k).transpose();
  return e;
}

}  // namespace qwmix::testing

#endif  // QWMIX_TESTS_SUPPORT_HPP
