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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwmix/error.hpp"
#include "qwmix/exact/algebra.hpp"
#include "qwmix/graphs/graph.hpp"
#include "qwmix/numeric/spectral.hpp"
#include "support.hpp"

using namespace qwmix;
using Eigen::MatrixXd;
using graphs::Basis;

namespace {

MatrixXd adjacency(const char* descriptor) {
  return numeric::to_eigen(graphs::matrix_of(graphs::family(descriptor), Basis::adjacency));
}

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("spectral decomposition examples") {
  const MatrixXd id2 = MatrixXd::Identity(2, 2);
  MatrixXd t(2, 2);
  t << 0, 1, 1, 0;
  auto d = numeric::spectral_decomposition(adjacency("path:2"), 1e-9);
  REQUIRE(d.eigenvalues.size() == 2);
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs(d.projectors[0] - (id2 - t) / 2) < 1e-12);
  CHECK(max_abs(d.projectors[1] - (id2 + t) / 2) < 1e-12);

  d = numeric::spectral_decomposition(adjacency("complete:3"), 1e-9);
  REQUIRE(d.eigenvalues.size() == 2);
  const MatrixXd j3 = MatrixXd::Ones(3, 3);
  CHECK(max_abs(d.projectors[0] - (MatrixXd::Identity(3, 3) - j3 / 3)) < 1e-12);
  CHECK(max_abs(d.projectors[1] - j3 / 3) < 1e-12);
  CHECK(d.multiplicities == std::vector<int>{2, 1});

  d = numeric::spectral_decomposition(adjacency("path:3"), 1e-9);
  REQUIRE(d.eigenvalues.size() == 3);
  CHECK(std::abs(d.eigenvalues[0] + std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(d.eigenvalues[1]) < 1e-12);
  CHECK(std::abs(d.eigenvalues[2] - std::sqrt(2.0)) < 1e-12);

  MatrixXd skew(2, 2);
  skew << 0, 1, 2, 0;
  CHECK_THROWS_AS(numeric::spectral_decomposition(skew), DomainError);
}

TEST_CASE("decomposition identities on random symmetric matrices") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto exact_m = testing::random_symmetric(rng, 1 + trial % 12, -3, 3);
    const MatrixXd a = numeric::to_eigen(exact_m);
    const auto d = numeric::spectral_decomposition(a);
    numeric::check_cluster_count(d, exact::squarefree_part(exact::char_poly(exact_m)));
    MatrixXd sum = MatrixXd::Zero(a.rows(), a.cols());
    MatrixXd recon = sum;
    for (std::size_t r = 0; r < d.projectors.size(); ++r) {
      sum += d.projectors[r];
      recon += d.eigenvalues[r] * d.projectors[r];
      for (std::size_t s = 0; s < d.projectors.size(); ++s) {
        const MatrixXd expected = r == s ? d.projectors[r] : MatrixXd::Zero(a.rows(), a.cols());
        CHECK(max_abs(d.projectors[r] * d.projectors[s] - expected) <= 1e-8);
      }
      CHECK(std::abs(d.projectors[r].trace() - d.multiplicities[r]) < 1e-8);
    }
    CHECK(max_abs(sum - MatrixXd::Identity(a.rows(), a.cols())) <= 1e-9);
    CHECK(max_abs(recon - a) <= 1e-8);
  }
}

TEST_CASE("cluster count mismatch is diagnosed") {
  const auto d = numeric::spectral_decomposition(adjacency("complete:3"));
  CHECK_THROWS_AS(numeric::check_cluster_count(d, exact::Polynomial{0, 0, 0, 1}), ClusteringError);
}

TEST_CASE("transition matrix") {
  const auto d = numeric::spectral_decomposition(adjacency("path:2"));
  CHECK(max_abs((numeric::transition_matrix(d, 0.0) - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs()) <
        1e-12);
  const auto h = numeric::transition_matrix(d, std::numbers::pi / 2);
  Eigen::MatrixXcd it(2, 2);
  it << 0, std::complex<double>(0, 1), std::complex<double>(0, 1), 0;
  CHECK(max_abs((h - it).cwiseAbs()) < 1e-12);
  CHECK(std::abs(numeric::transition_matrix(d, std::numbers::pi)(0, 1)) < 1e-12);

  const auto c7 = numeric::spectral_decomposition(adjacency("cycle:7"));
  for (double t : {0.3, 1.7, 12.5}) {
    const auto u = numeric::transition_matrix(c7, t);
    CHECK(max_abs((u * u.adjoint() - Eigen::MatrixXcd::Identity(7, 7)).cwiseAbs()) < 1e-8);
    CHECK(max_abs((u - u.transpose()).cwiseAbs()) < 1e-8);
  }
}

TEST_CASE("mixing matrix at fixed times") {
  const auto p2 = numeric::spectral_decomposition(adjacency("path:2"));
  CHECK(max_abs(numeric::mixing_at(p2, 0.0) - MatrixXd::Identity(2, 2)) < 1e-12);
  CHECK(max_abs(numeric::mixing_at(p2, std::numbers::pi / 4) - MatrixXd::Constant(2, 2, 0.5)) < 1e-12);

  std::mt19937 rng(61);
  std::uniform_real_distribution<double> time(0.0, 100.0);
  for (const char* g : {"path:5", "cycle:6", "circulant:9:1,3", "complete:4"}) {
    const MatrixXd a = adjacency(g);
    const auto d = numeric::spectral_decomposition(a);
    for (int k = 0; k < 20; ++k) {
      const double t = time(rng);
      const MatrixXd m = numeric::mixing_at(d, t);
      const auto h = numeric::transition_matrix(d, t);
      const MatrixXd schur = h.cwiseProduct(numeric::transition_matrix(d, -t)).real();
      CHECK(max_abs(m - schur) <= 1e-10);
      CHECK(m.minCoeff() >= -1e-10);
      CHECK((m.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-8);
      CHECK((m.colwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-8);
      const MatrixXd gap = MatrixXd::Identity(a.rows(), a.cols()) - m;
      Eigen::SelfAdjointEigenSolver<MatrixXd> solver(gap);
      CHECK(solver.eigenvalues().minCoeff() >= -1e-8);
    }
  }
}

TEST_CASE("finite-horizon average") {
  const auto c5 = numeric::spectral_decomposition(adjacency("cycle:5"));
  const MatrixXd target =
      MatrixXd::Constant(5, 5, 4.0 / 25.0) + MatrixXd::Identity(5, 5) / 5.0;
  CHECK(max_abs(numeric::average_upto(c5, 1e6) - target) <= 1e-5);
  CHECK(max_abs(numeric::numeric_avg_mixing(c5) - target) <= 1e-10);

  const auto k1 = numeric::spectral_decomposition(MatrixXd::Zero(1, 1));
  for (double horizon : {0.5, 10.0, 1e5}) CHECK(numeric::average_upto(k1, horizon)(0, 0) == 1.0);

  const auto p2 = numeric::spectral_decomposition(adjacency("path:2"));
  CHECK(max_abs(numeric::average_upto(p2, std::numbers::pi) - MatrixXd::Constant(2, 2, 0.5)) < 1e-12);
  CHECK_THROWS_AS(numeric::average_upto(p2, 0.0), DomainError);
  CHECK_THROWS_AS(numeric::average_upto(p2, -1.0), DomainError);

  const double e3 = max_abs(numeric::average_upto(c5, 1e3) - target);
  const double e4 = max_abs(numeric::average_upto(c5, 1e4) - target);
  CHECK(e3 / e4 >= 8.0);
}

TEST_CASE("numeric average mixing examples") {
  CHECK(max_abs(numeric::numeric_avg_mixing(numeric::spectral_decomposition(adjacency("path:2"))) -
                MatrixXd::Constant(2, 2, 0.5)) < 1e-12);
  const MatrixXd k3 = numeric::numeric_avg_mixing(numeric::spectral_decomposition(adjacency("complete:3")));
  CHECK(std::abs(k3(0, 0) - 5.0 / 9.0) < 1e-10);
  CHECK(std::abs(k3(0, 2) - 2.0 / 9.0) < 1e-10);
  const MatrixXd c5 = numeric::numeric_avg_mixing(numeric::spectral_decomposition(adjacency("cycle:5")));
  CHECK(std::abs(c5(1, 1) - 0.36) < 1e-10);
  CHECK(std::abs(c5(1, 3) - 0.16) < 1e-10);
}
