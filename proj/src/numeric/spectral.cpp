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

#include "qwmix/numeric/spectral.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "qwmix/error.hpp"

namespace qwmix::numeric {

Eigen::MatrixXd to_eigen(const exact::Matrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

double default_tolerance(const Eigen::MatrixXd& m) {
  const double scale = m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
  return 1e-9 * static_cast<double>(m.rows()) * scale;
}

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXd& m, std::optional<double> tol) {
  if (m.rows() != m.cols()) throw DomainError("spectral decomposition needs a square matrix");
  const double scale = m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("spectral decomposition needs a symmetric matrix");
  SpectralDecomposition d;
  d.tolerance = tol.value_or(default_tolerance(m));
  if (d.tolerance <= 0) throw DomainError("clustering tolerance must be positive");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw ClusteringError("symmetric eigensolver failed");
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const Eigen::Index n = m.rows();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && values(end) - values(end - 1) <= d.tolerance) ++end;
    const auto block = vectors.middleCols(start, end - start);
    d.projectors.push_back(block * block.transpose());
    d.eigenvalues.push_back(values.segment(start, end - start).mean());
    d.multiplicities.push_back(static_cast<int>(end - start));
    start = end;
  }
  return d;
}

void check_cluster_count(const SpectralDecomposition& d, const exact::Polynomial& psi) {
  if (static_cast<int>(d.eigenvalues.size()) != psi.degree())
    throw ClusteringError("numeric clustering found " + std::to_string(d.eigenvalues.size()) +
                          " eigenvalues but the minimal polynomial has degree " +
                          std::to_string(psi.degree()));
}

Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& d, double t) {
  const Eigen::Index n = d.order();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t r = 0; r < d.eigenvalues.size(); ++r)
    h += std::polar(1.0, d.eigenvalues[r] * t) * d.projectors[r].cast<std::complex<double>>();
  return h;
}

namespace {

template <typename Weight>
Eigen::MatrixXd pair_expansion(const SpectralDecomposition& d, Weight&& weight) {
  const Eigen::Index n = d.order();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < d.eigenvalues.size(); ++r) {
    out += d.projectors[r].cwiseProduct(d.projectors[r]);
    for (std::size_t s = r + 1; s < d.eigenvalues.size(); ++s)
      out += 2.0 * weight(d.eigenvalues[r] - d.eigenvalues[s]) *
             d.projectors[r].cwiseProduct(d.projectors[s]);
  }
  return out;
}

}  // namespace

Eigen::MatrixXd mixing_at(const SpectralDecomposition& d, double t) {
  return pair_expansion(d, [t](double delta) { return std::cos(delta * t); });
}

Eigen::MatrixXd average_upto(const SpectralDecomposition& d, double horizon) {
  if (!(horizon > 0)) throw DomainError("averaging horizon must be positive");
  return pair_expansion(d, [horizon](double delta) {
    const double x = delta * horizon;
    return std::sin(x) / x;
  });
}

Eigen::MatrixXd numeric_avg_mixing(const SpectralDecomposition& d) {
  const Eigen::Index n = d.order();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : d.projectors) out += e.cwiseProduct(e);
  return out;
}

}  // namespace qwmix::numeric
