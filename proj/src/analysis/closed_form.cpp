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

#include "qwmix/analysis/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwmix/error.hpp"
#include "qwmix/mixing/average_mixing.hpp"

namespace qwmix::analysis {

using exact::Matrix;
using exact::Rational;

namespace {

Rational frac(std::size_t p, std::size_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DescriptorError(what);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::path_adjacency: return "path_adjacency";
    case Family::path_laplacian: return "path_laplacian";
    case Family::cycle_odd: return "cycle_odd";
    case Family::cycle_even: return "cycle_even";
    case Family::pseudocyclic: return "pseudocyclic";
  }
  return "unknown";
}

Matrix reversal(std::size_t n) {
  Matrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) t(j, n - 1 - j) = 1;
  return t;
}

Matrix cyclic_shift_power(std::size_t n, std::size_t k) {
  Matrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(j, (j + k) % n) = 1;
  return p;
}

Matrix closed_form_matrix(const ClosedForm& form) {
  const std::size_t n = form.n;
  const Matrix id = Matrix::identity(n);
  switch (form.family) {
    case Family::path_adjacency:
      require(n >= 1, "path closed form needs n >= 1");
      return (Matrix::ones(n) * Rational(2) + id + reversal(n)) * frac(1, 2 * n + 2);
    case Family::path_laplacian:
      require(n >= 2, "path Laplacian closed form needs n >= 2");
      return (Matrix::ones(n) * frac(n - 1, 1) + (id + reversal(n)) * frac(n, 2)) *
             frac(1, n * n);
    case Family::cycle_odd:
      require(n >= 3 && n % 2 == 1, "odd-cycle closed form needs odd n >= 3");
      return Matrix::ones(n) * frac(n - 1, n * n) + id * frac(1, n);
    case Family::cycle_even:
      require(n >= 4 && n % 2 == 0, "even-cycle closed form needs even n >= 4");
      return Matrix::ones(n) * frac(n - 2, n * n) + (id + cyclic_shift_power(n, n / 2)) * frac(1, n);
    case Family::pseudocyclic:
      require(n >= 2 && form.m >= 1 && (n - 1) % form.m == 0,
              "pseudocyclic closed form needs m >= 1 dividing n - 1");
      return Matrix::ones(n) * frac(n - form.m + 1, n * n) + id * frac(form.m - 1, n);
  }
  throw DescriptorError("unknown closed-form family");
}

bool verify_closed_form(const ClosedForm& form) {
  const Matrix expected = closed_form_matrix(form);
  graphs::WeightedGraph g(1);
  graphs::Basis basis = graphs::Basis::adjacency;
  switch (form.family) {
    case Family::path_adjacency: g = graphs::path(form.n); break;
    case Family::path_laplacian:
      g = graphs::path(form.n);
      basis = graphs::Basis::laplacian;
      break;
    case Family::cycle_odd:
    case Family::cycle_even: g = graphs::cycle(form.n); break;
    case Family::pseudocyclic:
      throw DescriptorError("pseudocyclic verification needs an explicit graph");
  }
  return mixing::average_mixing(graphs::matrix_of(g, basis)).mixing == expected;
}

bool verify_closed_form(const ClosedForm& form, const graphs::WeightedGraph& g) {
  if (form.family != Family::pseudocyclic) return verify_closed_form(form);
  if (g.order() != form.n) throw DescriptorError("graph order does not match the closed form");
  return mixing::average_mixing(graphs::matrix_of(g, graphs::Basis::adjacency)).mixing ==
         closed_form_matrix(form);
}

Eigen::MatrixXd path_idempotent_oracle(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw IndexError("path idempotent index must lie in 1..n");
  const double step = static_cast<double>(r) * std::numbers::pi / static_cast<double>(n + 1);
  Eigen::VectorXd s(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) s(static_cast<Eigen::Index>(j)) = std::sin(static_cast<double>(j + 1) * step);
  return (2.0 / static_cast<double>(n + 1)) * s * s.transpose();
}

double path_eigenvalue(std::size_t n, std::size_t r) {
  return 2.0 * std::cos(static_cast<double>(r) * std::numbers::pi / static_cast<double>(n + 1));
}

Eigen::MatrixXd path_laplacian_idempotent_oracle(std::size_t n, std::size_t r) {
  if (n < 1 || r >= n) throw IndexError("path Laplacian idempotent index must lie in 0..n-1");
  const auto dn = static_cast<Eigen::Index>(n);
  if (r == 0) return Eigen::MatrixXd::Constant(dn, dn, 1.0 / static_cast<double>(n));
  const double step = static_cast<double>(r) * std::numbers::pi / (2.0 * static_cast<double>(n));
  Eigen::VectorXd c(dn);
  for (std::size_t j = 0; j < n; ++j) c(static_cast<Eigen::Index>(j)) = std::cos(static_cast<double>(2 * j + 1) * step);
  return (2.0 / static_cast<double>(n)) * c * c.transpose();
}

double path_laplacian_eigenvalue(std::size_t n, std::size_t r) {
  return 2.0 - 2.0 * std::cos(static_cast<double>(r) * std::numbers::pi / static_cast<double>(n));
}

}  // namespace qwmix::analysis
