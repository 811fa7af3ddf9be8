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

#include <random>

#include "qwmix/error.hpp"
#include "qwmix/exact/algebra.hpp"
#include "qwmix/graphs/graph.hpp"
#include "qwmix/numeric/spectral.hpp"
#include "support.hpp"

using namespace qwmix;
using exact::Matrix;
using exact::Polynomial;
using exact::Rational;
using testing::q;

namespace {

// Resultant oracle: determinant of the Sylvester matrix.
Rational sylvester_resultant(const Polynomial& a, const Polynomial& b) {
  const int m = a.degree();
  const int n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) =
          a.coefficient(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) =
          b.coefficient(static_cast<std::size_t>(n - k));
  return exact::determinant(s);
}

Polynomial random_poly(std::mt19937& rng, int degree, int lo, int hi, bool monic) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = dist(rng);
  if (monic || c.back() == 0) c.back() = 1;
  return Polynomial(c);
}

Matrix p6_with_loops() {
  auto g = graphs::add_loops(graphs::path(6), {{0, 2}, {5, 2}});
  return graphs::matrix_of(g, graphs::Basis::adjacency);
}

}  // namespace

TEST_CASE("rational text form is canonical") {
  CHECK(exact::to_string(q(2, 4)) == "1/2");
  CHECK(exact::to_string(q(3, -6)) == "-1/2");
  CHECK(exact::to_string(q(0, 5)) == "0");
  CHECK(exact::to_string(q(4, 2)) == "2");
  CHECK(exact::parse_rational("6/4") == q(3, 2));
  CHECK_THROWS_AS(exact::parse_rational("6/-4"), DomainError);
  CHECK(exact::to_string(exact::parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(exact::parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(exact::parse_rational("x"), DomainError);
  CHECK_THROWS_AS(exact::parse_rational(""), DomainError);
}

TEST_CASE("rationals stay reduced with positive denominators") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    long d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = -1;
    const Rational r = q(dist(rng), d1) * q(dist(rng), d2) + q(dist(rng), d2);
    CHECK(r.get_den() > 0);
    exact::Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("char_poly examples") {
  CHECK(exact::char_poly(Matrix::from_integers({{0, 1}, {1, 0}})) == Polynomial{-1, 0, 1});
  const auto k3 = graphs::matrix_of(graphs::complete(3), graphs::Basis::adjacency);
  CHECK(exact::char_poly(k3) == Polynomial{-2, -3, 0, 1});
  CHECK(exact::char_poly(Matrix(1, 1)) == Polynomial{0, 1});
  CHECK(exact::char_poly(Matrix(0, 0)) == Polynomial{1});
  CHECK_THROWS_AS(exact::char_poly(Matrix(2, 3)), DimensionError);
}

TEST_CASE("char_poly agrees with det(xI - M) and annihilates M") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    Matrix m = testing::random_symmetric(rng, n, -3, 3);
    if (trial % 3 == 0) {
      // non-symmetric rational input exercises the denominator scaling
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = q(small(rng), 1 + (trial % 4));
    }
    const Polynomial phi = exact::char_poly(m);
    REQUIRE(phi.degree() == static_cast<int>(n));
    CHECK(phi.is_monic());
    CHECK(exact::evaluate(phi, m).is_zero());
    for (long x : {-2L, 0L, 3L}) {
      Matrix shifted = m * Rational(-1);
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += x;
      CHECK(phi(Rational(x)) == exact::determinant(shifted));
    }
    if (m.is_symmetric()) CHECK(exact::evaluate(exact::squarefree_part(phi), m).is_zero());
  }
}

TEST_CASE("squarefree_part examples") {
  CHECK(exact::squarefree_part(Polynomial{0, 0, -1, 1}) == Polynomial{0, -1, 1});
  CHECK(exact::squarefree_part(Polynomial{-2, -3, 0, 1}) == Polynomial{-2, -1, 1});
  CHECK(exact::squarefree_part(Polynomial{-2, 0, 1}) == Polynomial{-2, 0, 1});
  CHECK_THROWS_AS(exact::squarefree_part(Polynomial{}), DomainError);
}

TEST_CASE("discriminant examples") {
  CHECK(exact::discriminant(Polynomial{-1, 0, 1}) == 4);
  CHECK(exact::discriminant(Polynomial{0, 0, 1}) == 0);
  CHECK(exact::discriminant(Polynomial{5, 3}) == 1);
  // 2^6 3^5 107
  CHECK(exact::discriminant(exact::char_poly(p6_with_loops())) == 64 * 243 * 107);
  CHECK_THROWS_AS(exact::discriminant(Polynomial{7}), DomainError);
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_poly(rng, deg(rng), -4, 4, false);
    const Polynomial b = random_poly(rng, deg(rng), -4, 4, false);
    CHECK(exact::resultant(a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("discriminant vanishes exactly for repeated roots") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> deg(1, 4);
  int repeated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = random_poly(rng, deg(rng), -2, 2, false);
    if (trial % 4 == 0) p = p * random_poly(rng, 1, -2, 2, false);
    if (trial % 8 == 0) p = p * p;
    if (p.degree() < 1) continue;
    const bool has_repeat = exact::gcd(p, p.derivative()).degree() > 0;
    repeated += has_repeat;
    CHECK((exact::discriminant(p) == 0) == has_repeat);
    const int m = p.degree();
    Rational classical = sylvester_resultant(p, p.derivative()) / p.leading();
    if ((m * (m - 1) / 2) % 2 == 1) classical = -classical;
    CHECK(exact::discriminant(p) == classical);
  }
  CHECK(repeated > 10);
}

TEST_CASE("inverse_mod examples") {
  CHECK(exact::inverse_mod(Polynomial{0, 1}, Polynomial{-2, 0, 1}) ==
        Polynomial(std::vector<Rational>{0, q(1, 2)}));
  CHECK(exact::inverse_mod(Polynomial{1}, Polynomial{3, 1, 4, 1}) == Polynomial{1});
  CHECK_THROWS_AS(exact::inverse_mod(Polynomial{0, 1}, Polynomial{0, 0, 1}), NonInvertibleError);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial m = random_poly(rng, 1 + trial % 6, -5, 5, true);
    const Polynomial a = random_poly(rng, trial % 5, -5, 5, false);
    if (exact::gcd(a, m).degree() != 0) continue;
    const Polynomial w = exact::inverse_mod(a, m);
    CHECK(w.degree() < m.degree());
    CHECK((a * w) % m == Polynomial{1});
  }
}

TEST_CASE("power_sums examples") {
  CHECK(exact::power_sums(Polynomial{-1, 0, 1}, 2) == std::vector<Rational>{2, 0, 2});
  CHECK(exact::power_sums(Polynomial{-2, -1, 1}, 2) == std::vector<Rational>{2, 1, 5});
  CHECK(exact::power_sums(Polynomial{-3, 1}, 3) == std::vector<Rational>{1, 3, 9, 27});
  CHECK_THROWS_AS(exact::power_sums(Polynomial{-3, 2}, 3), DomainError);
}

TEST_CASE("trace_mod examples") {
  CHECK(exact::trace_mod(Polynomial{1}, Polynomial{-1, 0, 1}) == 2);
  CHECK(exact::trace_mod(Polynomial{0, 1}, Polynomial{-2, -1, 1}) == 1);
  CHECK(exact::trace_mod(Polynomial{0, 0, 1}, Polynomial{-1, 0, 1}) == 2);
  CHECK(exact::trace_mod(Polynomial{}, Polynomial{-1, 0, 1}) == 0);
  CHECK_THROWS_AS(exact::trace_mod(Polynomial{1}, Polynomial{4}), DomainError);
}

TEST_CASE("trace_mod agrees with floating sums over numeric roots") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> deg(1, 8);
  int checked = 0;
  while (checked < 50) {
    const Polynomial psi = random_poly(rng, deg(rng), -5, 5, true);
    if (exact::discriminant(psi) == 0) continue;
    const Polynomial h = random_poly(rng, psi.degree() - 1, -3, 3, false);
    const auto roots = testing::numeric_roots(psi);
    std::complex<double> sum = 0;
    for (const auto& r : roots) {
      std::complex<double> acc = 0;
      const auto hc = h.coefficients();
      for (auto it = hc.rbegin(); it != hc.rend(); ++it) acc = acc * r + it->get_d();
      sum += acc;
    }
    const double exact_value = exact::trace_mod(h, psi).get_d();
    CHECK(std::abs(sum.real() - exact_value) <= 1e-9 * std::max(1.0, std::abs(exact_value)));
    CHECK(std::abs(sum.imag()) <= 1e-9 * std::max(1.0, std::abs(exact_value)));
    ++checked;
  }
}

TEST_CASE("resolvent_coeffs examples") {
  const Matrix p2 = Matrix::from_integers({{0, 1}, {1, 0}});
  auto r = exact::resolvent_coeffs(p2, Polynomial{-1, 0, 1});
  REQUIRE(r.matrices.size() == 2);
  CHECK(r.matrices[0] == p2);
  CHECK(r.matrices[1] == Matrix::identity(2));

  r = exact::resolvent_coeffs(Matrix(1, 1), Polynomial{0, 1});
  REQUIRE(r.matrices.size() == 1);
  CHECK(r.matrices[0] == Matrix::identity(1));

  const auto k3 = graphs::matrix_of(graphs::complete(3), graphs::Basis::adjacency);
  r = exact::resolvent_coeffs(k3, Polynomial{-2, -1, 1});
  REQUIRE(r.matrices.size() == 2);
  CHECK(r.matrices[0] == k3 - Matrix::identity(3));
  CHECK(r.matrices[1] == Matrix::identity(3));

  CHECK_THROWS_AS(exact::resolvent_coeffs(p2, Polynomial{-1, 1}), NotAnnihilatingError);
}

TEST_CASE("resolvent at a root reproduces the numeric eigenprojector") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> size(1, 8);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testing::random_symmetric(rng, static_cast<std::size_t>(size(rng)), -3, 3);
    const Polynomial psi = exact::squarefree_part(exact::char_poly(m));
    const auto res = exact::resolvent_coeffs(m, psi);
    const Polynomial dpsi = psi.derivative();
    const Eigen::MatrixXd a = numeric::to_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    for (Eigen::Index k = 0; k < a.rows(); ++k) {
      const double theta = solver.eigenvalues()(k);
      Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(a.rows(), a.cols());
      double power = 1.0;
      for (const auto& b : res.matrices) {
        phi += power * numeric::to_eigen(b);
        power *= theta;
      }
      phi /= dpsi.evaluate(theta);
      CHECK((phi - testing::numeric_projector(a, theta)).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}
