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

#ifndef QWMIX_EXACT_ALGEBRA_HPP
#define QWMIX_EXACT_ALGEBRA_HPP

// Polynomial machinery that lets spectral quantities of a rational matrix be
// summed over its eigenvalues without ever isolating an eigenvalue: every
// sum over the roots of a minimal polynomial psi becomes a trace in Q[y]/(psi).

#include <cstddef>
#include <vector>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/exact/polynomial.hpp"

namespace qwmix::exact {

/// det(xI - m), monic of degree rows(m). Division-free Berkowitz recursion
/// run over the integers after clearing denominators.
Polynomial char_poly(const Matrix& m);

/// p(m) by Horner's rule in the matrix argument.
Matrix evaluate(const Polynomial& p, const Matrix& m);

/// p / gcd(p, p'), monic. For a diagonalizable matrix applied to its
/// characteristic polynomial this is the minimal polynomial.
Polynomial squarefree_part(const Polynomial& p);

/// Res(a, b) by the Euclidean remainder sequence over Q.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// (-1)^{m(m-1)/2} Res(p, p') / lc(p) for deg p = m >= 1.
Rational discriminant(const Polynomial& p);

/// w with a*w = 1 mod m and deg w < deg m.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

/// p_0..p_upto, p_k = sum of k-th powers of the roots of monic p
/// (with multiplicity), via Newton's identities.
std::vector<Rational> power_sums(const Polynomial& p, std::size_t upto);

/// Sum of h over the roots of monic psi (with multiplicity). Any degree of
/// h is accepted: the sum only depends on h mod psi.
Rational trace_mod(const Polynomial& h, const Polynomial& psi);

/// Coefficients B_0..B_{m-1} of Phi(M, y) = sum_j B_j y^j, where
/// psi(x) - psi(y) = (x - y) Phi(x, y). At a root theta of psi,
/// Phi(M, theta) / psi'(theta) is the spectral idempotent of M for theta.
struct ResolventCoefficients {
  std::vector<Matrix> matrices;
};

/// Throws NotAnnihilatingError unless psi(M) = 0.
ResolventCoefficients resolvent_coeffs(const Matrix& m, const Polynomial& psi);

}  // namespace qwmix::exact

#endif  // QWMIX_EXACT_ALGEBRA_HPP
