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

#ifndef QWMIX_MIXING_AVERAGE_MIXING_HPP
#define QWMIX_MIXING_AVERAGE_MIXING_HPP

#include <cstddef>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/exact/polynomial.hpp"

namespace qwmix::mixing {

/// Integrality certificates for the average mixing matrix M.
struct Certificates {
  /// disc(psi)^2 * M is integral. Always holds for integer symmetric input.
  bool d2_integral = false;
  /// disc(phi) * M is integral when the spectrum is simple; vacuously true
  /// otherwise.
  bool d_integral_simple = false;
  /// disc(psi) * M is integral. Observational only: nobody has proved it.
  bool d_integral_minpoly = false;
};

struct AvgMixReport {
  exact::Matrix mixing;
  exact::Polynomial min_poly;
  exact::Polynomial char_poly;
  exact::Rational disc_min;
  exact::Rational disc_char;
  bool simple_spectrum = false;
  exact::Integer common_denominator;
  Certificates certificates;
};

/// Exact average mixing matrix of the continuous walk exp(itM) for a
/// symmetric integer matrix M, computed as sum_r E_r o E_r without
/// representing any eigenvalue. Throws DomainError for non-square,
/// non-symmetric or non-integer input.
AvgMixReport average_mixing(const exact::Matrix& m);

Certificates certify_integrality(const AvgMixReport& report);

/// True iff columns u and v of the mixing matrix coincide, i.e. M(e_u - e_v) = 0.
/// Throws IndexError for vertices out of range.
bool strong_cospectral_kernel(const AvgMixReport& report, std::size_t u, std::size_t v);

// Building blocks shared with the discrete-walk module. Both require psi to
// be the (square-free) minimal polynomial of a diagonalizable m; neither
// needs m symmetric.

/// sum_r E_r o E_r over the spectral idempotents of m.
exact::Matrix idempotent_square_sum(const exact::Matrix& m, const exact::Polynomial& psi);

/// sum_r E_r o E_{r*}, where theta_{r*} = 1 / theta_r. For a real orthogonal
/// matrix E_{r*} is the complex conjugate of E_r. Throws NonInvertibleError
/// when 0 is a root of psi.
exact::Matrix idempotent_inverse_pair_sum(const exact::Matrix& m, const exact::Polynomial& psi);

}  // namespace qwmix::mixing

#endif  // QWMIX_MIXING_AVERAGE_MIXING_HPP
