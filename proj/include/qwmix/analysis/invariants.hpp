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

#ifndef QWMIX_ANALYSIS_INVARIANTS_HPP
#define QWMIX_ANALYSIS_INVARIANTS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/mixing/average_mixing.hpp"

namespace qwmix::analysis {

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class CheckSet { all, psd, stochastic, integrality };

CheckSet parse_check_set(std::string_view text);

/// Structural checks on the average mixing matrix of `input`:
///   stochastic   symmetric, rows sum to 1, entries >= 0, entry (u,v) > 0
///                exactly when u and v share a component
///   psd          exact principal minors (n <= 8) or numeric spectrum >= -1e-9,
///                and all eigenvalues <= 1 + 1e-9
///   integrality  disc(psi)^2 M integral; disc(phi) M integral if simple
///   all          the above plus M != J/n for n >= 3 and agreement with the
///                numeric sum of squared projectors within 1e-8
std::vector<InvariantResult> check_invariants(const exact::Matrix& input,
                                              const mixing::AvgMixReport& report,
                                              CheckSet which = CheckSet::all);

/// Tally of the open question whether disc(psi) M is always integral.
struct MinpolyIntegralitySurvey {
  std::size_t examined = 0;
  std::size_t integral = 0;
  std::vector<std::size_t> exceptions;  // indices into the surveyed inputs
};

MinpolyIntegralitySurvey survey_minpoly_integrality(std::span<const exact::Matrix> inputs);

}  // namespace qwmix::analysis

#endif  // QWMIX_ANALYSIS_INVARIANTS_HPP
