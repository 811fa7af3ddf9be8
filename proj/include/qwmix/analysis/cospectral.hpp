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

#ifndef QWMIX_ANALYSIS_COSPECTRAL_HPP
#define QWMIX_ANALYSIS_COSPECTRAL_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "qwmix/exact/matrix.hpp"
#include "qwmix/graphs/graph.hpp"
#include "qwmix/mixing/average_mixing.hpp"

namespace qwmix::analysis {

// Vertex-pair analyses. Graph overloads use the adjacency matrix; the matrix
// overloads accept any symmetric integer matrix (e.g. a Laplacian).

/// Exact test: char_poly(M \ u) == char_poly(M \ v). The closed-walk counts
/// (M^k)_uu = (M^k)_vv for k < n are checked as a redundant route; a
/// disagreement raises std::logic_error.
bool are_cospectral(const exact::Matrix& m, std::size_t u, std::size_t v);
bool are_cospectral(const graphs::WeightedGraph& g, std::size_t u, std::size_t v);

/// Kernel test M(e_u - e_v) = 0 on the average mixing matrix. Asserts that
/// strong cospectrality implies cospectrality, and that the two coincide
/// when the spectrum is simple.
bool are_strongly_cospectral(const exact::Matrix& m, const mixing::AvgMixReport& report,
                             std::size_t u, std::size_t v);
bool are_strongly_cospectral(const graphs::WeightedGraph& g, std::size_t u, std::size_t v);

/// All vertex-deleted characteristic polynomials are equal.
bool is_walk_regular(const exact::Matrix& m);
bool is_walk_regular(const graphs::WeightedGraph& g);

enum class PstStatus { candidate, blocked };

struct PstVerdict {
  PstStatus status = PstStatus::blocked;
  std::string reason;
  /// Rows of the mixing matrix are pairwise distinct, so no pair of the
  /// graph can admit perfect state transfer.
  bool no_pst_anywhere = false;
};

std::string_view to_string(PstStatus status);

/// Necessary condition for perfect state transfer u -> v. CANDIDATE only
/// means the condition holds; sufficiency is not decided.
PstVerdict pst_necessary(const mixing::AvgMixReport& report, std::size_t u, std::size_t v);
PstVerdict pst_necessary(const graphs::WeightedGraph& g, std::size_t u, std::size_t v);

/// Every pair of vertices is strongly cospectral (all mixing rows equal).
bool all_strongly_cospectral_check(const mixing::AvgMixReport& report);
bool all_strongly_cospectral_check(const graphs::WeightedGraph& g);

/// IJ: in span{I, J}. IJT: in span{I, J, T} with T the reversal of the
/// vertex order. OTHER otherwise. Decided by an exact linear solve.
enum class SpanClass { ij, ijt, other };

std::string_view to_string(SpanClass c);
SpanClass ij_span_check(const mixing::AvgMixReport& report);

}  // namespace qwmix::analysis

#endif  // QWMIX_ANALYSIS_COSPECTRAL_HPP
