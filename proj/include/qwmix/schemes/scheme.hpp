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

#ifndef QWMIX_SCHEMES_SCHEME_HPP
#define QWMIX_SCHEMES_SCHEME_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "qwmix/error.hpp"
#include "qwmix/exact/matrix.hpp"
#include "qwmix/graphs/graph.hpp"

namespace qwmix::schemes {

/// One failed axiom. Axioms are named "a" (A_0 = I and the classes sum to
/// J), "b" (closed under transpose), "c" (products commute) and "d"
/// (products lie in the span with nonnegative integer coefficients).
struct AxiomViolation {
  std::string axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string detail;
};

class SchemeAxiomError : public Error {
 public:
  explicit SchemeAxiomError(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }
  bool violates(std::string_view axiom) const;

 private:
  std::vector<AxiomViolation> violations_;
};

struct AssociationScheme {
  std::size_t classes = 0;
  std::vector<exact::Matrix> matrices;
  std::vector<std::size_t> valencies;
  /// Ranks of the common eigenprojectors; m_0 = 1 belongs to J/n.
  std::vector<std::size_t> multiplicities;
  std::vector<Eigen::MatrixXd> projectors;
  /// intersection[i][j][k] = p^k_ij, the coefficient of A_k in A_i A_j.
  std::vector<std::vector<std::vector<std::size_t>>> intersection;

  std::size_t order() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

/// Checks axioms (a) to (d) exactly and reports every violation at once.
/// Schemes that are closed under transpose but not symmetric are rejected
/// with UnsupportedError.
AssociationScheme verify_scheme(const std::vector<exact::Matrix>& matrices);

bool is_pseudocyclic(const AssociationScheme& s);

bool is_prime(std::size_t q);
std::size_t primitive_root(std::size_t q);

/// Scheme on Z_q whose classes are the cosets of the nonzero d-th powers.
/// Class 1 is the d-th power subgroup itself, so for d = 2 its graph is the
/// Paley graph.
AssociationScheme cyclotomic_scheme(std::size_t q, std::size_t d);

graphs::WeightedGraph class_graph(const AssociationScheme& s, std::size_t i);

/// Schur-compressed Koppinen identity, checked entrywise within 1e-8.
bool koppinen_schur_check(const AssociationScheme& s);

/// Exact check that every class graph of a pseudocyclic scheme has the
/// average mixing matrix ((n-m+1)/n^2)J + ((m-1)/n)I with m its valency.
bool pseudocyclic_mixing_check(const AssociationScheme& s);

}  // namespace qwmix::schemes

#endif  // QWMIX_SCHEMES_SCHEME_HPP
