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

#include "qwmix/schemes/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

#include "qwmix/analysis/closed_form.hpp"
#include "qwmix/numeric/spectral.hpp"

namespace qwmix::schemes {

namespace {

using Dense = std::vector<std::int64_t>;

std::string describe(const std::vector<AxiomViolation>& violations) {
  std::string text = "association scheme axioms violated:";
  for (const auto& v : violations)
    text += " (" + v.axiom + ") classes " + std::to_string(v.i) + "," + std::to_string(v.j) + ": " +
            v.detail + ";";
  return text;
}

Dense to_dense(const exact::Matrix& m) {
  Dense out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      if (x != 0 && x != 1) throw DomainError("scheme matrices must have 0/1 entries");
      out[r * m.cols() + c] = x == 1 ? 1 : 0;
    }
  return out;
}

Dense multiply(const Dense& a, const Dense& b, std::size_t n) {
  Dense out(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t x = a[r * n + k];
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] += x * b[k * n + c];
    }
  return out;
}

Dense transpose(const Dense& a, std::size_t n) {
  Dense out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[c * n + r] = a[r * n + c];
  return out;
}

// Common eigenprojectors from a generic element of the Bose-Mesner algebra:
// its eigenspaces are exactly the d+1 common eigenspaces.
void attach_projectors(AssociationScheme& s) {
  const std::size_t n = s.order();
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(n),
                                                          static_cast<Eigen::Index>(n),
                                                          1.0 / static_cast<double>(n));
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> coefficient(1.0, 2.0);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Eigen::MatrixXd generic = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i <= s.classes; ++i)
      generic += coefficient(rng) * numeric::to_eigen(s.matrices[i]);
    const auto d = numeric::spectral_decomposition(generic);
    if (d.projectors.size() != s.classes + 1) continue;

    struct Idempotent {
      Eigen::MatrixXd projector;
      std::size_t rank;
      bool trivial;
      std::vector<double> eigenvalues;  // of A_1..A_d on this eigenspace
    };
    std::vector<Idempotent> found;
    for (const auto& e : d.projectors) {
      const double trace = e.trace();
      const double rank = std::round(trace);
      if (std::abs(trace - rank) > 1e-6 || rank < 1)
        throw ClusteringError("eigenprojector trace " + std::to_string(trace) + " is not an integer");
      Idempotent item{e, static_cast<std::size_t>(rank), (e - ones).cwiseAbs().maxCoeff() < 1e-6, {}};
      for (std::size_t i = 1; i <= s.classes; ++i)
        item.eigenvalues.push_back((numeric::to_eigen(s.matrices[i]) * e).trace() / rank);
      found.push_back(std::move(item));
    }
    // Trivial idempotent first, then by decreasing eigenvalue of A_1, A_2, ...
    std::sort(found.begin(), found.end(), [](const Idempotent& x, const Idempotent& y) {
      if (x.trivial != y.trivial) return x.trivial;
      for (std::size_t i = 0; i < x.eigenvalues.size(); ++i)
        if (std::abs(x.eigenvalues[i] - y.eigenvalues[i]) > 1e-6) return x.eigenvalues[i] > y.eigenvalues[i];
      return false;
    });
    if (!found.front().trivial) throw ClusteringError("no eigenprojector equals J/n");
    std::vector<Eigen::MatrixXd> projectors;
    std::vector<std::size_t> ranks;
    for (auto& item : found) {
      projectors.push_back(std::move(item.projector));
      ranks.push_back(item.rank);
    }
    s.projectors = std::move(projectors);
    s.multiplicities = std::move(ranks);
    return;
  }
  throw ClusteringError("could not separate the " + std::to_string(s.classes + 1) +
                        " common eigenspaces");
}

}  // namespace

SchemeAxiomError::SchemeAxiomError(std::vector<AxiomViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

bool SchemeAxiomError::violates(std::string_view axiom) const {
  for (const auto& v : violations_)
    if (v.axiom == axiom) return true;
  return false;
}

AssociationScheme verify_scheme(const std::vector<exact::Matrix>& matrices) {
  if (matrices.empty()) throw DomainError("a scheme needs at least the identity class");
  const std::size_t n = matrices.front().rows();
  if (n == 0) throw DomainError("scheme matrices must be nonempty");
  for (const auto& m : matrices)
    if (m.rows() != n || m.cols() != n)
      throw DimensionError("scheme matrices must be square of equal order");

  const std::size_t count = matrices.size();
  std::vector<Dense> a;
  a.reserve(count);
  for (const auto& m : matrices) a.push_back(to_dense(m));

  std::vector<AxiomViolation> violations;
  if (matrices.front() != exact::Matrix::identity(n))
    violations.push_back({"a", 0, 0, "A_0 is not the identity"});
  for (std::size_t x = 0; x < n * n; ++x) {
    std::int64_t total = 0;
    for (const auto& m : a) total += m[x];
    if (total != 1) {
      violations.push_back({"a", 0, 0,
                            "classes do not partition J at entry (" + std::to_string(x / n) + "," +
                                std::to_string(x % n) + ")"});
      break;
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    const Dense t = transpose(a[i], n);
    bool closed = false;
    for (const auto& m : a) closed = closed || m == t;
    if (!closed) violations.push_back({"b", i, i, "transpose of A_i is not a class"});
  }

  std::vector<std::vector<std::vector<std::size_t>>> intersection(
      count, std::vector<std::vector<std::size_t>>(count, std::vector<std::size_t>(count, 0)));
  std::vector<std::vector<Dense>> products(count, std::vector<Dense>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) products[i][j] = multiply(a[i], a[j], n);

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (products[i][j] != products[j][i])
        violations.push_back({"c", i, j, "A_i A_j differs from A_j A_i"});

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const Dense& p = products[i][j];
      Dense residual = p;
      for (std::size_t k = 0; k < count; ++k) {
        std::int64_t value = -1;
        bool constant = true;
        for (std::size_t x = 0; x < n * n && constant; ++x) {
          if (a[k][x] == 0) continue;
          if (value < 0) value = p[x];
          constant = p[x] == value;
        }
        if (!constant) {
          violations.push_back({"d", i, j, "A_i A_j is not constant on class " + std::to_string(k)});
          continue;
        }
        if (value > 0) {
          intersection[i][j][k] = static_cast<std::size_t>(value);
          for (std::size_t x = 0; x < n * n; ++x) residual[x] -= value * a[k][x];
        }
      }
      bool in_span = true;
      for (auto r : residual) in_span = in_span && r == 0;
      if (!in_span) violations.push_back({"d", i, j, "A_i A_j is not in the span of the classes"});
    }

  if (!violations.empty()) throw SchemeAxiomError(std::move(violations));

  for (std::size_t i = 0; i < count; ++i)
    if (!matrices[i].is_symmetric())
      throw UnsupportedError("non-symmetric association schemes are not supported (class " +
                             std::to_string(i) + ")");

  AssociationScheme s;
  s.classes = count - 1;
  s.matrices = matrices;
  s.intersection = std::move(intersection);
  for (const auto& m : a) {
    std::size_t row_sum = 0;
    for (std::size_t c = 0; c < n; ++c) row_sum += static_cast<std::size_t>(m[c]);
    s.valencies.push_back(row_sum);
  }
  attach_projectors(s);
  return s;
}

bool is_pseudocyclic(const AssociationScheme& s) {
  for (std::size_t j = 2; j <= s.classes; ++j)
    if (s.multiplicities[j] != s.multiplicities[1]) return false;
  for (std::size_t i = 1; i <= s.classes; ++i)
    if (s.valencies[i] * s.classes != s.order() - 1)
      throw std::logic_error("pseudocyclic scheme with valency other than (n-1)/d");
  return true;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

std::size_t primitive_root(std::size_t q) {
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  std::vector<std::size_t> factors;
  std::size_t rest = q - 1;
  for (std::size_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      factors.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) factors.push_back(rest);
  const auto power = [q](std::size_t base, std::size_t e) {
    std::uint64_t result = 1, b = base % q;
    for (; e > 0; e >>= 1, b = b * b % q)
      if (e & 1) result = result * b % q;
    return result;
  };
  for (std::size_t g = 2; g < q; ++g) {
    bool generates = true;
    for (std::size_t p : factors) generates = generates && power(g, (q - 1) / p) != 1;
    if (generates) return g;
  }
  throw std::logic_error("prime without a primitive root");
}

AssociationScheme cyclotomic_scheme(std::size_t q, std::size_t d) {
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
  if (d == 0 || (q - 1) % d != 0)
    throw DomainError("d = " + std::to_string(d) + " does not divide q - 1 = " + std::to_string(q - 1));
  const std::size_t g = primitive_root(q);
  // coset[x] = i when x lies in g^i times the d-th powers.
  std::vector<std::size_t> coset(q, 0);
  std::size_t x = 1;
  for (std::size_t e = 0; e < q - 1; ++e, x = x * g % q) coset[x] = e % d;
  if (coset[q - 1] != 0)
    throw UnsupportedError("-1 is not of the form x^" + std::to_string(d) + " modulo " +
                           std::to_string(q) + ", so the scheme is not symmetric");

  std::vector<exact::Matrix> matrices(d + 1, exact::Matrix(q, q));
  for (std::size_t u = 0; u < q; ++u)
    for (std::size_t v = 0; v < q; ++v) {
      const std::size_t diff = (v + q - u) % q;
      matrices[diff == 0 ? 0 : coset[diff] + 1](u, v) = 1;
    }
  AssociationScheme s = verify_scheme(matrices);
  if (!is_pseudocyclic(s)) throw std::logic_error("cyclotomic scheme is not pseudocyclic");
  return s;
}

graphs::WeightedGraph class_graph(const AssociationScheme& s, std::size_t i) {
  if (i < 1 || i > s.classes)
    throw IndexError("class index " + std::to_string(i) + " outside 1.." + std::to_string(s.classes));
  const std::size_t n = s.order();
  std::vector<std::vector<std::int64_t>> weights(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) weights[u][v] = s.matrices[i](u, v) == 1 ? 1 : 0;
  return graphs::WeightedGraph::from_weights(weights);
}

bool koppinen_schur_check(const AssociationScheme& s) {
  const auto n = static_cast<Eigen::Index>(s.order());
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i <= s.classes; ++i)
    lhs += numeric::to_eigen(s.matrices[i]) /
           (static_cast<double>(n) * static_cast<double>(s.valencies[i]));
  for (std::size_t j = 0; j <= s.classes; ++j)
    rhs += s.projectors[j].cwiseProduct(s.projectors[j]) / static_cast<double>(s.multiplicities[j]);
  return (lhs - rhs).cwiseAbs().maxCoeff() <= 1e-8;
}

bool pseudocyclic_mixing_check(const AssociationScheme& s) {
  if (!is_pseudocyclic(s)) throw DomainError("scheme is not pseudocyclic");
  for (std::size_t i = 1; i <= s.classes; ++i) {
    const analysis::ClosedForm form{analysis::Family::pseudocyclic, s.order(), s.valencies[i]};
    if (!analysis::verify_closed_form(form, class_graph(s, i))) return false;
  }
  return true;
}

}  // namespace qwmix::schemes
