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

#include "qwmix/analysis/invariants.hpp"

#include <sstream>

#include "qwmix/error.hpp"
#include "qwmix/graphs/graph.hpp"
#include "qwmix/numeric/spectral.hpp"

namespace qwmix::analysis {

using exact::Matrix;
using exact::Rational;

CheckSet parse_check_set(std::string_view text) {
  if (text == "all") return CheckSet::all;
  if (text == "psd") return CheckSet::psd;
  if (text == "stochastic") return CheckSet::stochastic;
  if (text == "integrality") return CheckSet::integrality;
  throw DescriptorError("unknown check set '" + std::string(text) + "'");
}

namespace {

InvariantResult result(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

std::string at(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void stochastic_checks(const Matrix& input, const Matrix& mix, std::vector<InvariantResult>& out) {
  const std::size_t n = mix.rows();
  out.push_back(result("symmetric", mix.is_symmetric()));

  std::string bad_row;
  for (std::size_t i = 0; i < n && bad_row.empty(); ++i) {
    Rational s = 0;
    for (const auto& x : mix.row(i)) s += x;
    if (s != 1) bad_row = "row " + std::to_string(i) + " sums to " + exact::to_string(s);
  }
  out.push_back(result("row_sums_one", bad_row.empty(), bad_row));

  std::string negative;
  std::string support;
  const auto labels = graphs::components(input);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (mix(u, v) < 0 && negative.empty()) negative = "negative entry at " + at(u, v);
      const bool same = labels[u] == labels[v];
      if ((mix(u, v) > 0) != same && support.empty())
        support = (same ? "zero entry inside a component at " : "nonzero entry across components at ") +
                  at(u, v);
    }
  out.push_back(result("nonnegative", negative.empty(), negative));
  out.push_back(result("positive_iff_connected", support.empty(), support));
}

void psd_checks(const Matrix& mix, std::vector<InvariantResult>& out) {
  const Eigen::MatrixXd numeric_mix = numeric::to_eigen(mix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(numeric_mix, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (mix.rows() <= 8) {
    out.push_back(result("psd_exact_minors", exact::is_psd_by_principal_minors(mix)));
  } else {
    std::ostringstream s;
    s << "min eigenvalue " << lo;
    out.push_back(result("psd_numeric", lo >= -1e-9, s.str()));
  }
  std::ostringstream s;
  s << "spectrum in [" << lo << ", " << hi << "]";
  out.push_back(result("eigenvalues_in_unit_interval", lo >= -1e-9 && hi <= 1 + 1e-9, s.str()));
}

void integrality_checks(const mixing::AvgMixReport& report, std::vector<InvariantResult>& out) {
  out.push_back(result("d2_integral", report.certificates.d2_integral,
                       "disc(min poly) = " + exact::to_string(report.disc_min)));
  out.push_back(result("d_integral_simple", report.certificates.d_integral_simple,
                       report.simple_spectrum ? "disc(char poly) = " + exact::to_string(report.disc_char)
                                              : "spectrum not simple; not applicable"));
}

}  // namespace

std::vector<InvariantResult> check_invariants(const Matrix& input, const mixing::AvgMixReport& report,
                                              CheckSet which) {
  std::vector<InvariantResult> out;
  const Matrix& mix = report.mixing;
  const bool all = which == CheckSet::all;
  if (all || which == CheckSet::stochastic) stochastic_checks(input, mix, out);
  if (all || which == CheckSet::psd) psd_checks(mix, out);
  if (all || which == CheckSet::integrality) integrality_checks(report, out);
  if (all) {
    const std::size_t n = mix.rows();
    if (n >= 3)
      out.push_back(result("not_uniform", mix != Matrix::ones(n) * Rational(1, static_cast<long>(n))));
    const auto d = numeric::spectral_decomposition(numeric::to_eigen(input));
    std::string detail;
    bool ok = true;
    try {
      numeric::check_cluster_count(d, report.min_poly);
    } catch (const ClusteringError& e) {
      ok = false;
      detail = e.what();
    }
    if (ok) {
      const double err =
          (numeric::numeric_avg_mixing(d) - numeric::to_eigen(mix)).cwiseAbs().maxCoeff();
      ok = err <= 1e-8;
      std::ostringstream s;
      s << "max deviation " << err;
      detail = s.str();
    }
    out.push_back(result("numeric_oracle", ok, detail));
  }
  return out;
}

MinpolyIntegralitySurvey survey_minpoly_integrality(std::span<const Matrix> inputs) {
  MinpolyIntegralitySurvey survey;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto report = mixing::average_mixing(inputs[i]);
    ++survey.examined;
    if (report.certificates.d_integral_minpoly)
      ++survey.integral;
    else
      survey.exceptions.push_back(i);
  }
  return survey;
}

}  // namespace qwmix::analysis
