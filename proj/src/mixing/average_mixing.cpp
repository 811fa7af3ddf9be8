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

#include "qwmix/mixing/average_mixing.hpp"

#include <utility>
#include <vector>

#include "qwmix/detail/parallel.hpp"
#include "qwmix/error.hpp"
#include "qwmix/exact/algebra.hpp"

namespace qwmix::mixing {

using exact::Integer;
using exact::Matrix;
using exact::Polynomial;
using exact::Rational;

namespace {

// The per-entry coefficient vectors b_uv = ((B_0)_uv, ..., (B_{m-1})_uv) of
// Phi(M, y), scaled to integers by a common denominator.
struct ScaledResolvent {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::vector<Integer> coeffs;  // [(u * n + v) * degree + j]
  Integer denominator = 1;

  const Integer* entry(std::size_t u, std::size_t v) const {
    return coeffs.data() + (u * n + v) * degree;
  }
};

ScaledResolvent scale_resolvent(const exact::ResolventCoefficients& res, std::size_t n) {
  ScaledResolvent out;
  out.n = n;
  out.degree = res.matrices.size();
  for (const auto& b : res.matrices) out.denominator = exact::lcm(out.denominator, b.common_denominator());
  out.coeffs.resize(n * n * out.degree);
  for (std::size_t j = 0; j < out.degree; ++j) {
    const Matrix& b = res.matrices[j];
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        const Rational& x = b(u, v);
        out.coeffs[(u * n + v) * out.degree + j] = x.get_num() * (out.denominator / x.get_den());
      }
  }
  return out;
}

std::vector<Integer> scale_to_integers(const std::vector<Rational>& values, Integer& denominator) {
  denominator = 1;
  for (const auto& x : values) denominator = exact::lcm(denominator, x.get_den());
  std::vector<Integer> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    out[k] = values[k].get_num() * (denominator / values[k].get_den());
  return out;
}

// Fills out(u, v) = value(u, v) / denominator for all entries, evaluating only
// u <= v when the matrix is known to be symmetric.
template <typename EntryFn>
Matrix fill_entries(std::size_t n, bool symmetric, const Integer& denominator, EntryFn&& value) {
  Matrix out(n, n);
  detail::parallel_for(n, [&](std::size_t u) {
    Integer acc;
    for (std::size_t v = symmetric ? u : 0; v < n; ++v) {
      value(u, v, acc);
      Rational r(acc, denominator);
      r.canonicalize();
      out(u, v) = r;
    }
  });
  if (symmetric)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < u; ++v) out(u, v) = out(v, u);
  return out;
}

}  // namespace

Matrix idempotent_square_sum(const Matrix& m, const Polynomial& psi) {
  const std::size_t n = m.rows();
  const auto res = exact::resolvent_coeffs(m, psi);
  const std::size_t deg = res.matrices.size();

  // E_r = Phi(M, theta_r) w(theta_r) with w = 1/psi' in Q[y]/(psi), so
  // sum_r (E_r)_uv^2 = trace(b_uv(y)^2 s(y)) with s = w^2 mod psi. Writing
  // t_k = trace(y^k s) turns the trace into sum_k t_k [y^k] b_uv(y)^2.
  const Polynomial w = exact::inverse_mod(psi.derivative(), psi);
  const Polynomial s = (w * w) % psi;
  const auto sums = exact::power_sums(psi, 3 * deg - 3);
  std::vector<Rational> t(2 * deg - 1);
  const auto sc = s.coefficients();
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t l = 0; l < sc.size(); ++l) t[k] += sc[l] * sums[k + l];

  Integer t_den;
  const std::vector<Integer> ti = scale_to_integers(t, t_den);
  const ScaledResolvent b = scale_resolvent(res, n);
  const Integer denominator = t_den * b.denominator * b.denominator;

  return fill_entries(n, m.is_symmetric(), denominator,
                      [&](std::size_t u, std::size_t v, Integer& acc) {
                        const Integer* bu = b.entry(u, v);
                        Integer conv;
                        acc = 0;
                        for (std::size_t k = 0; k < t.size(); ++k) {
                          // conv = [y^k] b(y)^2
                          conv = 0;
                          const std::size_t lo = k < deg ? 0 : k - deg + 1;
                          for (std::size_t i = lo; 2 * i < k; ++i)
                            mpz_addmul(conv.get_mpz_t(), bu[i].get_mpz_t(), bu[k - i].get_mpz_t());
                          conv *= 2;
                          if (k % 2 == 0)
                            mpz_addmul(conv.get_mpz_t(), bu[k / 2].get_mpz_t(), bu[k / 2].get_mpz_t());
                          if (conv != 0) mpz_addmul(acc.get_mpz_t(), ti[k].get_mpz_t(), conv.get_mpz_t());
                        }
                      });
}

Matrix idempotent_inverse_pair_sum(const Matrix& m, const Polynomial& psi) {
  const std::size_t n = m.rows();
  const auto res = exact::resolvent_coeffs(m, psi);
  const std::size_t deg = res.matrices.size();

  // sigma: f(y) -> f(1/y) on Q[y]/(psi). Entry (u, v) of the result is
  // trace(b(y) w(y) sigma(b w)(y)) = sum_ij b_i b_j K_ij with
  // K_ij = trace(y^i yinv^j z), z = w sigma(w).
  const Polynomial w = exact::inverse_mod(psi.derivative(), psi);
  const Polynomial yinv = exact::inverse_mod(Polynomial{0, 1}, psi);
  Polynomial sigma_w;
  {
    const auto wc = w.coefficients();
    for (auto it = wc.rbegin(); it != wc.rend(); ++it)
      sigma_w = (sigma_w * yinv + Polynomial::constant(*it)) % psi;
  }
  Polynomial z = (w * sigma_w) % psi;
  const auto sums = exact::power_sums(psi, 2 * deg - 2);
  std::vector<Rational> kernel(deg * deg);
  for (std::size_t j = 0; j < deg; ++j) {
    const auto zc = z.coefficients();
    for (std::size_t i = 0; i < deg; ++i)
      for (std::size_t l = 0; l < zc.size(); ++l) kernel[i * deg + j] += zc[l] * sums[i + l];
    z = (z * yinv) % psi;
  }

  Integer k_den;
  const std::vector<Integer> ki = scale_to_integers(kernel, k_den);
  const ScaledResolvent b = scale_resolvent(res, n);
  const Integer denominator = k_den * b.denominator * b.denominator;

  return fill_entries(n, m.is_symmetric(), denominator,
                      [&](std::size_t u, std::size_t v, Integer& acc) {
                        const Integer* bu = b.entry(u, v);
                        Integer row;
                        acc = 0;
                        for (std::size_t i = 0; i < deg; ++i) {
                          if (bu[i] == 0) continue;
                          row = 0;
                          for (std::size_t j = 0; j < deg; ++j)
                            mpz_addmul(row.get_mpz_t(), ki[i * deg + j].get_mpz_t(), bu[j].get_mpz_t());
                          mpz_addmul(acc.get_mpz_t(), row.get_mpz_t(), bu[i].get_mpz_t());
                        }
                      });
}

AvgMixReport average_mixing(const Matrix& m) {
  if (!m.is_square()) throw DomainError("average mixing needs a square matrix");
  if (m.rows() == 0) throw DomainError("average mixing needs at least one vertex");
  if (!m.is_symmetric()) throw DomainError("average mixing needs a symmetric matrix");
  if (!m.is_integral()) throw DomainError("average mixing needs an integer matrix");

  AvgMixReport report;
  report.char_poly = exact::char_poly(m);
  report.min_poly = exact::squarefree_part(report.char_poly);
  report.mixing = idempotent_square_sum(m, report.min_poly);
  report.disc_min = exact::discriminant(report.min_poly);
  report.disc_char = exact::discriminant(report.char_poly);
  report.simple_spectrum = report.disc_char != 0;
  report.common_denominator = report.mixing.common_denominator();
  report.certificates = certify_integrality(report);
  return report;
}

Certificates certify_integrality(const AvgMixReport& report) {
  const auto scaled_integral = [&](const Rational& factor) {
    for (const auto& x : report.mixing.entries()) {
      const Rational y = x * factor;
      if (!exact::is_integer(y)) return false;
    }
    return true;
  };
  Certificates c;
  c.d2_integral = scaled_integral(report.disc_min * report.disc_min);
  c.d_integral_simple = !report.simple_spectrum || scaled_integral(report.disc_char);
  c.d_integral_minpoly = scaled_integral(report.disc_min);
  return c;
}

bool strong_cospectral_kernel(const AvgMixReport& report, std::size_t u, std::size_t v) {
  const Matrix& mix = report.mixing;
  const std::size_t n = mix.rows();
  if (u >= n || v >= n) throw IndexError("vertex out of range");
  for (std::size_t k = 0; k < n; ++k)
    if (mix(k, u) != mix(k, v)) return false;
  return true;
}

}  // namespace qwmix::mixing
