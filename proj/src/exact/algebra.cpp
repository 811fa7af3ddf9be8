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

#include "qwmix/exact/algebra.hpp"

#include <utility>

#include "qwmix/error.hpp"

namespace qwmix::exact {

namespace {

// Berkowitz over Z. Returns det(xI - a) with coefficients in descending order.
std::vector<Integer> berkowitz(const std::vector<Integer>& a, std::size_t n) {
  std::vector<Integer> poly{1};
  std::vector<Integer> v, next, toeplitz;
  Integer acc;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // order of the leading block already processed
    // toeplitz = [1, -a_rr, -R C, -R M C, ..., -R M^{k-1} C]
    toeplitz.assign(r + 1, 0);
    toeplitz[0] = 1;
    toeplitz[1] = -a[k * n + k];
    v.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) v[i] = a[i * n + k];
    for (std::size_t p = 0; p + 1 < r; ++p) {
      acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += a[k * n + i] * v[i];
      toeplitz[p + 2] = -acc;
      if (p + 2 == r) break;
      next.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        Integer& s = next[i];
        for (std::size_t j = 0; j < k; ++j) s += a[i * n + j] * v[j];
      }
      std::swap(v, next);
    }
    std::vector<Integer> out(r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i) {
      Integer& s = out[i];
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) s += toeplitz[i - j] * poly[j];
    }
    poly = std::move(out);
  }
  return poly;
}

}  // namespace

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const Integer d = m.common_denominator();
  std::vector<Integer> scaled(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Rational& x = m.entries()[i];
    scaled[i] = x.get_num() * (d / x.get_den());
  }
  const std::vector<Integer> desc = berkowitz(scaled, n);
  // det(yI - dM) = d^n det((y/d)I - M), so the x^k coefficient is c_k d^k / d^n.
  std::vector<Rational> coeffs(n + 1);
  Integer dk = 1;
  Integer dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[k] = Rational(desc[n - k] * dk, dn);
    coeffs[k].canonicalize();
    dk *= d;
  }
  return Polynomial(std::move(coeffs));
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw DimensionError("polynomial evaluated at a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

Rational resultant(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  Polynomial a = a_in;
  Polynomial b = b_in;
  Rational scale = 1;
  for (;;) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) {
      Rational out;
      mpq_class base = b.leading();
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(da));
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(da));
      out = Rational(num, den);
      out.canonicalize();
      return scale * out;
    }
    if (da == 0) {
      Integer num, den;
      const Rational& base = a.leading();
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(db));
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(db));
      Rational out(num, den);
      out.canonicalize();
      return scale * out;
    }
    Polynomial r = a % b;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
    if ((da % 2 == 1) && (db % 2 == 1)) scale = -scale;
    const Rational& lc = b.leading();
    for (int k = 0; k < da - r.degree(); ++k) scale *= lc;
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const Polynomial& p) {
  const int m = p.degree();
  if (m < 1) throw DomainError("discriminant of a constant polynomial");
  Rational d = resultant(p, p.derivative()) / p.leading();
  if ((static_cast<long>(m) * (m - 1) / 2) % 2 == 1) d = -d;
  return d;
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  if (m.degree() < 1) throw DomainError("inverse modulo a constant polynomial");
  // Invariant: s_k * a = r_k (mod m).
  Polynomial r0 = m;
  Polynomial r1 = a % m;
  Polynomial s0;
  Polynomial s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw NonInvertibleError("polynomials share a common factor");
  Rational inv = 1 / r0.leading();
  return (s0 * inv) % m;
}

std::vector<Rational> power_sums(const Polynomial& p, std::size_t upto) {
  if (p.degree() < 1 || !p.is_monic())
    throw DomainError("power sums need a monic polynomial of degree >= 1");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const auto c = p.coefficients();
  std::vector<Rational> s(upto + 1);
  s[0] = static_cast<long>(m);
  Rational term;
  for (std::size_t k = 1; k <= upto; ++k) {
    Rational acc = 0;
    // Newton: s_k + c_{m-1} s_{k-1} + ... = 0, with k c_{m-k} closing the sum when k <= m.
    const std::size_t lim = std::min(k - 1, m);
    for (std::size_t i = 1; i <= lim; ++i) {
      term = c[m - i] * s[k - i];
      acc += term;
    }
    if (k <= m) acc += c[m - k] * static_cast<long>(k);
    s[k] = -acc;
  }
  return s;
}

Rational trace_mod(const Polynomial& h, const Polynomial& psi) {
  if (psi.degree() < 1 || !psi.is_monic())
    throw DomainError("trace_mod needs a monic modulus of degree >= 1");
  const auto hc = h.coefficients();
  if (hc.empty()) return 0;
  const auto s = power_sums(psi, hc.size() - 1);
  Rational acc = 0;
  for (std::size_t j = 0; j < hc.size(); ++j) acc += hc[j] * s[j];
  return acc;
}

ResolventCoefficients resolvent_coeffs(const Matrix& m, const Polynomial& psi) {
  if (!m.is_square()) throw DimensionError("resolvent of a non-square matrix");
  if (psi.degree() < 1 || !psi.is_monic())
    throw DomainError("resolvent needs a monic polynomial of degree >= 1");
  const std::size_t n = m.rows();
  const std::size_t deg = static_cast<std::size_t>(psi.degree());
  const auto c = psi.coefficients();
  // B_{deg-1} = I, B_{j-1} = M B_j + psi_j I; then M B_0 + psi_0 I = psi(M).
  ResolventCoefficients out;
  out.matrices.resize(deg);
  out.matrices[deg - 1] = Matrix::identity(n);
  for (std::size_t j = deg - 1; j >= 1; --j) {
    Matrix b = m * out.matrices[j];
    for (std::size_t i = 0; i < n; ++i) b(i, i) += c[j];
    out.matrices[j - 1] = std::move(b);
  }
  Matrix check = m * out.matrices[0];
  for (std::size_t i = 0; i < n; ++i) check(i, i) += c[0];
  if (!check.is_zero()) throw NotAnnihilatingError("polynomial does not annihilate the matrix");
  return out;
}

}  // namespace qwmix::exact
