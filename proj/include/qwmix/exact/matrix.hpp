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

#ifndef QWMIX_EXACT_MATRIX_HPP
#define QWMIX_EXACT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qwmix/exact/rational.hpp"

namespace qwmix::exact {

/// Dense row-major matrix of rationals. Symmetry is not part of the type;
/// operations that need it check for it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// The all-ones matrix J.
  static Matrix ones(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_integers(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> entries() const noexcept { return data_; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(data_).subspan(i * cols_, cols_);
  }

  Matrix transpose() const;
  /// Entrywise (Schur) product.
  Matrix schur(const Matrix& other) const;
  Rational trace() const;

  bool is_symmetric() const;
  bool is_integral() const;
  bool is_zero() const;

  /// Least common multiple of the entry denominators.
  Integer common_denominator() const;

  /// Deletes row and column `index` (vertex deletion).
  Matrix without(std::size_t index) const;
  Matrix principal_submatrix(std::span<const std::size_t> indices) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(const Matrix& m);

/// Positive semidefiniteness decided exactly from all principal minors.
/// Cost is 2^n determinants, so callers keep n small.
bool is_psd_by_principal_minors(const Matrix& m);

}  // namespace qwmix::exact

#endif  // QWMIX_EXACT_MATRIX_HPP
