// Copyright 2026 The ruledsym Authors.
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


#pragma once

#include <array>
#include <vector>

#include "ruledsym/poly.hpp"

namespace ruledsym {

/// Solution set of A x = b: particular + span(nullspace), or inconsistent.
template <class K>
struct LinearSolution {
  bool consistent = false;
  std::vector<K> particular;
  std::vector<std::vector<K>> nullspace;
};

/// Gauss-Jordan elimination over the field K. Rows of A have `cols` entries.
template <class K>
LinearSolution<K> solve_linear(std::vector<std::vector<K>> a, std::vector<K> b, size_t cols) {
  const size_t rows = a.size();
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && poly_detail::coeff_is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const K inv = K(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    b[r] = b[r] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || poly_detail::coeff_is_zero(a[i][c])) continue;
      const K f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  LinearSolution<K> sol;
  for (size_t i = r; i < rows; ++i)
    if (!poly_detail::coeff_is_zero(b[i])) return sol;
  sol.consistent = true;
  sol.particular.assign(cols, K(0));
  for (size_t i = 0; i < r; ++i) sol.particular[pivot_cols[i]] = b[i];
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols, K(0));
    v[f] = K(1);
    for (size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -a[i][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

template <class K>
using Vec3 = std::array<K, 3>;
template <class K>
using Mat3 = std::array<std::array<K, 3>, 3>;

template <class K>
Mat3<K> identity3() {
  Mat3<K> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = K(i == j ? 1 : 0);
  return m;
}

template <class K>
Mat3<K> operator*(const Mat3<K>& a, const Mat3<K>& b) {
  Mat3<K> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K s(0);
      for (int k = 0; k < 3; ++k) s = s + a[i][k] * b[k][j];
      m[i][j] = s;
    }
  return m;
}

template <class K>
Vec3<K> operator*(const Mat3<K>& a, const Vec3<K>& v) {
  Vec3<K> r;
  for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}

template <class K>
Vec3<K> operator+(const Vec3<K>& a, const Vec3<K>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class K>
Vec3<K> operator-(const Vec3<K>& a, const Vec3<K>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class K>
K dot(const Vec3<K>& a, const Vec3<K>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class K>
Vec3<K> cross(const Vec3<K>& a, const Vec3<K>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
Mat3<K> transpose(const Mat3<K>& a) {
  Mat3<K> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[j][i];
  return m;
}

template <class K>
K determinant(const Mat3<K>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

template <class K>
K trace(const Mat3<K>& a) {
  return a[0][0] + a[1][1] + a[2][2];
}

template <class K>
bool equal(const Mat3<K>& a, const Mat3<K>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!poly_detail::coeff_is_zero(a[i][j] - b[i][j])) return false;
  return true;
}

template <class K>
bool equal(const Vec3<K>& a, const Vec3<K>& b) {
  for (int i = 0; i < 3; ++i)
    if (!poly_detail::coeff_is_zero(a[i] - b[i])) return false;
  return true;
}

}  // namespace ruledsym
