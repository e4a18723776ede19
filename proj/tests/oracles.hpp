// Copyright 2026 The hcgt Authors
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

// Independent reference computations used only by tests. None of these
// share code paths with the library routines they check.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "hcgt/intlinalg.hpp"

namespace oracle {

using hcgt::IntMatrix;
using hcgt::Integer;

// Fraction-free Gaussian elimination (Bareiss); returns rank.
inline std::size_t bareiss_rank(IntMatrix A) {
  const std::size_t n = A.rows(), m = A.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && A(piv, c) == 0)
      ++piv;
    if (piv == n)
      continue;
    A.swap_rows(piv, rank);
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t k = c + 1; k < m; ++k)
        A(r, k) = (A(rank, c) * A(r, k) - A(r, c) * A(rank, k)) / prev;
      A(r, c) = 0;
    }
    prev = A(rank, c);
    ++rank;
  }
  return rank;
}

inline Integer bareiss_det(IntMatrix A) {
  const std::size_t n = A.rows();
  if (n != A.cols())
    throw std::invalid_argument("det of non-square matrix");
  if (n == 0)
    return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && A(r, k) == 0)
        ++r;
      if (r == n)
        return 0;
      A.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

// Hermite form by Euclid-style gcd row combinations (2x2 unimodular
// blocks), a different elimination order than the library's
// smallest-pivot strategy. HNF is unique, so the outputs must agree.
inline IntMatrix hermite_by_row_ops(IntMatrix A) {
  const std::size_t n = A.rows(), m = A.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivcols;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    for (std::size_t i = r + 1; i < n; ++i) {
      if (A(i, c) == 0)
        continue;
      auto [g, s, t] = hcgt::ext_gcd(A(r, c), A(i, c));
      Integer a = A(r, c) / g, b = A(i, c) / g;
      for (std::size_t k = 0; k < m; ++k) {
        Integer x = A(r, k), y = A(i, k);
        A(r, k) = s * x + t * y;
        A(i, k) = -b * x + a * y;
      }
    }
    if (A(r, c) == 0)
      continue;
    if (A(r, c) < 0)
      A.negate_row(r);
    pivcols.push_back(c);
    ++r;
  }
  for (std::size_t p = 0; p < pivcols.size(); ++p) {
    const std::size_t c = pivcols[p];
    for (std::size_t i = 0; i < p; ++i)
      A.add_row(i, p, -hcgt::floor_div(A(i, c), A(p, c)));
  }
  return A;
}

// Smith diagonal of diag(a, b) via gcd / lcm.
inline std::vector<Integer> diagonal_chain_2x2(long long a, long long b) {
  long long g = std::gcd(a, b);
  return {Integer(g), Integer(a / g * b)};
}

inline bool satisfies(const IntMatrix &A, const std::vector<Integer> &moduli,
                      const std::vector<Integer> &x) {
  for (std::size_t r = 0; r < A.rows(); ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < A.cols(); ++c)
      s += A(r, c) * x[c];
    if (moduli[r] == 0 ? s != 0 : s % moduli[r] != 0)
      return false;
  }
  return true;
}

inline void for_each_in_box(std::size_t dim, int lo, int hi,
                            const std::function<void(const std::vector<Integer> &)> &f) {
  std::vector<Integer> x(dim, lo);
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < dim && x[k] == hi) {
      x[k] = lo;
      ++k;
    }
    if (k == dim)
      return;
    x[k] += 1;
  }
}

// 3x3 upper unitriangular integer matrices; x = E12, y = E23 generate the
// Heisenberg group.
using Mat3 = std::array<std::array<long long, 3>, 3>;

inline Mat3 mat_mul(const Mat3 &a, const Mat3 &b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat3 mat_inv(const Mat3 &a) {
  // (I + N)^-1 for strictly upper N
  Mat3 r{};
  r[0][0] = r[1][1] = r[2][2] = 1;
  r[0][1] = -a[0][1];
  r[1][2] = -a[1][2];
  r[0][2] = a[0][1] * a[1][2] - a[0][2];
  return r;
}

inline Mat3 mat_pow(const Mat3 &a, long long e) {
  Mat3 base = e < 0 ? mat_inv(a) : a;
  Mat3 r{};
  r[0][0] = r[1][1] = r[2][2] = 1;
  for (long long i = 0; i < (e < 0 ? -e : e); ++i)
    r = mat_mul(r, base);
  return r;
}

inline Mat3 heis_x() { return {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}; }
inline Mat3 heis_y() { return {{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}; }
// z = [y, x] = y^-1 x^-1 y x
inline Mat3 heis_z() {
  return mat_mul(mat_mul(mat_inv(heis_y()), mat_inv(heis_x())), mat_mul(heis_y(), heis_x()));
}

// Matrix of x^a y^b z^c.
inline Mat3 heis_eval(long long a, long long b, long long c) {
  return mat_mul(mat_mul(mat_pow(heis_x(), a), mat_pow(heis_y(), b)), mat_pow(heis_z(), c));
}

// A (x) A for A = Z/d1 x ... : the gcd table, canonicalized through prime
// power (elementary divisor) decomposition rather than a Smith form.
inline std::vector<long long> tensor_square_invariants(const std::vector<long long> &d) {
  std::map<long long, std::vector<long long>> by_prime; // p -> list of p^k
  for (long long a : d)
    for (long long b : d) {
      long long g = std::gcd(a, b);
      for (long long p = 2; g > 1; ++p) {
        long long q = 1;
        while (g % p == 0) {
          g /= p;
          q *= p;
        }
        if (q > 1)
          by_prime[p].push_back(q);
      }
    }
  std::size_t len = 0;
  for (auto &[p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<long long> out(len, 1);
  for (auto &[p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] *= v[i];
  std::reverse(out.begin(), out.end());
  return out;
}

// Rank of the degree-w part of the free Lie ring on r generators (Witt's
// necklace formula, Moebius function by trial factoring).
inline long long witt_rank(long long r, int w) {
  auto mobius = [](int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0)
          return 0;
        mu = -mu;
      }
    return m > 1 ? -mu : mu;
  };
  long long sum = 0;
  for (int d = 1; d <= w; ++d)
    if (w % d == 0) {
      long long pw = 1;
      for (int k = 0; k < w / d; ++k)
        pw *= r;
      sum += mobius(d) * pw;
    }
  return sum / w;
}

} // namespace oracle
