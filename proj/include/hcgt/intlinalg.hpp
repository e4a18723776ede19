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

// Exact integer matrices: row Hermite normal form, Smith normal form and
// kernels of congruence systems. Every entry is an arbitrary precision
// integer; nothing here can overflow.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcgt {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer &x) { return x < 0 ? Integer(-x) : x; }

/// Floor division, for any sign of the divisor.
inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

/// Extended gcd: returns (g, s, t) with g = s*a + t*b and g >= 0.
inline std::tuple<Integer, Integer, Integer> ext_gcd(const Integer &a,
                                                     const Integer &b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (long long v : row)
        data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows,
                             std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw std::invalid_argument("IntMatrix::from_rows: row length");
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Integer &x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(src, c) != 0)
        (*this)(dst, c) += k * (*this)(src, c);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, src) != 0)
        (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r)
      (*this)(r, c) = -(*this)(r, c);
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer &x = a(i, k);
        if (x == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0)
            p(i, j) += x * b(k, j);
      }
    return p;
  }

  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c)
        os << (c ? "," : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
      d.push_back(S(i, i));
    return d;
  }
};

/// True iff H is in row Hermite normal form: echelon, positive pivots,
/// entries above a pivot reduced into [0, pivot).
inline bool is_row_hermite(const IntMatrix &H) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  bool first = true;
  for (std::size_t r = 0; r < H.rows(); ++r) {
    std::optional<std::size_t> pc;
    for (std::size_t c = 0; c < H.cols(); ++c)
      if (H(r, c) != 0) {
        pc = c;
        break;
      }
    if (!pc) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row)
      return false;
    if (!first && *pc <= last_pivot_col)
      return false;
    if (H(r, *pc) <= 0)
      return false;
    for (std::size_t above = 0; above < r; ++above)
      if (H(above, *pc) < 0 || H(above, *pc) >= H(r, *pc))
        return false;
    last_pivot_col = *pc;
    first = false;
  }
  return true;
}

/// Row-style Hermite normal form: returns (H, U) with U * A = H and U
/// unimodular. The pivot at each step is the entry of smallest nonzero
/// absolute value in the active column.
inline HermiteForm hnf(const IntMatrix &A) {
  HermiteForm out{A, IntMatrix::identity(A.rows()), 0};
  IntMatrix &H = out.H;
  IntMatrix &U = out.U;
  std::size_t pivot_row = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  for (std::size_t col = 0; col < H.cols() && pivot_row < H.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < H.rows(); ++r)
        if (H(r, col) != 0 &&
            (!best || abs_value(H(r, col)) < abs_value(H(*best, col))))
          best = r;
      if (!best)
        break;
      H.swap_rows(pivot_row, *best);
      U.swap_rows(pivot_row, *best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < H.rows(); ++r) {
        if (H(r, col) == 0)
          continue;
        Integer q = floor_div(H(r, col), H(pivot_row, col));
        H.add_row(r, pivot_row, -q);
        U.add_row(r, pivot_row, -q);
        if (H(r, col) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (H(pivot_row, col) == 0)
      continue;
    if (H(pivot_row, col) < 0) {
      H.negate_row(pivot_row);
      U.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(H(r, col), H(pivot_row, col));
      H.add_row(r, pivot_row, -q);
      U.add_row(r, pivot_row, -q);
    }
    pivots.emplace_back(pivot_row, col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

/// Smith normal form: U * A * V = S, diagonal d1 | d2 | ... | dr > 0, then
/// zeros. Pivot selection is by smallest nonzero absolute value over the
/// active submatrix.
inline SmithDecomposition snf(const IntMatrix &A) {
  SmithDecomposition out{A, IntMatrix::identity(A.rows()),
                         IntMatrix::identity(A.cols()), 0};
  IntMatrix &S = out.S;
  IntMatrix &U = out.U;
  IntMatrix &V = out.V;
  const std::size_t n = std::min(S.rows(), S.cols());

  std::size_t t = 0;
  for (; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the active block
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < S.rows(); ++r)
        for (std::size_t c = t; c < S.cols(); ++c)
          if (S(r, c) != 0 &&
              (!best ||
               abs_value(S(r, c)) < abs_value(S(best->first, best->second))))
            best = std::make_pair(r, c);
      if (!best)
        goto finished;
      S.swap_rows(t, best->first);
      U.swap_rows(t, best->first);
      S.swap_cols(t, best->second);
      V.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t r = t + 1; r < S.rows(); ++r) {
        if (S(r, t) == 0)
          continue;
        Integer q = floor_div(S(r, t), S(t, t));
        S.add_row(r, t, -q);
        U.add_row(r, t, -q);
        if (S(r, t) != 0)
          clean = false;
      }
      for (std::size_t c = t + 1; c < S.cols(); ++c) {
        if (S(t, c) == 0)
          continue;
        Integer q = floor_div(S(t, c), S(t, t));
        S.add_col(c, t, -q);
        V.add_col(c, t, -q);
        if (S(t, c) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // divisibility: pull in a row holding an entry not divisible by the pivot
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < S.rows() && !offender; ++r)
        for (std::size_t c = t + 1; c < S.cols(); ++c)
          if (S(r, c) % S(t, t) != 0) {
            offender = r;
            break;
          }
      if (!offender)
        break;
      S.add_row(t, *offender, 1);
      U.add_row(t, *offender, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
finished:
  out.rank = t;
  return out;
}

/// Basis of the integer kernel {x : A x = 0}.
inline std::vector<std::vector<Integer>> integer_kernel(const IntMatrix &A) {
  // U * A^T = H; rows of U matching zero rows of H span the left kernel of A^T.
  HermiteForm h = hnf(A.transpose());
  std::vector<std::vector<Integer>> basis;
  for (std::size_t r = h.rank; r < h.U.rows(); ++r)
    basis.push_back(h.U.row(r));
  return basis;
}

/// Generators (a lattice basis, in Hermite form) of the solutions x of
/// A x = 0 where row i is read modulo moduli[i]; modulus 0 means the row
/// holds over the integers.
inline std::vector<std::vector<Integer>>
solve_congruence(const IntMatrix &A, std::span<const Integer> moduli) {
  if (moduli.size() != A.rows())
    throw std::invalid_argument("solve_congruence: one modulus per row");
  const std::size_t n = A.cols();
  const std::size_t m = A.rows();
  IntMatrix M(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      M(r, c) = A(r, c);
    M(r, n + r) = -moduli[r];
  }
  std::vector<std::vector<Integer>> gens;
  for (auto &k : integer_kernel(M))
    gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
  if (gens.empty())
    return {};
  HermiteForm h = hnf(IntMatrix::from_rows(gens, n));
  std::vector<std::vector<Integer>> basis;
  for (std::size_t r = 0; r < h.rank; ++r)
    basis.push_back(h.H.row(r));
  return basis;
}

/// Invariant factors of Z^cols / rowspace(A): torsion part d1 | d2 | ...
/// (entries > 1 only) and the free rank.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  friend bool operator==(const AbelianInvariants &,
                         const AbelianInvariants &) = default;
};

inline AbelianInvariants cokernel_invariants(const IntMatrix &relations) {
  AbelianInvariants inv;
  SmithDecomposition s = snf(relations);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.S(i, i) != 1)
      inv.torsion.push_back(s.S(i, i));
  inv.free_rank = relations.cols() - s.rank;
  return inv;
}

/// Incrementally maintained row echelon basis of a sublattice of Z^n.
/// Rows are kept sorted by pivot column with positive pivots.
class LatticeEchelon {
public:
  explicit LatticeEchelon(std::size_t dim) : dim_(dim), by_pivot_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the lattice; returns true if the lattice grew. The stored
  /// basis is kept in reduced Hermite form, which bounds coefficient growth.
  bool add(std::vector<Integer> v) {
    if (v.size() != dim_)
      throw std::invalid_argument("LatticeEchelon::add: dimension");
    v = reduce(std::move(v));
    bool grew = false;
    std::size_t c = 0;
    while (true) {
      while (c < dim_ && v[c] == 0)
        ++c;
      if (c == dim_)
        break;
      int slot = by_pivot_[c];
      if (slot < 0) {
        if (v[c] < 0)
          for (auto &x : v)
            x = -x;
        by_pivot_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        grew = true;
        break;
      }
      std::vector<Integer> &row = rows_[static_cast<std::size_t>(slot)];
      if (v[c] % row[c] == 0) {
        Integer q = v[c] / row[c];
        for (std::size_t k = c; k < dim_; ++k)
          if (row[k] != 0)
            v[k] -= q * row[k];
        continue;
      }
      // gcd combination replaces the stored row; the remainder is re-added
      auto [g, s, t] = ext_gcd(row[c], v[c]);
      Integer a = row[c] / g, b = v[c] / g;
      std::vector<Integer> combined(dim_), rest(dim_);
      for (std::size_t k = c; k < dim_; ++k) {
        if (row[k] == 0 && v[k] == 0)
          continue;
        combined[k] = s * row[k] + t * v[k];
        rest[k] = a * v[k] - b * row[k];
      }
      row = std::move(combined);
      v = std::move(rest);
      grew = true;
    }
    if (grew)
      make_reduced();
    return grew;
  }

  /// Row Hermite basis (pivots positive, entries above pivots reduced).
  std::vector<std::vector<Integer>> hermite_basis() const {
    std::vector<std::vector<Integer>> out;
    std::vector<std::size_t> pivcols;
    for (std::size_t c = 0; c < dim_; ++c)
      if (by_pivot_[c] >= 0) {
        out.push_back(rows_[static_cast<std::size_t>(by_pivot_[c])]);
        pivcols.push_back(c);
      }
    // ascending: reducing by row i only touches columns >= its pivot
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t pc = pivcols[i];
      for (std::size_t j = 0; j < i; ++j) {
        Integer q = floor_div(out[j][pc], out[i][pc]);
        if (q != 0)
          for (std::size_t k = pc; k < dim_; ++k)
            out[j][k] -= q * out[i][k];
      }
    }
    return out;
  }

  /// Reduces v modulo the lattice (echelon reduction, floor remainders).
  std::vector<Integer> reduce(std::vector<Integer> v) const {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] == 0 || by_pivot_[c] < 0)
        continue;
      const auto &row = rows_[static_cast<std::size_t>(by_pivot_[c])];
      Integer q = floor_div(v[c], row[c]);
      if (q != 0)
        for (std::size_t k = c; k < dim_; ++k)
          v[k] -= q * row[k];
    }
    return v;
  }

  bool contains(const std::vector<Integer> &v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(),
                       [](const Integer &x) { return x == 0; });
  }

private:
  // Entries above each pivot brought into [0, pivot), pivots ascending.
  void make_reduced() {
    for (std::size_t pc = 0; pc < dim_; ++pc) {
      if (by_pivot_[pc] < 0)
        continue;
      const auto &pr = rows_[static_cast<std::size_t>(by_pivot_[pc])];
      for (std::size_t c = 0; c < pc; ++c) {
        if (by_pivot_[c] < 0)
          continue;
        auto &row = rows_[static_cast<std::size_t>(by_pivot_[c])];
        if (row[pc] == 0 || (row[pc] > 0 && row[pc] < pr[pc]))
          continue;
        const Integer q = floor_div(row[pc], pr[pc]);
        for (std::size_t k = pc; k < dim_; ++k)
          if (pr[k] != 0)
            row[k] -= q * pr[k];
      }
    }
  }

  std::size_t dim_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<int> by_pivot_;
};

/// Echelon basis of a sublattice of Z^n fed with long, mostly sparse rows.
/// A row is a list of (column, value) pairs, increasing columns, no zeros.
class SparseEchelon {
public:
  using Row = std::vector<std::pair<std::size_t, Integer>>;

  explicit SparseEchelon(std::size_t dim) : dim_(dim), by_pivot_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(std::size_t c) const { return by_pivot_[c] >= 0; }
  const Integer &pivot(std::size_t c) const {
    return rows_[static_cast<std::size_t>(by_pivot_[c])].front().second;
  }

  /// Returns true if the lattice grew.
  bool add(Row v) {
    bool grew = false;
    while (!v.empty()) {
      const std::size_t c = v.front().first;
      if (c >= dim_)
        throw std::invalid_argument("SparseEchelon::add: column out of range");
      const int slot = by_pivot_[c];
      if (slot < 0) {
        if (v.front().second < 0)
          for (auto &e : v)
            e.second = -e.second;
        by_pivot_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      Row &row = rows_[static_cast<std::size_t>(slot)];
      const Integer p = row.front().second, a = v.front().second;
      if (a % p == 0) {
        v = combine(1, v, -(a / p), row);
        continue;
      }
      auto [g, s, t] = ext_gcd(p, a);
      Row merged = combine(s, row, t, v);
      v = combine(p / g, v, -(a / g), row);
      row = std::move(merged);
      grew = true;
    }
    return grew;
  }

  /// Dense reduction with floor remainders at the pivots.
  std::vector<Integer> reduce(std::vector<Integer> v) const {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] == 0 || by_pivot_[c] < 0)
        continue;
      const Row &row = rows_[static_cast<std::size_t>(by_pivot_[c])];
      const Integer q = floor_div(v[c], row.front().second);
      if (q != 0)
        for (const auto &[col, x] : row)
          v[col] -= q * x;
    }
    return v;
  }

private:
  static Row combine(const Integer &a, const Row &x, const Integer &b, const Row &y) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      Integer val;
      std::size_t col;
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        col = x[i].first;
        val = a * x[i++].second;
      } else if (i == x.size() || y[j].first < x[i].first) {
        col = y[j].first;
        val = b * y[j++].second;
      } else {
        col = x[i].first;
        val = a * x[i++].second + b * y[j++].second;
      }
      if (val != 0)
        out.emplace_back(col, std::move(val));
    }
    return out;
  }

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<int> by_pivot_;
};

} // namespace hcgt
