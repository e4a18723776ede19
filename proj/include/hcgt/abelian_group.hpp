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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcgt/intlinalg.hpp"

namespace hcgt {

/// Finite abelian group Z/d1 x ... x Z/dk. Elements are residue vectors.
/// The factor list is kept as given; canonical() produces the invariant
/// factor form d1 | d2 | ... used for the group A itself, while powers A^n
/// keep the blockwise layout so that coordinate j of A^n is the j-th copy.
class FiniteAbelianGroup {
public:
  using Element = std::vector<std::int64_t>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors)
      : factors_(std::move(factors)) {
    for (auto d : factors_)
      if (d < 2)
        throw std::invalid_argument("FiniteAbelianGroup: factor orders must be >= 2");
  }

  /// Invariant factor form of Z/d1 x ... x Z/dk. At least one factor must
  /// survive (A is nontrivial).
  static FiniteAbelianGroup canonical(const std::vector<std::int64_t> &orders) {
    if (orders.empty())
      throw std::invalid_argument("FiniteAbelianGroup: empty factor list");
    IntMatrix D(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] < 1)
        throw std::invalid_argument("FiniteAbelianGroup: factor orders must be positive");
      D(i, i) = orders[i];
    }
    std::vector<std::int64_t> out;
    for (const auto &d : snf(D).diagonal())
      if (d > 1)
        out.push_back(static_cast<std::int64_t>(d));
    if (out.empty())
      throw std::invalid_argument("FiniteAbelianGroup: group is trivial");
    return FiniteAbelianGroup(std::move(out));
  }

  const std::vector<std::int64_t> &factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : factors_)
      o *= d;
    return o;
  }

  FiniteAbelianGroup power(int n) const {
    std::vector<std::int64_t> f;
    for (int j = 0; j < n; ++j)
      f.insert(f.end(), factors_.begin(), factors_.end());
    return FiniteAbelianGroup(std::move(f));
  }

  Element identity() const { return Element(factors_.size(), 0); }

  bool is_identity(const Element &x) const {
    return std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; });
  }

  bool contains(const Element &x) const {
    if (x.size() != factors_.size())
      return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] >= factors_[i])
        return false;
    return true;
  }

  Element reduce(Element x) const {
    check_size(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] %= factors_[i];
      if (x[i] < 0)
        x[i] += factors_[i];
    }
    return x;
  }

  Element op(const Element &x, const Element &y) const {
    check_size(x);
    check_size(y);
    Element z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      z[i] = (x[i] + y[i]) % factors_[i];
    return z;
  }

  Element inv(const Element &x) const {
    check_size(x);
    Element z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      z[i] = x[i] == 0 ? 0 : factors_[i] - x[i];
    return z;
  }

  /// Lexicographic rank of x (first coordinate most significant).
  std::int64_t index_of(const Element &x) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      idx = idx * factors_[i] + x[i];
    return idx;
  }

  Element element_at(std::int64_t idx) const {
    Element x(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      x[i] = idx % factors_[i];
      idx /= factors_[i];
    }
    return x;
  }

  /// All elements in lexicographic order; the identity comes first.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    const std::int64_t n = order();
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
      out.push_back(element_at(i));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      s += (i ? "xZ/" : "Z/") + std::to_string(factors_[i]);
    return s;
  }

  friend bool operator==(const FiniteAbelianGroup &,
                         const FiniteAbelianGroup &) = default;

private:
  void check_size(const Element &x) const {
    if (x.size() != factors_.size())
      throw std::invalid_argument("FiniteAbelianGroup: element from a different group");
  }

  std::vector<std::int64_t> factors_;
};

using AbelianElement = FiniteAbelianGroup::Element;

inline AbelianElement ab_op(const FiniteAbelianGroup &g, const AbelianElement &x,
                            const AbelianElement &y) {
  return g.op(x, y);
}

inline AbelianElement ab_inv(const FiniteAbelianGroup &g, const AbelianElement &x) {
  return g.inv(x);
}

} // namespace hcgt
