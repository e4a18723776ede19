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

#include <optional>
#include <stdexcept>
#include <vector>

#include "hcgt/abelian_group.hpp"
#include "hcgt/free_product.hpp"

namespace hcgt {

/// T_n = A^n * A^n with the 2n coordinate embeddings a -> a_j. Also used for
/// a plain free product L * R of two finite abelian groups (n = 1, no A).
class TnContext {
public:
  TnContext(FiniteAbelianGroup a, int n)
      : a_(std::move(a)), n_(n), fp_(a_->power(n), a_->power(n)) {
    if (n < 1)
      throw std::invalid_argument("TnContext: n must be >= 1");
  }

  TnContext(FiniteAbelianGroup left, FiniteAbelianGroup right)
      : n_(1), fp_(std::move(left), std::move(right)) {}

  const FreeProductContext &fp() const { return fp_; }
  const FiniteAbelianGroup &left() const { return fp_.left(); }
  const FiniteAbelianGroup &right() const { return fp_.right(); }
  bool has_a() const { return a_.has_value(); }
  const FiniteAbelianGroup &a() const { return *a_; }
  int n() const { return n_; }

  /// a_j for j = 1..2n.
  FreeProductWord embed(int j, const AbelianElement &x) const {
    if (!a_ || j < 1 || j > 2 * n_)
      throw std::out_of_range("TnContext::embed: index");
    const Side side = j <= n_ ? Side::L : Side::R;
    const std::size_t block = static_cast<std::size_t>(j <= n_ ? j - 1 : j - n_ - 1);
    const std::size_t r = a_->rank();
    AbelianElement e(r * static_cast<std::size_t>(n_), 0);
    for (std::size_t c = 0; c < r; ++c)
      e[block * r + c] = x[c];
    return fp_.syllable(side, std::move(e));
  }

  /// Each embedding is an injective homomorphism; exhaustive for |A| <= 64.
  bool verify_embeddings() const {
    if (!a_ || a_->order() > 64)
      return true;
    const auto elems = a_->elements();
    for (int j = 1; j <= 2 * n_; ++j)
      for (const auto &x : elems) {
        const auto ex = embed(j, x);
        if (ex.is_identity() != a_->is_identity(x))
          return false;
        for (const auto &y : elems)
          if (fp_.mul(ex, embed(j, y)) != embed(j, a_->op(x, y)))
            return false;
      }
    return true;
  }

private:
  std::optional<FiniteAbelianGroup> a_;
  int n_;
  FreeProductContext fp_;
};

inline TnContext build_tn(const FiniteAbelianGroup &a, int n) { return TnContext(a, n); }

/// Normal generators of R_1, ..., R_{n+1}, two words per a in A \ {1}, in
/// canonical element order.
struct RSystem {
  std::vector<std::vector<FreeProductWord>> families;
};

inline RSystem build_r_system(const TnContext &ctx) {
  if (!ctx.has_a())
    throw std::invalid_argument("build_r_system: context has no A");
  const int n = ctx.n();
  const auto &fp = ctx.fp();
  RSystem rs;
  rs.families.resize(static_cast<std::size_t>(n) + 1);
  for (const auto &a : ctx.a().elements()) {
    if (ctx.a().is_identity(a))
      continue;
    const auto ainv = ctx.a().inv(a);
    rs.families[0].push_back(ctx.embed(1, a));
    rs.families[0].push_back(ctx.embed(n + 1, a));
    for (int i = 2; i <= n; ++i) {
      auto &f = rs.families[static_cast<std::size_t>(i) - 1];
      f.push_back(fp.mul(ctx.embed(i, a), ctx.embed(i - 1, ainv)));
      f.push_back(fp.mul(ctx.embed(n + i, a), ctx.embed(n + i - 1, ainv)));
    }
    rs.families[static_cast<std::size_t>(n)].push_back(ctx.embed(n, a));
    rs.families[static_cast<std::size_t>(n)].push_back(ctx.embed(2 * n, a));
  }
  return rs;
}

} // namespace hcgt
