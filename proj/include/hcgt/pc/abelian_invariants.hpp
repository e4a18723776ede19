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

#include <vector>

#include "hcgt/errors.hpp"
#include "hcgt/intlinalg.hpp"
#include "hcgt/pc/presentation.hpp"
#include "hcgt/pc/subgroup.hpp"

namespace hcgt {

/// Invariant factors of an abelian subgroup, read off its igs: one column
/// per member, one relation row per finite relative order.
inline AbelianInvariants abelian_invariants(const PcSubgroup &H) {
  const auto &p = H.ambient();
  std::vector<std::size_t> depths;
  for (std::size_t d = 0; d < p.size(); ++d)
    if (H.slot(d))
      depths.push_back(d);
  for (std::size_t a = 0; a < depths.size(); ++a)
    for (std::size_t b = a + 1; b < depths.size(); ++b)
      if (!p.is_identity(p.commutator(*H.slot(depths[a]), *H.slot(depths[b]))))
        throw AlgebraError("abelian_invariants: subgroup is not abelian");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t a = 0; a < depths.size(); ++a) {
    const Exp r = H.relative_order_at(depths[a]);
    if (r == 0)
      continue;
    std::vector<Exp> coeffs;
    ExpVec rest = H.sift_coefficients(p.power(*H.slot(depths[a]), r), coeffs);
    if (!p.is_identity(rest))
      throw AlgebraError("abelian_invariants: igs is not closed under powers");
    std::vector<Integer> row(depths.size(), 0);
    row[a] = r;
    for (std::size_t b = 0; b < depths.size(); ++b)
      row[b] -= coeffs[depths[b]];
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    return {{}, depths.size()};
  return cokernel_invariants(IntMatrix::from_rows(rows, depths.size()));
}

/// Invariants of the abelianization G/[G,G] of a presented group.
inline AbelianInvariants abelian_invariants(const PcPresentation &p) {
  const std::size_t m = p.size();
  std::vector<std::vector<Integer>> rows;
  auto add_word = [&](std::vector<Integer> &row, const PcWord &w, int sign) {
    for (const auto &l : w)
      row[static_cast<std::size_t>(l.gen)] += sign * l.exp;
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (!p.is_infinite(i)) {
      std::vector<Integer> row(m, 0);
      row[i] = p.relative_order(i);
      add_word(row, p.power(i), -1);
      rows.push_back(std::move(row));
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (p.conj_raw(j, i).empty())
        continue;
      std::vector<Integer> row(m, 0);
      row[j] = 1;
      add_word(row, p.conj_raw(j, i), -1);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty())
    return {{}, m};
  return cokernel_invariants(IntMatrix::from_rows(rows, m));
}

} // namespace hcgt
