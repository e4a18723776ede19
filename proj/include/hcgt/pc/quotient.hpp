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
#include "hcgt/pc/presentation.hpp"
#include "hcgt/pc/subgroup.hpp"

namespace hcgt {

/// G/N with the induced pc presentation. Generator g_d of G survives when N
/// has no igs member at depth d (same relative order) or one with leading
/// exponent e > 1 (relative order e).
struct PcQuotient {
  PcPresentation pc;
  std::vector<int> image_of;  // G generator -> quotient generator or -1
  std::vector<std::size_t> preimage; // quotient generator -> G generator
  PcSubgroup kernel;
  const PcPresentation *source;

  /// Representative of x modulo N with exponents reduced at N's depths.
  ExpVec reduce(ExpVec x) const {
    const auto &G = *source;
    for (std::size_t d = depth(x); d < x.size(); ++d) {
      if (x[d] == 0 || !kernel.slot(d))
        continue;
      const ExpVec &n = *kernel.slot(d);
      const Exp q = detail::floor_div(x[d], n[d]);
      if (q != 0)
        x = G.multiply(x, G.power(n, -q));
    }
    return x;
  }

  ExpVec map(const ExpVec &x) const {
    ExpVec r = reduce(x);
    ExpVec out(preimage.size(), 0);
    for (std::size_t k = 0; k < preimage.size(); ++k)
      out[k] = r[preimage[k]];
    return out;
  }

  /// A preimage in G of a quotient element.
  ExpVec section(const ExpVec &y) const {
    ExpVec x(source->size(), 0);
    for (std::size_t k = 0; k < preimage.size(); ++k)
      x[preimage[k]] = y[k];
    return x;
  }
};

inline PcQuotient quotient(const PcPresentation &G, const PcSubgroup &N,
                           bool check_normal = true) {
  if (check_normal && !N.is_normal())
    throw AlgebraError("quotient: subgroup is not normal");
  const std::size_t m = G.size();
  std::vector<int> image_of(m, -1);
  std::vector<std::size_t> preimage;
  std::vector<Exp> orders;
  for (std::size_t d = 0; d < m; ++d) {
    if (!N.slot(d)) {
      image_of[d] = static_cast<int>(preimage.size());
      preimage.push_back(d);
      orders.push_back(G.relative_order(d));
    } else if ((*N.slot(d))[d] > 1) {
      image_of[d] = static_cast<int>(preimage.size());
      preimage.push_back(d);
      orders.push_back((*N.slot(d))[d]);
    }
  }
  PcQuotient q{PcPresentation(orders), std::move(image_of), std::move(preimage), N, &G};
  const std::size_t mq = q.preimage.size();
  auto word_of = [&](const ExpVec &x) { return to_word(q.map(x)); };
  for (std::size_t a = 0; a < mq; ++a) {
    const std::size_t ga = q.preimage[a];
    if (orders[a] != 0)
      q.pc.set_power(a, word_of(G.generator(ga, orders[a])));
    for (std::size_t b = a + 1; b < mq; ++b) {
      const std::size_t gb = q.preimage[b];
      q.pc.set_conj(b, a, word_of(G.collect(G.conj(gb, ga))));
      if (orders[a] == 0)
        q.pc.set_conj_inv(b, a, word_of(G.collect(G.conj_inv(gb, ga))));
    }
  }
  return q;
}

} // namespace hcgt
