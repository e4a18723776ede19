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

// Overlap tests for pc presentations. A presentation is consistent (every
// element has a unique normal form) iff every overlap below collects to the
// same normal form both ways.

#include <optional>
#include <string>
#include <vector>

#include "hcgt/pc/presentation.hpp"

namespace hcgt {

struct Overlap {
  std::string kind;
  int k = -1, j = -1, i = -1; // generator indices involved, 0-based, k > j > i
  ExpVec lhs;
  ExpVec rhs;

  std::string describe() const {
    auto g = [](int x) { return "g" + std::to_string(x + 1); };
    std::string s = kind + " (";
    bool first = true;
    for (int x : {k, j, i})
      if (x >= 0) {
        s += (first ? "" : ",") + g(x);
        first = false;
      }
    return s + "): " + word_to_string(to_word(lhs)) + " vs " +
           word_to_string(to_word(rhs));
  }
};

struct ConsistencyOptions {
  // When set, skip the triple overlap for k > j > i whenever
  // weights[i] + weights[j] + weights[k] > max_weight.
  const std::vector<int> *weights = nullptr;
  int max_weight = 0;
  // Only overlaps whose lowest generator index is below this bound.
  std::size_t below = static_cast<std::size_t>(-1);
  // Generators from this index on take no part in any overlap.
  std::size_t end = static_cast<std::size_t>(-1);
};

/// Calls f(overlap) for every overlap, evaluated both ways. Stops early if
/// f returns false.
template <class F>
void for_each_overlap(const PcPresentation &p, F &&f,
                      const ConsistencyOptions &opt = {}) {
  const std::size_t m = std::min(p.size(), opt.end);
  const std::size_t below = std::min(opt.below, m);
  auto gen = [&](std::size_t x) { return p.generator(x); };
  auto letter = [](std::size_t x, Exp e) {
    return PcWord{{static_cast<int>(x), e}};
  };
  auto emit = [&](const char *kind, int k, int j, int i, ExpVec lhs, ExpVec rhs) {
    Overlap o{kind, k, j, i, std::move(lhs), std::move(rhs)};
    return f(o);
  };

  // (g_k g_j) g_i = g_k (g_j g_i)
  for (std::size_t i = 0; i < below; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const ExpVec ji = p.collect(PcWord{{static_cast<int>(j), 1}, {static_cast<int>(i), 1}});
      for (std::size_t k = j + 1; k < m; ++k) {
        if (opt.weights && (*opt.weights)[i] + (*opt.weights)[j] + (*opt.weights)[k] >
                               opt.max_weight)
          continue;
        ExpVec lhs = p.collect(p.collect(PcWord{{static_cast<int>(k), 1}, {static_cast<int>(j), 1}}),
                               letter(i, 1));
        ExpVec rhs = p.collect(gen(k), to_word(ji));
        if (!emit("associativity", int(k), int(j), int(i), std::move(lhs), std::move(rhs)))
          return;
      }
    }

  for (std::size_t i = 0; i < below; ++i) {
    // g_i^{o_i} g_i = g_i g_i^{o_i}
    if (!p.is_infinite(i)) {
      ExpVec lhs = p.collect(p.collect(p.power(i)), letter(i, 1));
      ExpVec rhs = p.collect(gen(i), p.power(i));
      if (!emit("power-power", -1, -1, int(i), std::move(lhs), std::move(rhs)))
        return;
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const ExpVec ji = p.collect(PcWord{{static_cast<int>(j), 1}, {static_cast<int>(i), 1}});
      // g_j^{o_j} g_i = g_j^{o_j - 1} (g_j g_i)
      if (!p.is_infinite(j)) {
        ExpVec lhs = p.collect(p.collect(p.power(j)), letter(i, 1));
        ExpVec rhs = p.collect(p.generator(j, p.relative_order(j) - 1), to_word(ji));
        if (!emit("power-left", -1, int(j), int(i), std::move(lhs), std::move(rhs)))
          return;
      }
      // g_j g_i^{o_i} = (g_j g_i) g_i^{o_i - 1}
      if (!p.is_infinite(i)) {
        ExpVec lhs = p.collect(gen(j), p.power(i));
        ExpVec rhs = p.collect(ji, letter(i, p.relative_order(i) - 1));
        if (!emit("power-right", -1, int(j), int(i), std::move(lhs), std::move(rhs)))
          return;
      }
      // g_j = (g_j g_i^-1) g_i
      if (p.is_infinite(i)) {
        ExpVec lhs = p.collect(p.collect(PcWord{{static_cast<int>(j), 1}, {static_cast<int>(i), -1}}),
                               letter(i, 1));
        if (!emit("inverse-right", -1, int(j), int(i), std::move(lhs), gen(j)))
          return;
      }
      // g_i = g_j^-1 (g_j g_i)
      if (p.is_infinite(j)) {
        ExpVec lhs = p.collect(p.generator(j, -1), to_word(ji));
        if (!emit("inverse-left", -1, int(j), int(i), std::move(lhs), gen(i)))
          return;
      }
      // g_i^-1 = g_j^-1 (g_j g_i^-1)
      if (p.is_infinite(i) && p.is_infinite(j)) {
        ExpVec lhs = p.collect(p.generator(j, -1),
                               to_word(p.collect(PcWord{{static_cast<int>(j), 1},
                                                        {static_cast<int>(i), -1}})));
        if (!emit("inverse-both", -1, int(j), int(i), std::move(lhs), p.generator(i, -1)))
          return;
      }
    }
  }
}

/// First failing overlap, or nothing when the presentation is consistent.
inline std::optional<Overlap> consistency_check(const PcPresentation &p,
                                                const ConsistencyOptions &opt = {}) {
  std::optional<Overlap> bad;
  for_each_overlap(
      p,
      [&](Overlap &o) {
        if (o.lhs != o.rhs) {
          bad = std::move(o);
          return false;
        }
        return true;
      },
      opt);
  return bad;
}

inline bool is_consistent(const PcPresentation &p) {
  return !consistency_check(p).has_value();
}

} // namespace hcgt
