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

// Symmetric commutator subgroups: the product over all orderings of the
// left-normed brackets [[H_s1, H_s2], ..., H_sk] of normal subgroups, and
// random non-left-normed bracket arrangements used as a spot check.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hcgt/errors.hpp"
#include "hcgt/free_product.hpp"
#include "hcgt/pc/subgroup.hpp"

namespace hcgt {

struct SymmetricOptions {
  unsigned jobs = 1;
  bool reverse_order = false; // enumerate orderings backwards
  // Generates the ambient group, inverses included; empty means all pc
  // generators. Only used as conjugators.
  std::vector<ExpVec> group_gens;
};

namespace detail {

// All left-normed brackets extending one unordered leading pair, sharing
// prefixes along the way.
inline std::vector<PcSubgroup> brackets_from_pair(const std::vector<PcSubgroup> &subs,
                                                  std::size_t a, std::size_t b,
                                                  const SymmetricOptions &opt) {
  const bool reverse = opt.reverse_order;
  const std::vector<ExpVec> *gg = opt.group_gens.empty() ? nullptr : &opt.group_gens;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (i != a && i != b)
      rest.push_back(i);
  std::vector<PcSubgroup> out;
  std::map<std::vector<std::size_t>, PcSubgroup> memo;
  auto bracket = [&](auto &&self, const std::vector<std::size_t> &seq) -> PcSubgroup {
    if (seq.empty())
      return commutator_subgroup(subs[a], subs[b], true, gg);
    if (auto it = memo.find(seq); it != memo.end())
      return it->second;
    std::vector<std::size_t> head(seq.begin(), seq.end() - 1);
    PcSubgroup h = self(self, head);
    PcSubgroup r = h.is_trivial() ? h : commutator_subgroup(h, subs[seq.back()], true, gg);
    memo.emplace(seq, r);
    return r;
  };
  std::vector<std::size_t> perm = rest;
  do {
    std::vector<std::size_t> seq = perm;
    if (reverse)
      std::reverse(seq.begin(), seq.end());
    out.push_back(bracket(bracket, seq));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

} // namespace detail

/// Product over all orderings of the left-normed brackets. The inputs must
/// be normal; the first two entries of a bracket commute as subgroups, so
/// only unordered leading pairs are enumerated.
inline PcSubgroup symmetric_commutator(const std::vector<PcSubgroup> &subs,
                                       const SymmetricOptions &opt = {}) {
  if (subs.empty())
    throw std::invalid_argument("symmetric_commutator: no subgroups");
  const PcPresentation &p = subs.front().ambient();
  for (const auto &h : subs) {
    if (&h.ambient() != &p)
      throw std::invalid_argument("symmetric_commutator: different ambient groups");
    if (!(opt.group_gens.empty() ? h.is_normal() : h.is_normal(opt.group_gens)))
      throw AlgebraError("symmetric_commutator: input subgroup is not normal");
  }
  if (subs.size() == 1)
    return subs.front();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = a + 1; b < subs.size(); ++b)
      pairs.emplace_back(a, b);
  if (opt.reverse_order)
    std::reverse(pairs.begin(), pairs.end());

  std::vector<std::vector<PcSubgroup>> parts(pairs.size());
  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
      parts[k] = detail::brackets_from_pair(subs, pairs[k].first, pairs[k].second, opt);
  } else {
    // Workers share nothing but read access to the presentation.
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, pairs.size()); ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t k; (k = next++) < pairs.size();)
          parts[k] = detail::brackets_from_pair(subs, pairs[k].first, pairs[k].second, opt);
      }));
    for (auto &w : workers)
      w.get();
  }
  PcSubgroup out(p);
  std::vector<ExpVec> gens;
  for (const auto &part : parts)
    for (const auto &h : part) {
      auto igs = h.igs();
      gens.insert(gens.end(), igs.begin(), igs.end());
    }
  out.extend(gens);
  return out;
}

/// A bracket arrangement whose leaves are fixed elements of T. Node 0 is
/// the root; a node with left < 0 is a leaf.
struct BracketTree {
  struct Node {
    int left = -1, right = -1;
    std::size_t family = 0;
    FreeProductWord leaf;
  };
  std::vector<Node> nodes;

  std::size_t weight() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const Node &x) { return x.left < 0; }));
  }

  /// Left-normed: every right operand is a leaf.
  bool is_left_normed() const {
    for (const auto &x : nodes)
      if (x.left >= 0 && nodes[static_cast<std::size_t>(x.right)].left >= 0)
        return false;
    return true;
  }

  template <class Eval, class Comm> auto evaluate(Eval &&leaf, Comm &&comm, int at = 0) const {
    const Node &x = nodes[static_cast<std::size_t>(at)];
    if (x.left < 0)
      return leaf(x.leaf);
    return comm(evaluate(leaf, comm, x.left), evaluate(leaf, comm, x.right));
  }
};

/// count random arrangements of weight between k and max_weight over the
/// k = families.size() families, each using every family at least once and
/// none of them left-normed. Leaves are normal generators conjugated by
/// short random words.
inline std::vector<BracketTree>
random_fat_brackets(const FreeProductContext &fp,
                    const std::vector<std::vector<FreeProductWord>> &families, std::size_t count,
                    std::size_t max_weight, std::uint64_t seed) {
  const std::size_t k = families.size();
  if (k < 2 || max_weight < std::max<std::size_t>(k, 3))
    throw std::invalid_argument("random_fat_brackets: need two families and weight >= 3");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto random_syllable = [&](Side side) {
    const auto &f = fp.factor(side);
    return fp.syllable(side, f.element_at(static_cast<std::int64_t>(
                                 uniform(1, static_cast<std::size_t>(f.order()) - 1))));
  };
  auto random_leaf = [&](std::size_t fam) {
    const auto &gens = families[fam];
    FreeProductWord r = gens[uniform(0, gens.size() - 1)];
    FreeProductWord c;
    const std::size_t len = uniform(0, 3);
    for (std::size_t i = 0; i < len; ++i)
      c = fp.mul(c, random_syllable(uniform(0, 1) ? Side::L : Side::R));
    return fp.mul(fp.mul(fp.inverse(c), r), c);
  };
  std::vector<BracketTree> out;
  while (out.size() < count) {
    const std::size_t w = uniform(std::max<std::size_t>(k, 3), max_weight);
    BracketTree t;
    auto grow = [&](auto &&self, std::size_t leaves) -> int {
      const int id = static_cast<int>(t.nodes.size());
      t.nodes.emplace_back();
      if (leaves == 1)
        return id;
      const std::size_t a = uniform(1, leaves - 1);
      const int l = self(self, a);
      const int r = self(self, leaves - a);
      t.nodes[static_cast<std::size_t>(id)].left = l;
      t.nodes[static_cast<std::size_t>(id)].right = r;
      return id;
    };
    grow(grow, w);
    if (t.is_left_normed())
      continue;
    std::vector<std::size_t> labels(k);
    std::iota(labels.begin(), labels.end(), 0);
    while (labels.size() < w)
      labels.push_back(uniform(0, k - 1));
    std::shuffle(labels.begin(), labels.end(), rng);
    std::size_t next = 0;
    for (auto &x : t.nodes)
      if (x.left < 0) {
        x.family = labels[next++];
        x.leaf = random_leaf(x.family);
      }
    out.push_back(std::move(t));
  }
  return out;
}

} // namespace hcgt
