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

// Words in a free product L * R of two finite abelian groups, kept in the
// alternating syllable normal form, plus the free basis {[l, r]} of the
// commutator subgroup [L*R, L*R] and rewriting into it.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcgt/abelian_group.hpp"
#include "hcgt/free_word.hpp"

namespace hcgt {

enum class Side : std::uint8_t { L, R };

struct Syllable {
  Side side;
  AbelianElement elem;
  friend bool operator==(const Syllable &, const Syllable &) = default;
};

struct FreeProductWord {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  friend bool operator==(const FreeProductWord &,
                         const FreeProductWord &) = default;
};

/// Pair (l, r) naming the basis letter [l, r] = l^-1 r^-1 l r, stored as
/// lexicographic element indices in the two factors (both nonzero).
struct BasisPair {
  std::int64_t l;
  std::int64_t r;
  friend bool operator==(const BasisPair &, const BasisPair &) = default;
};

class FreeProductContext {
public:
  FreeProductContext(FiniteAbelianGroup left, FiniteAbelianGroup right)
      : left_(std::move(left)), right_(std::move(right)) {}

  const FiniteAbelianGroup &left() const { return left_; }
  const FiniteAbelianGroup &right() const { return right_; }
  const FiniteAbelianGroup &factor(Side s) const {
    return s == Side::L ? left_ : right_;
  }

  FreeProductWord syllable(Side s, AbelianElement x) const {
    FreeProductWord w;
    x = factor(s).reduce(std::move(x));
    if (!factor(s).is_identity(x))
      w.syllables.push_back({s, std::move(x)});
    return w;
  }

  /// Checks the normal-form invariants (alternation, no identity syllable,
  /// residues in range).
  bool is_normal(const FreeProductWord &w) const {
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
      const auto &s = w.syllables[i];
      if (!factor(s.side).contains(s.elem) || factor(s.side).is_identity(s.elem))
        return false;
      if (i && w.syllables[i - 1].side == s.side)
        return false;
    }
    return true;
  }

  FreeProductWord mul(const FreeProductWord &u, const FreeProductWord &v) const {
    FreeProductWord out = u;
    for (const auto &s : v.syllables)
      append(out, s);
    return out;
  }

  FreeProductWord inverse(const FreeProductWord &u) const {
    FreeProductWord out;
    for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it)
      out.syllables.push_back({it->side, factor(it->side).inv(it->elem)});
    return out;
  }

  FreeProductWord commutator(const FreeProductWord &u,
                             const FreeProductWord &v) const {
    return mul(mul(inverse(u), inverse(v)), mul(u, v));
  }

  FreeProductWord conjugate(const FreeProductWord &u,
                            const FreeProductWord &by) const {
    return mul(mul(inverse(by), u), by);
  }

  /// Image of w under the projection to one factor.
  AbelianElement projection(const FreeProductWord &w, Side s) const {
    AbelianElement x = factor(s).identity();
    for (const auto &syl : w.syllables)
      if (syl.side == s)
        x = factor(s).op(x, syl.elem);
    return x;
  }

  bool in_commutator_subgroup(const FreeProductWord &w) const {
    return left_.is_identity(projection(w, Side::L)) &&
           right_.is_identity(projection(w, Side::R));
  }

  std::size_t basis_size() const {
    return static_cast<std::size_t>((left_.order() - 1) * (right_.order() - 1));
  }

  BasisPair basis_pair(std::size_t k) const {
    const std::int64_t rr = right_.order() - 1;
    const auto kk = static_cast<std::int64_t>(k);
    return {kk / rr + 1, kk % rr + 1};
  }

  /// Basis letter index of [l, r]; -1 when l or r is trivial.
  std::int64_t basis_index(std::int64_t l, std::int64_t r) const {
    if (l == 0 || r == 0)
      return -1;
    return (l - 1) * (right_.order() - 1) + (r - 1);
  }

  std::vector<BasisPair> basis_commutators() const {
    std::vector<BasisPair> out;
    for (std::size_t k = 0; k < basis_size(); ++k)
      out.push_back(basis_pair(k));
    return out;
  }

  /// The commutator [l, r] as a syllable word.
  FreeProductWord expand_letter(std::size_t k) const {
    BasisPair p = basis_pair(k);
    return commutator(syllable(Side::L, left_.element_at(p.l)),
                      syllable(Side::R, right_.element_at(p.r)));
  }

  FreeProductWord expand(const FreeWord &w) const {
    FreeProductWord out;
    for (const auto &l : w.letters()) {
      FreeProductWord x = expand_letter(static_cast<std::size_t>(l.gen));
      if (l.exp < 0)
        x = inverse(x);
      for (std::int64_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i)
        out = mul(out, x);
    }
    return out;
  }

  /// Reidemeister-Schreier rewrite of w in [L*R, L*R] over the basis
  /// letters, with transversal l.r for the coset of (l, r) in L x R. An
  /// R-syllable contributes nothing; an L-syllable l' read at coset (l, r)
  /// contributes [l^-1, r^-1] [(l l')^-1, r^-1]^-1.
  FreeWord rewrite_in_basis(const FreeProductWord &w) const {
    if (!in_commutator_subgroup(w))
      throw std::invalid_argument("rewrite_in_basis: word is not in the commutator subgroup");
    AbelianElement l = left_.identity();
    AbelianElement r = right_.identity();
    FreeWord out;
    for (const auto &syl : w.syllables) {
      if (syl.side == Side::R) {
        r = right_.op(r, syl.elem);
        continue;
      }
      AbelianElement ll = left_.op(l, syl.elem);
      const std::int64_t ri = right_.index_of(right_.inv(r));
      const std::int64_t a = basis_index(left_.index_of(left_.inv(l)), ri);
      const std::int64_t b = basis_index(left_.index_of(left_.inv(ll)), ri);
      if (a >= 0)
        out.push({static_cast<int>(a), 1});
      if (b >= 0)
        out.push({static_cast<int>(b), -1});
      l = std::move(ll);
    }
    return out;
  }

  // Text form: a[c1,...] for L-syllables, b[c1,...] for R-syllables, with
  // the flat residue coordinates of the factor; 1 is the identity. Tokens
  // are separated by whitespace or '*'; a trailing ^-1 inverts a syllable.
  std::string to_string(const FreeProductWord &w) const {
    if (w.syllables.empty())
      return "1";
    std::string s;
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
      const auto &syl = w.syllables[i];
      if (i)
        s += ' ';
      s += syl.side == Side::L ? "a[" : "b[";
      for (std::size_t c = 0; c < syl.elem.size(); ++c)
        s += (c ? "," : "") + std::to_string(syl.elem[c]);
      s += ']';
    }
    return s;
  }

  FreeProductWord parse(const std::string &text) const {
    FreeProductWord out;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '*'))
        ++i;
    };
    skip();
    while (i < text.size()) {
      if (text[i] == '1') {
        ++i;
        skip();
        continue;
      }
      if (text[i] != 'a' && text[i] != 'b')
        throw std::invalid_argument("parse: expected a[...] or b[...] at offset " +
                                    std::to_string(i));
      Side side = text[i] == 'a' ? Side::L : Side::R;
      ++i;
      if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("parse: expected '['");
      const std::size_t close = text.find(']', i);
      if (close == std::string::npos)
        throw std::invalid_argument("parse: missing ']'");
      AbelianElement x;
      std::stringstream ss(text.substr(i + 1, close - i - 1));
      std::string item;
      while (std::getline(ss, item, ','))
        x.push_back(std::stoll(item));
      if (x.size() != factor(side).rank())
        throw std::invalid_argument("parse: wrong number of coordinates");
      i = close + 1;
      FreeProductWord syl = syllable(side, x);
      if (text.compare(i, 3, "^-1") == 0) {
        syl = inverse(syl);
        i += 3;
      }
      out = mul(out, syl);
      skip();
    }
    return out;
  }

private:
  void append(FreeProductWord &w, const Syllable &s) const {
    if (!w.syllables.empty() && w.syllables.back().side == s.side) {
      auto merged = factor(s.side).op(w.syllables.back().elem, s.elem);
      if (factor(s.side).is_identity(merged))
        w.syllables.pop_back();
      else
        w.syllables.back().elem = std::move(merged);
      return;
    }
    if (!factor(s.side).is_identity(s.elem))
      w.syllables.push_back(s);
  }

  FiniteAbelianGroup left_;
  FiniteAbelianGroup right_;
};

} // namespace hcgt
