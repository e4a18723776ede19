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

// Subgroups of pc groups via induced generating sequences: at most one
// element per depth, leading exponent positive (and dividing the relative
// order when that is finite). Membership is decided by sifting.

#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "hcgt/budget.hpp"
#include "hcgt/intlinalg.hpp"
#include "hcgt/pc/presentation.hpp"

namespace hcgt {

inline std::size_t depth(const ExpVec &x) {
  std::size_t d = 0;
  while (d < x.size() && x[d] == 0)
    ++d;
  return d;
}

class PcSubgroup {
public:
  explicit PcSubgroup(const PcPresentation &p)
      : p_(&p), slots_(p.size()), tail_(abelian_tail(p)) {}

  const PcPresentation &ambient() const { return *p_; }

  /// igs members in increasing depth.
  std::vector<ExpVec> igs() const {
    std::vector<ExpVec> out;
    for (const auto &s : slots_)
      if (s)
        out.push_back(*s);
    return out;
  }

  /// The igs with every member reduced against the deeper ones: entries at
  /// depths e > d that hold a member lie in [0, leading exponent of e). Two
  /// equal subgroups have equal canonical igs.
  std::vector<ExpVec> canonical_igs() const {
    std::vector<std::optional<ExpVec>> canon(slots_.size());
    for (std::size_t d = slots_.size(); d-- > 0;) {
      if (!slots_[d])
        continue;
      ExpVec x = normalize(*slots_[d], d);
      for (std::size_t e = d + 1; e < x.size(); ++e) {
        if (!canon[e] || x[e] == 0)
          continue;
        const Exp q = detail::floor_div(x[e], (*canon[e])[e]);
        if (q != 0)
          x = p_->multiply(x, p_->power(*canon[e], -q));
      }
      canon[d] = std::move(x);
    }
    std::vector<ExpVec> out;
    for (auto &c : canon)
      if (c)
        out.push_back(std::move(*c));
    return out;
  }

  std::size_t igs_size() const {
    std::size_t n = 0;
    for (const auto &s : slots_)
      n += s.has_value();
    return n;
  }

  const std::optional<ExpVec> &slot(std::size_t d) const { return slots_[d]; }

  bool is_trivial() const { return igs_size() == 0; }

  /// Relative order of the igs member at depth d (0 = infinite).
  Exp relative_order_at(std::size_t d) const {
    const Exp o = p_->relative_order(d);
    return o == 0 ? 0 : o / (*slots_[d])[d];
  }

  std::size_t hirsch_length() const {
    std::size_t h = 0;
    for (std::size_t d = 0; d < slots_.size(); ++d)
      if (slots_[d] && p_->is_infinite(d))
        ++h;
    return h;
  }

  /// Order, or 0 when infinite.
  Integer order() const {
    Integer n = 1;
    for (std::size_t d = 0; d < slots_.size(); ++d)
      if (slots_[d]) {
        if (p_->is_infinite(d))
          return 0;
        n *= relative_order_at(d);
      }
    return n;
  }

  /// Divides x by the igs from the left as far as possible; the identity
  /// comes back exactly for members.
  ExpVec sift(ExpVec x) const {
    std::size_t d = depth(x);
    while (d < x.size()) {
      const auto &s = slots_[d];
      if (!s)
        return x;
      const Exp l = (*s)[d];
      if (x[d] % l != 0)
        return x;
      x = p_->multiply(p_->power(*s, -(x[d] / l)), x);
      d = depth(x);
    }
    return x;
  }

  /// Like sift, also returning the exponents used: x = prod s_d^{c_d} * residue.
  ExpVec sift_coefficients(ExpVec x, std::vector<Exp> &coeffs) const {
    coeffs.assign(slots_.size(), 0);
    std::size_t d = depth(x);
    while (d < x.size()) {
      const auto &s = slots_[d];
      if (!s)
        return x;
      const Exp l = (*s)[d];
      if (x[d] % l != 0)
        return x;
      const Exp q = x[d] / l;
      coeffs[d] = q;
      x = p_->multiply(p_->power(*s, -q), x);
      d = depth(x);
    }
    return x;
  }

  bool contains(const ExpVec &x) const { return p_->is_identity(sift(x)); }

  bool contains(const PcSubgroup &other) const {
    for (const auto &g : other.igs())
      if (!contains(g))
        return false;
    return true;
  }

  friend bool operator==(const PcSubgroup &a, const PcSubgroup &b) {
    return a.contains(b) && b.contains(a);
  }

  bool is_normal() const {
    for (const auto &z : igs())
      for (std::size_t k = 0; k < p_->size(); ++k) {
        if (!contains(p_->conjugate(z, p_->generator(k))))
          return false;
        if (p_->is_infinite(k) && !contains(p_->conjugate(z, p_->generator(k, -1))))
          return false;
      }
    return true;
  }

  /// Normality against a generating set of the group, inverses included.
  bool is_normal(const std::vector<ExpVec> &group_gens) const {
    for (const auto &z : igs())
      for (const auto &g : group_gens)
        if (!contains(p_->conjugate(z, g)))
          return false;
    return true;
  }

  /// Adds elements and closes: the result is the subgroup generated by the
  /// old igs, the new elements and all their conjugates under `conjugators`.
  void extend(const std::vector<ExpVec> &elements,
              const std::vector<ExpVec> &conjugators = {}) {
    std::deque<ExpVec> pending(elements.begin(), elements.end());
    std::deque<std::size_t> fresh;
    auto drain = [&] {
      while (!pending.empty()) {
        ExpVec x = std::move(pending.front());
        pending.pop_front();
        insert(std::move(x), pending, fresh);
      }
    };
    drain();
    while (!fresh.empty()) {
      Budget::check("subgroup closure");
      const std::size_t d = fresh.front();
      fresh.pop_front();
      if (!slots_[d])
        continue;
      const ExpVec z = *slots_[d];
      const bool zinf = p_->is_infinite(d);
      if (!zinf) {
        const Exp r = relative_order_at(d);
        if (r > 1)
          pending.push_back(p_->power(z, r));
      }
      for (std::size_t e = 0; e < slots_.size(); ++e) {
        if (e == d || !slots_[e])
          continue;
        const ExpVec &y = *slots_[e];
        pending.push_back(p_->commutator(z, y));
        if (p_->is_infinite(e))
          pending.push_back(p_->commutator(z, p_->inverse(y)));
        if (zinf)
          pending.push_back(p_->commutator(p_->inverse(z), y));
      }
      for (const auto &c : conjugators)
        pending.push_back(p_->conjugate(z, c));
      drain();
    }
  }

private:
  void insert(ExpVec x, std::deque<ExpVec> &pending, std::deque<std::size_t> &fresh) {
    x = sift(std::move(x));
    const std::size_t d = depth(x);
    if (d == x.size())
      return;
    if (d >= tail_) {
      insert_tail(x, fresh);
      return;
    }
    x = reduce_from(normalize(std::move(x), d), d + 1);
    if (!slots_[d]) {
      slots_[d] = std::move(x);
      reduce_above(d);
      fresh.push_back(d);
      return;
    }
    // x[d] is not a multiple of the current leading exponent: merge by gcd
    ExpVec y = *slots_[d];
    auto [g, s, t] = ext_gcd(Integer(x[d]), Integer(y[d]));
    ExpVec z = p_->multiply(p_->power(x, static_cast<Exp>(s)), p_->power(y, static_cast<Exp>(t)));
    z = normalize(std::move(z), d);
    slots_[d] = reduce_from(std::move(z), d + 1);
    reduce_above(d);
    fresh.push_back(d);
    pending.push_back(std::move(x));
    pending.push_back(std::move(y));
  }

  // Exponents at depths holding an igs member brought into [0, lead) by
  // right multiplication, which leaves shallower entries alone. Keeps the
  // igs from accumulating huge exponents.
  ExpVec reduce_from(ExpVec x, std::size_t from) const {
    for (std::size_t e = from; e < x.size(); ++e) {
      if (x[e] == 0 || !slots_[e])
        continue;
      const ExpVec &s = *slots_[e];
      const Exp q = detail::floor_div(x[e], s[e]);
      if (q != 0)
        x = p_->multiply(x, p_->power(s, -q));
    }
    return x;
  }

  void reduce_above(std::size_t d) {
    const Exp lead = (*slots_[d])[d];
    for (std::size_t c = 0; c < d; ++c)
      if (slots_[c] && ((*slots_[c])[d] < 0 || (*slots_[c])[d] >= lead))
        slots_[c] = reduce_from(std::move(*slots_[c]), d);
  }

  // Leading exponent made positive, and for finite relative order o made a
  // divisor of o.
  ExpVec normalize(ExpVec x, std::size_t d) const {
    const Exp o = p_->relative_order(d);
    if (o == 0) {
      if (x[d] < 0)
        x = p_->inverse(x);
      return x;
    }
    auto [g, s, t] = ext_gcd(Integer(x[d]), Integer(o));
    if (g == x[d])
      return x;
    return p_->power(x, static_cast<Exp>(s));
  }

  // Smallest b such that g_b, ..., g_{m-1} commute pairwise.
  static std::size_t abelian_tail(const PcPresentation &p) {
    std::size_t b = p.size();
    while (b > 0) {
      bool ok = true;
      for (std::size_t j = b; j < p.size() && ok; ++j)
        ok = p.commutes(j, b - 1);
      if (!ok)
        break;
      --b;
    }
    return b;
  }

  // Elements of the abelian tail are exponent vectors modulo the power
  // relations there. Their span is kept as an exact integer lattice in
  // Hermite form, whose rows become the igs members; exponent growth in the
  // gcd merges would otherwise overflow.
  void insert_tail(const ExpVec &x, std::deque<std::size_t> &fresh) {
    const std::size_t m = p_->size(), u = m - tail_;
    if (!lattice_) {
      lattice_.emplace(u);
      for (std::size_t i = tail_; i < m; ++i) {
        if (p_->is_infinite(i))
          continue;
        std::vector<Integer> row(u);
        row[i - tail_] = p_->relative_order(i);
        for (const auto &l : p_->power(i))
          row[static_cast<std::size_t>(l.gen) - tail_] -= l.exp;
        lattice_->add(std::move(row));
      }
      for (std::size_t i = tail_; i < m; ++i)
        if (slots_[i]) {
          std::vector<Integer> row(u);
          for (std::size_t k = 0; k < u; ++k)
            row[k] = (*slots_[i])[tail_ + k];
          lattice_->add(std::move(row));
        }
    }
    std::vector<Integer> v(u);
    for (std::size_t k = 0; k < u; ++k)
      v[k] = x[tail_ + k];
    if (!lattice_->add(std::move(v)))
      return;
    for (const auto &row : lattice_->hermite_basis()) {
      std::size_t c = 0;
      while (row[c] == 0)
        ++c;
      const std::size_t pos = tail_ + c;
      if (!p_->is_infinite(pos) && row[c] >= p_->relative_order(pos))
        continue;
      PcWord w;
      for (std::size_t k = c; k < u; ++k)
        if (row[k] != 0) {
          if (row[k] > std::numeric_limits<Exp>::max() || row[k] < std::numeric_limits<Exp>::min())
            throw std::overflow_error("subgroup: lattice entry does not fit in 64 bits");
          w.push_back({static_cast<int>(tail_ + k), static_cast<Exp>(row[k])});
        }
      ExpVec e = p_->collect(w);
      if (!slots_[pos] || *slots_[pos] != e) {
        slots_[pos] = std::move(e);
        fresh.push_back(pos);
      }
    }
  }

  const PcPresentation *p_;
  std::vector<std::optional<ExpVec>> slots_;
  std::size_t tail_;
  std::optional<LatticeEchelon> lattice_;
};

inline std::vector<ExpVec> generators_with_inverses(const PcPresentation &p) {
  std::vector<ExpVec> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.push_back(p.generator(k));
    if (p.is_infinite(k))
      out.push_back(p.generator(k, -1));
  }
  return out;
}

inline PcSubgroup subgroup(const PcPresentation &p, const std::vector<ExpVec> &gens) {
  PcSubgroup h(p);
  h.extend(gens);
  return h;
}

inline PcSubgroup whole_group(const PcPresentation &p) {
  PcSubgroup h(p);
  std::vector<ExpVec> gens;
  for (std::size_t k = 0; k < p.size(); ++k)
    gens.push_back(p.generator(k));
  h.extend(gens);
  return h;
}

inline PcSubgroup normal_closure(const PcPresentation &p, const std::vector<ExpVec> &gens) {
  PcSubgroup h(p);
  h.extend(gens, generators_with_inverses(p));
  return h;
}

/// Normal closure when a (short) generating set of the whole group is known.
/// Inverses of infinite-order members must be included by the caller.
inline PcSubgroup normal_closure(const PcPresentation &p, const std::vector<ExpVec> &gens,
                                 const std::vector<ExpVec> &group_gens) {
  PcSubgroup h(p);
  h.extend(gens, group_gens);
  return h;
}

inline PcSubgroup join(const PcSubgroup &a, const PcSubgroup &b) {
  PcSubgroup h = a;
  h.extend(b.igs());
  return h;
}

inline std::vector<ExpVec> igs_with_inverses(const PcSubgroup &h) {
  std::vector<ExpVec> out;
  const auto &p = h.ambient();
  for (std::size_t d = 0; d < p.size(); ++d)
    if (h.slot(d)) {
      out.push_back(*h.slot(d));
      if (p.is_infinite(d))
        out.push_back(p.inverse(*h.slot(d)));
    }
  return out;
}

/// [H, K]: generated by [h, k] over the igs members, closed under
/// conjugation by H and K. When both are known to be normal the ambient
/// generators are used as conjugators instead, which gives the same group;
/// group_gens replaces them by a smaller generating set.
inline PcSubgroup commutator_subgroup(const PcSubgroup &H, const PcSubgroup &K,
                                      bool both_normal = false,
                                      const std::vector<ExpVec> *group_gens = nullptr) {
  const auto &p = H.ambient();
  std::vector<ExpVec> gens;
  for (const auto &h : H.igs())
    for (const auto &k : K.igs())
      gens.push_back(p.commutator(h, k));
  std::vector<ExpVec> conj;
  if (both_normal) {
    conj = group_gens ? *group_gens : generators_with_inverses(p);
  } else {
    conj = igs_with_inverses(H);
    auto kk = igs_with_inverses(K);
    conj.insert(conj.end(), kk.begin(), kk.end());
  }
  PcSubgroup out(p);
  out.extend(gens, conj);
  return out;
}

/// gamma_1 = H, gamma_{k+1} = [gamma_k, H]; stops after class_bound terms or
/// once the series is stationary.
inline std::vector<PcSubgroup> lower_central_series(const PcSubgroup &H,
                                                    std::size_t class_bound,
                                                    bool normal = false) {
  std::vector<PcSubgroup> out{H};
  while (out.size() < class_bound) {
    PcSubgroup next = commutator_subgroup(out.back(), H, normal);
    const bool stationary = next == out.back();
    out.push_back(std::move(next));
    if (stationary || out.back().is_trivial())
      break;
  }
  return out;
}

} // namespace hcgt
