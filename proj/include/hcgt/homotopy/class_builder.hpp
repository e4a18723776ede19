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

// Nilpotent quotients of K = [T, T] inside T = L * R, one lower central
// layer of K at a time, optionally removing a normal subgroup N <= K after
// every step.
//
// Stage k is H_k = T / (gamma_{k+1}(K) N). Its pc generators are those of
// L x R (weight 0) followed by the K-part, sorted by weight. The next stage
// comes from E = T / [M, K] with M = gamma_{k+1}(K) N: the layer M / [M, K]
// is central in the K-part and contains the image of N, so
// H_{k+1} = E / image(N).
//
// Every K-part generator carries a definition (a letter of K, or the tail of
// a power, conjugate or letter relation). Defining relations never get a
// tail later, which keeps generator identities stable from one class to
// the next and lets the action of L x R on a new generator be read off its
// definition.

#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>
#include <vector>

#include "hcgt/budget.hpp"
#include "hcgt/errors.hpp"
#include "hcgt/free_product.hpp"
#include "hcgt/intlinalg.hpp"
#include "hcgt/log.hpp"
#include "hcgt/pc/consistency.hpp"
#include "hcgt/pc/presentation.hpp"
#include "hcgt/pc/quotient.hpp"
#include "hcgt/pc/subgroup.hpp"

namespace hcgt {

struct GenDef {
  enum class Kind : std::uint8_t { Top, Letter, Power, Conj, Epi };
  Kind kind = Kind::Top;
  std::size_t i = 0; // Letter, Epi: basis letter. Power: g_i. Conj: g_i.
  std::size_t j = 0; // Conj: g_j, so the generator is base^-1 g_j^{g_i}
  PcWord base;       // right-hand side of the relation before its tail
};

struct NilStage {
  PcPresentation pc;
  std::size_t left_gens = 0;
  std::size_t right_gens = 0;
  int cls = 0; // class of the K-part
  std::vector<int> weight;
  std::vector<GenDef> defs;
  std::vector<ExpVec> letters; // image of each basis letter of K

  std::size_t top() const { return left_gens + right_gens; }

  /// The top generators generate the whole group (it is a quotient of T).
  std::vector<ExpVec> generators() const {
    std::vector<ExpVec> out;
    for (std::size_t g = 0; g < top(); ++g)
      out.push_back(pc.generator(g));
    return out;
  }

  /// Image of a word of T. Syllable coordinates are the top generators.
  ExpVec lift(const FreeProductWord &w) const {
    PcWord word;
    for (const auto &syl : w.syllables) {
      const std::size_t off = syl.side == Side::L ? 0 : left_gens;
      for (std::size_t c = 0; c < syl.elem.size(); ++c)
        if (syl.elem[c] != 0)
          word.push_back({static_cast<int>(off + c), syl.elem[c]});
    }
    return pc.collect(word);
  }

  /// First generator of the top weight, or size() for the bare top.
  std::size_t layer_start() const {
    std::size_t b = pc.size();
    while (b > top() && weight[b - 1] == cls)
      --b;
    return b;
  }
};

struct NqOptions {
  std::size_t max_hirsch = 0; // 0 = unlimited
  std::size_t max_gens = 0;   // bound on generators of the covering group
  bool filtered = true;       // weighted consistency checks
};

/// Normal subgroup to remove from the covering stage. It must lie in the
/// new layer.
using RelatorFn = std::function<PcSubgroup(const NilStage &)>;

class NqBuilder {
public:
  explicit NqBuilder(FreeProductContext fp) : fp_(std::move(fp)) {
    nl_ = fp_.left().rank();
    nr_ = fp_.right().rank();
    nx_ = fp_.basis_size();
    const std::size_t s = nl_ + nr_;
    phi_.resize(s);
    for (std::size_t t = 0; t < s; ++t) {
      const auto tw = top_word(t);
      for (std::size_t x = 0; x < nx_; ++x)
        phi_[t].push_back(
            fp_.rewrite_in_basis(fp_.mul(fp_.mul(fp_.inverse(tw), fp_.expand_letter(x)), tw)));
    }
    vu_.assign(nr_, {});
    for (std::size_t v = 0; v < nr_; ++v)
      for (std::size_t u = 0; u < nl_; ++u)
        vu_[v].push_back(fp_.rewrite_in_basis(fp_.commutator(top_word(nl_ + v), top_word(u))));
  }

  const FreeProductContext &fp() const { return fp_; }

  /// H_0 = L x R.
  NilStage initial() const {
    std::vector<Exp> orders;
    for (auto d : fp_.left().factors())
      orders.push_back(d);
    for (auto d : fp_.right().factors())
      orders.push_back(d);
    NilStage h{PcPresentation(orders), nl_, nr_, 0, {}, {}, {}};
    h.weight.assign(orders.size(), 0);
    h.defs.assign(orders.size(), GenDef{});
    h.letters.assign(nx_, h.pc.identity());
    return h;
  }

  /// H_{k+1} from H_k.
  NilStage step(const NilStage &H, const RelatorFn &rel, const NqOptions &opt) const {
    const int k = H.cls;
    const std::size_t s = H.top(), m = H.pc.size(), mK = m - s;
    const PcPresentation &P = H.pc;
    auto local = [&](const PcWord &w) {
      PcWord out;
      for (const auto &l : w) {
        if (l.gen < static_cast<int>(s))
          throw AlgebraError("nq: K-part relation involves a top generator");
        out.push_back({l.gen - static_cast<int>(s), l.exp});
      }
      return out;
    };

    // Tails: non-defining relations first so that the pivots of the tail
    // lattice land there and the survivors tend to be defining.
    std::vector<bool> power_def(mK, false), letter_def(nx_, false);
    std::unordered_map<std::size_t, bool> conj_def;
    auto key = [&](std::size_t j, std::size_t i) { return j * mK + i; };
    for (std::size_t g = s; g < m; ++g) {
      const auto &d = H.defs[g];
      if (d.kind == GenDef::Kind::Power)
        power_def[d.i - s] = true;
      else if (d.kind == GenDef::Kind::Conj)
        conj_def[key(d.j - s, d.i - s)] = true;
      else if (d.kind == GenDef::Kind::Letter || d.kind == GenDef::Kind::Epi)
        letter_def[d.i] = true;
    }
    std::vector<GenDef> tails, defining;
    std::vector<int> power_tail(mK, -1), letter_tail(nx_, -1);
    std::unordered_map<std::size_t, std::size_t> conj_tail;
    if (k == 0) {
      for (std::size_t x = 0; x < nx_; ++x)
        tails.push_back({GenDef::Kind::Letter, x, 0, {}});
    } else {
      for (std::size_t a = 0; a < mK; ++a)
        if (!P.is_infinite(s + a) && !power_def[a])
          tails.push_back({GenDef::Kind::Power, s + a, 0, P.power(s + a)});
      for (std::size_t a = 0; a < mK; ++a)
        for (std::size_t b = a + 1; b < mK; ++b) {
          const int wa = H.weight[s + a], wb = H.weight[s + b];
          if (wa + wb > k + 1 || conj_def.count(key(b, a)))
            continue;
          GenDef d{GenDef::Kind::Conj, s + a, s + b, P.conj(s + b, s + a)};
          (wa == 1 && wb == k ? defining : tails).push_back(std::move(d));
        }
      for (std::size_t x = 0; x < nx_; ++x)
        if (!letter_def[x])
          tails.push_back({GenDef::Kind::Epi, x, 0, to_word(H.letters[x])});
      tails.insert(tails.end(), defining.begin(), defining.end());
    }
    const std::size_t nt = tails.size();
    for (std::size_t c = 0; c < nt; ++c) {
      const auto &d = tails[c];
      if (d.kind == GenDef::Kind::Power)
        power_tail[d.i - s] = static_cast<int>(c);
      else if (d.kind == GenDef::Kind::Conj)
        conj_tail[key(d.j - s, d.i - s)] = c;
      else
        letter_tail[d.i] = static_cast<int>(c);
    }
    if (opt.max_gens && m + nt > opt.max_gens)
      throw ResourceLimitError("nq: " + std::to_string(m + nt) +
                                   " generators needed for class " + std::to_string(k + 1),
                               k, P.hirsch_length());
    log().debug("nq class {}: {} K-part generators, {} tails", k + 1, mK, nt);

    // Relations of the K-part with the tails appended; a tail column is
    // the generator mK + c.
    auto with_tail = [&](PcWord w, int c) {
      if (c >= 0)
        w.push_back({static_cast<int>(mK) + c, 1});
      return w;
    };
    auto conj_tail_of = [&](std::size_t b, std::size_t a) {
      auto it = conj_tail.find(key(b, a));
      return it == conj_tail.end() ? -1 : static_cast<int>(it->second);
    };

    SparseEchelon lattice(nt);
    if (k > 0) {
      std::vector<Exp> orders;
      for (std::size_t a = 0; a < mK; ++a)
        orders.push_back(P.relative_order(s + a));
      orders.resize(mK + nt, 0);
      PcPresentation ext(orders);
      for (std::size_t a = 0; a < mK; ++a) {
        if (!P.is_infinite(s + a))
          ext.set_power(a, with_tail(local(P.power(s + a)), power_tail[a]));
        for (std::size_t b = a + 1; b < mK; ++b) {
          const int c = conj_tail_of(b, a);
          if (c >= 0)
            ext.set_conj(b, a, with_tail(local(P.conj(s + b, s + a)), c));
          else if (!P.conj_raw(s + b, s + a).empty())
            ext.set_conj(b, a, local(P.conj_raw(s + b, s + a)));
        }
      }
      ext.complete_conj_inv();

      std::vector<int> w(mK + nt, k + 1);
      for (std::size_t a = 0; a < mK; ++a)
        w[a] = H.weight[s + a];
      ConsistencyOptions copt;
      copt.end = mK;
      if (opt.filtered) {
        copt.weights = &w;
        copt.max_weight = k + 1;
      }
      std::size_t seen = 0;
      for_each_overlap(
          ext,
          [&](Overlap &o) {
            if ((++seen & 255) == 0)
              Budget::check("nq consistency");
            if (!std::equal(o.lhs.begin(), o.lhs.begin() + static_cast<long>(mK),
                            o.rhs.begin()))
              throw AlgebraError("nq: stage " + std::to_string(k) +
                                 " is inconsistent at " + o.describe());
            SparseEchelon::Row row;
            for (std::size_t c = 0; c < nt; ++c)
              if (o.lhs[mK + c] != o.rhs[mK + c])
                row.emplace_back(c, Integer(o.lhs[mK + c] - o.rhs[mK + c]));
            if (!row.empty())
              lattice.add(std::move(row));
            return true;
          },
          copt);
    }

    // Surviving tails become the new layer.
    std::vector<int> survivor(nt, -1);
    std::vector<Exp> layer_orders;
    std::vector<std::size_t> survivors;
    for (std::size_t c = 0; c < nt; ++c) {
      if (lattice.has_pivot(c) && lattice.pivot(c) == 1)
        continue;
      survivor[c] = static_cast<int>(survivors.size());
      survivors.push_back(c);
      layer_orders.push_back(lattice.has_pivot(c) ? to_exp(lattice.pivot(c)) : 0);
    }
    const std::size_t u = survivors.size();
    auto layer_word = [&](std::vector<Integer> v) {
      v = lattice.reduce(std::move(v));
      PcWord w;
      for (std::size_t c = 0; c < nt; ++c)
        if (v[c] != 0) {
          if (survivor[c] < 0)
            throw AlgebraError("nq: tail reduction left an eliminated column");
          w.push_back({static_cast<int>(mK) + survivor[c], to_exp(v[c])});
        }
      return w;
    };
    auto tail_word = [&](int c) {
      if (c < 0)
        return PcWord{};
      std::vector<Integer> v(nt);
      v[static_cast<std::size_t>(c)] = 1;
      return layer_word(std::move(v));
    };
    auto concat = [](PcWord a, const PcWord &b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };

    // The K-part of E.
    const std::size_t mE = mK + u;
    std::vector<Exp> korders;
    for (std::size_t a = 0; a < mK; ++a)
      korders.push_back(P.relative_order(s + a));
    korders.insert(korders.end(), layer_orders.begin(), layer_orders.end());
    PcPresentation EK(korders);
    for (std::size_t a = 0; a < mK; ++a) {
      Budget::check("nq layer relations");
      if (!P.is_infinite(s + a))
        EK.set_power(a, concat(local(P.power(s + a)), tail_word(power_tail[a])));
      for (std::size_t b = a + 1; b < mK; ++b) {
        const int c = conj_tail_of(b, a);
        if (c >= 0)
          EK.set_conj(b, a, concat(local(P.conj(s + b, s + a)), tail_word(c)));
        else if (!P.conj_raw(s + b, s + a).empty())
          EK.set_conj(b, a, local(P.conj_raw(s + b, s + a)));
      }
    }
    for (std::size_t q = 0; q < u; ++q)
      if (layer_orders[q] != 0) {
        std::vector<Integer> v(nt);
        v[survivors[q]] = layer_orders[q];
        EK.set_power(mK + q, layer_word(std::move(v)));
      }
    EK.complete_conj_inv();

    auto k_vector = [&](const ExpVec &x) {
      for (std::size_t t = 0; t < s; ++t)
        if (x[t] != 0)
          throw AlgebraError("nq: letter image outside the K-part");
      return PcWord(local(to_word(x)));
    };
    std::vector<ExpVec> letterE(nx_);
    for (std::size_t x = 0; x < nx_; ++x)
      letterE[x] = EK.collect(concat(k_vector(H.letters[x]), tail_word(letter_tail[x])));
    auto eval_free = [&](const FreeWord &w) {
      ExpVec acc = EK.identity();
      for (const auto &l : w.letters())
        acc = EK.multiply(acc, EK.power(letterE[static_cast<std::size_t>(l.gen)], l.exp));
      return acc;
    };

    // Definitions of the K-part generators of E, in local indices.
    std::vector<GenDef> defsE;
    for (std::size_t a = 0; a < mK; ++a)
      defsE.push_back(H.defs[s + a]);
    for (std::size_t c : survivors)
      defsE.push_back(tails[c]);

    // Action of each top generator, generator by generator.
    std::vector<std::vector<ExpVec>> img(s, std::vector<ExpVec>(mE));
    for (std::size_t t = 0; t < s; ++t) {
      Budget::check("nq top action");
      for (std::size_t g = 0; g < mE; ++g) {
        const auto &d = defsE[g];
        ExpVec base = EK.identity();
        for (const auto &l : d.base)
          base = EK.multiply(base, EK.power(img[t][static_cast<std::size_t>(l.gen) - s], l.exp));
        ExpVec val;
        switch (d.kind) {
        case GenDef::Kind::Letter:
        case GenDef::Kind::Epi:
          val = eval_free(phi_[t][d.i]);
          break;
        case GenDef::Kind::Power:
          val = EK.power(img[t][d.i - s], P.relative_order(d.i));
          break;
        case GenDef::Kind::Conj:
          val = EK.conjugate(img[t][d.j - s], img[t][d.i - s]);
          break;
        case GenDef::Kind::Top:
          throw AlgebraError("nq: K-part generator without a definition");
        }
        img[t][g] = EK.multiply(EK.inverse(base), val);
      }
    }

    // Assemble E.
    std::vector<Exp> orders;
    for (std::size_t t = 0; t < s; ++t)
      orders.push_back(P.relative_order(t));
    orders.insert(orders.end(), korders.begin(), korders.end());
    NilStage E{PcPresentation(orders), nl_, nr_, k + 1, {}, {}, {}};
    auto shift = [&](const PcWord &w) {
      PcWord out;
      for (const auto &l : w)
        out.push_back({l.gen + static_cast<int>(s), l.exp});
      return out;
    };
    for (std::size_t v = 0; v < nr_; ++v)
      for (std::size_t a = 0; a < nl_; ++a)
        E.pc.set_conj(nl_ + v, a,
                      concat(PcWord{{static_cast<int>(nl_ + v), 1}},
                             shift(to_word(eval_free(vu_[v][a])))));
    for (std::size_t g = 0; g < mE; ++g) {
      Budget::check("nq assembly");
      for (std::size_t t = 0; t < s; ++t)
        E.pc.set_conj(s + g, t, shift(to_word(img[t][g])));
      if (!EK.is_infinite(g))
        E.pc.set_power(s + g, shift(EK.power(g)));
      for (std::size_t b = g + 1; b < mE; ++b) {
        if (!EK.conj_raw(b, g).empty())
          E.pc.set_conj(s + b, s + g, shift(EK.conj_raw(b, g)));
        if (EK.is_infinite(g) && !EK.conj_inv_raw(b, g).empty())
          E.pc.set_conj_inv(s + b, s + g, shift(EK.conj_inv_raw(b, g)));
      }
    }
    E.weight = H.weight;
    E.weight.resize(s + mE, k + 1);
    E.defs.assign(H.defs.begin(), H.defs.begin() + static_cast<long>(s));
    E.defs.insert(E.defs.end(), defsE.begin(), defsE.end());
    for (std::size_t x = 0; x < nx_; ++x)
      E.letters.push_back(E.pc.collect(shift(to_word(letterE[x]))));

    if (!rel)
      return check_limits(std::move(E), opt);

    const PcSubgroup N = rel(E);
    for (const auto &g : N.igs())
      if (depth(g) < s + mK)
        throw AlgebraError("nq: relator subgroup is not inside the new layer");
    const PcQuotient q = quotient(E.pc, N, false);
    NilStage out{q.pc, nl_, nr_, k + 1, {}, {}, {}};
    for (std::size_t a = 0; a < q.preimage.size(); ++a) {
      const std::size_t g = q.preimage[a];
      if (g < s + mK && g != a)
        throw AlgebraError("nq: quotient moved an old generator");
      out.weight.push_back(E.weight[g]);
      out.defs.push_back(E.defs[g]);
    }
    for (const auto &x : E.letters)
      out.letters.push_back(q.map(x));
    return check_limits(std::move(out), opt);
  }

  /// Stages 1, 2, ... up to class c - 1, i.e. T / (gamma_c(K) N). Stops
  /// early once a step adds nothing, since the quotients are then stable.
  NilStage run(int c, const RelatorFn &rel, const NqOptions &opt,
               const std::function<void(const NilStage &)> &on_stage = {}) const {
    NilStage h = initial();
    while (h.cls < c - 1) {
      const std::size_t before = h.pc.size();
      h = step(h, rel, opt);
      if (on_stage)
        on_stage(h);
      if (h.pc.size() == before) {
        h.cls = c - 1;
        break;
      }
    }
    return h;
  }

private:
  static Exp to_exp(const Integer &x) {
    if (x > std::numeric_limits<Exp>::max() || x < std::numeric_limits<Exp>::min())
      throw std::overflow_error("nq: tail coefficient does not fit in 64 bits");
    return static_cast<Exp>(x);
  }

  FreeProductWord top_word(std::size_t t) const {
    const Side side = t < nl_ ? Side::L : Side::R;
    const auto &f = fp_.factor(side);
    AbelianElement e(f.rank(), 0);
    e[t < nl_ ? t : t - nl_] = 1;
    return fp_.syllable(side, std::move(e));
  }

  NilStage check_limits(NilStage h, const NqOptions &opt) const {
    const std::size_t hl = h.pc.hirsch_length();
    if (opt.max_hirsch && hl > opt.max_hirsch)
      throw ResourceLimitError("nq: Hirsch length " + std::to_string(hl) + " at class " +
                                   std::to_string(h.cls) + " exceeds the limit " +
                                   std::to_string(opt.max_hirsch),
                               h.cls - 1, hl);
    log().debug("nq class {}: {} generators, Hirsch length {}", h.cls, h.pc.size(), hl);
    return h;
  }

  FreeProductContext fp_;
  std::size_t nl_ = 0, nr_ = 0, nx_ = 0;
  std::vector<std::vector<FreeWord>> phi_; // phi_[t][x]: x conjugated by top generator t
  std::vector<std::vector<FreeWord>> vu_;  // vu_[v][u] = [v, u] for v in R, u in L
};

/// T / gamma_c(K) for K = [T, T].
inline NilStage build_q(const FreeProductContext &fp, int c, const NqOptions &opt = {}) {
  if (c < 1)
    throw std::invalid_argument("build_q: class bound must be >= 1");
  return NqBuilder(fp).run(c, {}, opt);
}

} // namespace hcgt
