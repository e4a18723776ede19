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

// Polycyclic presentations and collection from the left.
//
// Generators g_0 .. g_{m-1} (0-based here; the text format is 1-based).
// Relative order 0 means infinite. Relations:
//   g_i^{o_i}      = power(i)          for finite o_i
//   g_j^{g_i}      = conj(j, i)        for i < j
//   g_j^{g_i^-1}   = conj_inv(j, i)    for i < j with o_i infinite
// Every right-hand side is a normal word supported on generators > i.
// An unset conjugate means g_i and g_j commute.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcgt/budget.hpp"
#include "hcgt/errors.hpp"
#include "hcgt/free_word.hpp"

namespace hcgt {

using Exp = std::int64_t;
using ExpVec = std::vector<Exp>;
using PcWord = std::vector<Letter>;

namespace detail {
inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("pc collection: exponent overflow");
  return r;
}
inline Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("pc collection: exponent overflow");
  return r;
}
inline Exp floor_div(Exp a, Exp b) {
  Exp q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}
} // namespace detail

/// Normal word of an exponent vector.
inline PcWord to_word(const ExpVec &e) {
  PcWord w;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      w.push_back({static_cast<int>(i), e[i]});
  return w;
}

inline std::string word_to_string(const PcWord &w) {
  if (w.empty())
    return "id";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      s += '*';
    s += 'g' + std::to_string(w[k].gen + 1);
    if (w[k].exp != 1)
      s += '^' + std::to_string(w[k].exp);
  }
  return s;
}

class PcPresentation {
public:
  PcPresentation() = default;
  explicit PcPresentation(std::vector<Exp> relative_orders)
      : orders_(std::move(relative_orders)) {
    const std::size_t m = orders_.size();
    for (auto o : orders_)
      if (o < 0 || o == 1)
        throw std::invalid_argument("PcPresentation: relative orders must be 0 (infinite) or >= 2");
    power_.assign(m, {});
    conj_.assign(m, {});
    conj_inv_.assign(m, {});
    for (std::size_t j = 0; j < m; ++j) {
      conj_[j].assign(j, {});
      conj_inv_[j].assign(j, {});
    }
    commute_from_.assign(m, 0);
    refresh();
  }

  std::size_t size() const { return orders_.size(); }
  Exp relative_order(std::size_t i) const { return orders_[i]; }
  const std::vector<Exp> &relative_orders() const { return orders_; }
  bool is_infinite(std::size_t i) const { return orders_[i] == 0; }

  std::size_t hirsch_length() const {
    return static_cast<std::size_t>(std::count(orders_.begin(), orders_.end(), 0));
  }

  void set_power(std::size_t i, PcWord w) {
    if (is_infinite(i))
      throw std::invalid_argument("set_power: generator has infinite relative order");
    check_support(w, i);
    power_[i] = std::move(w);
  }

  /// g_j^{g_i} = w. Passing the word g_j clears the entry (commuting pair).
  void set_conj(std::size_t j, std::size_t i, PcWord w) {
    if (!(i < j))
      throw std::invalid_argument("set_conj: need i < j");
    check_support(w, i);
    if (w.size() == 1 && w[0].gen == static_cast<int>(j) && w[0].exp == 1)
      w.clear();
    conj_[j][i] = std::move(w);
    update_commute(j, i);
  }

  void set_conj_inv(std::size_t j, std::size_t i, PcWord w) {
    if (!(i < j))
      throw std::invalid_argument("set_conj_inv: need i < j");
    if (!is_infinite(i))
      throw std::invalid_argument("set_conj_inv: g_i has finite relative order");
    check_support(w, i);
    if (w.size() == 1 && w[0].gen == static_cast<int>(j) && w[0].exp == 1)
      w.clear();
    conj_inv_[j][i] = std::move(w);
    update_commute(j, i);
  }

  const PcWord &power(std::size_t i) const { return power_[i]; }

  bool commutes(std::size_t j, std::size_t i) const {
    return conj_[j][i].empty() && (!is_infinite(i) || conj_inv_[j][i].empty());
  }

  PcWord conj(std::size_t j, std::size_t i) const {
    return conj_[j][i].empty() ? PcWord{{static_cast<int>(j), 1}} : conj_[j][i];
  }
  PcWord conj_inv(std::size_t j, std::size_t i) const {
    return conj_inv_[j][i].empty() ? PcWord{{static_cast<int>(j), 1}} : conj_inv_[j][i];
  }
  // Raw entries: empty means g_j itself.
  const PcWord &conj_raw(std::size_t j, std::size_t i) const { return conj_[j][i]; }
  const PcWord &conj_inv_raw(std::size_t j, std::size_t i) const {
    return conj_inv_[j][i];
  }

  ExpVec identity() const { return ExpVec(size(), 0); }

  ExpVec generator(std::size_t i, Exp e = 1) const {
    ExpVec v = identity();
    return collect(v, PcWord{{static_cast<int>(i), e}});
  }

  /// Normal form of an arbitrary word (any order, any exponents).
  ExpVec collect(const PcWord &w) const { return collect(identity(), w); }

  /// Normal form of e * w where e is already collected.
  ExpVec collect(ExpVec e, const PcWord &w) const {
    Collector c(*this, e);
    c.run_word(w.data(), w.size(), false, 1);
    return e;
  }

  ExpVec multiply(const ExpVec &a, const ExpVec &b) const {
    return collect(a, to_word(b));
  }

  ExpVec inverse(const ExpVec &a) const {
    // a = g_1^{e_1} ... g_m^{e_m}; inverse word is the reversed, negated one.
    PcWord w;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != 0)
        w.push_back({static_cast<int>(i), -a[i]});
    return collect(w);
  }

  ExpVec power(const ExpVec &a, Exp k) const {
    ExpVec base = k < 0 ? inverse(a) : a;
    ExpVec out = identity();
    Exp n = k < 0 ? -k : k;
    while (n > 0) {
      if (n & 1)
        out = multiply(out, base);
      n >>= 1;
      if (n)
        base = multiply(base, base);
    }
    return out;
  }

  ExpVec conjugate(const ExpVec &a, const ExpVec &by) const {
    return multiply(multiply(inverse(by), a), by);
  }

  /// [a, b] = a^-1 b^-1 a b
  ExpVec commutator(const ExpVec &a, const ExpVec &b) const {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
  }

  bool is_identity(const ExpVec &a) const {
    return std::all_of(a.begin(), a.end(), [](Exp x) { return x == 0; });
  }

  /// Recomputes every g_j^{g_i^-1} for infinite g_i by inverting the
  /// conjugation automorphism. Requires g_j^{g_i} to lead with g_j. Must be
  /// called after the conjugates are set unless the inverse ones were given.
  void complete_conj_inv() {
    const std::size_t m = size();
    // descending, so that collection inside <g_{i+1}, ...> is complete
    for (std::size_t i = m; i-- > 0;) {
      if (!is_infinite(i))
        continue;
      Budget::check("conjugation by inverses");
      // phi(x) = x^{g_i} on <g_{i+1}, ...>; build phi^-1(g_j) bottom-up.
      // pre[j] stays empty when g_j commutes with g_i
      std::vector<ExpVec> pre(m);
      std::vector<bool> known(m, false);
      for (std::size_t j = m; j-- > i + 1;) {
        if (conj_[j][i].empty()) {
          conj_inv_[j][i].clear();
          known[j] = true;
          continue;
        }
        const PcWord &w = conj_[j][i];
        if (w.front().gen != static_cast<int>(j))
          throw AlgebraError("complete_conj_inv: conjugate of g" + std::to_string(j + 1) +
                             " by g" + std::to_string(i + 1) +
                             " does not lead with g" + std::to_string(j + 1));
        Exp lead = w.front().exp;
        Exp inv_lead;
        if (is_infinite(j)) {
          if (lead != 1 && lead != -1)
            throw AlgebraError("complete_conj_inv: conjugation is not an automorphism");
          inv_lead = lead;
        } else {
          inv_lead = 0;
          for (Exp t = 1; t < orders_[j]; ++t)
            if ((t * lead) % orders_[j] == 1) {
              inv_lead = t;
              break;
            }
          if (inv_lead == 0)
            throw AlgebraError("complete_conj_inv: leading exponent is not a unit");
        }
        // phi(g_j^inv_lead) = g_j * z with z supported above j.
        ExpVec img = power(collect(w), inv_lead);
        if (img[j] != 1)
          throw AlgebraError("complete_conj_inv: unexpected leading exponent");
        ExpVec z = img;
        z[j] = 0;
        ExpVec zinv = inverse(z);
        // phi^-1(z^-1), evaluated letter by letter
        ExpVec y = identity();
        for (std::size_t k = 0; k < m; ++k) {
          if (zinv[k] == 0)
            continue;
          if (!known[k])
            throw AlgebraError("complete_conj_inv: dependency out of order");
          if (pre[k].empty())
            y = collect(y, PcWord{{static_cast<int>(k), zinv[k]}});
          else
            y = multiply(y, power(pre[k], zinv[k]));
        }
        ExpVec x = multiply(generator(j, inv_lead), y);
        pre[j] = x;
        known[j] = true;
        set_conj_inv(j, i, to_word(x));
      }
    }
  }

private:
  void check_support(const PcWord &w, std::size_t i) const {
    int last = static_cast<int>(i);
    for (const auto &l : w) {
      if (l.gen <= last || l.gen >= static_cast<int>(size()))
        throw std::invalid_argument("pc relation word must be a normal word on generators above " +
                                    std::to_string(i + 1));
      if (!is_infinite(static_cast<std::size_t>(l.gen)) &&
          (l.exp <= 0 || l.exp >= orders_[static_cast<std::size_t>(l.gen)]))
        throw std::invalid_argument("pc relation word exponent out of range");
      last = l.gen;
    }
  }

  void refresh() {
    for (std::size_t i = 0; i < size(); ++i)
      refresh_commute(i);
  }

  // commute_from_[i]: smallest c > i such that g_i commutes with every g_j,
  // j >= c.
  void refresh_commute(std::size_t i) {
    std::size_t c = size();
    while (c > i + 1 && commutes(c - 1, i))
      --c;
    commute_from_[i] = std::max(c, i + 1);
  }

  // O(1) unless the changed pair sat at the boundary.
  void update_commute(std::size_t j, std::size_t i) {
    if (!commutes(j, i))
      commute_from_[i] = std::max(commute_from_[i], j + 1);
    else if (commute_from_[i] == j + 1)
      refresh_commute(i);
  }

  // Collection from the left with an explicit stack.
  class Collector {
  public:
    Collector(const PcPresentation &p, ExpVec &e) : p_(p), e_(e) {}

    void run_word(const Letter *data, std::size_t len, bool inverse, Exp reps) {
      push_word(data, len, inverse, reps);
      drain();
    }

  private:
    struct Item {
      const Letter *data; // null for a single letter
      std::size_t len;
      bool inverse;
      Exp reps; // remaining repetitions of the word (>0)
      std::size_t pos;
      int gen;  // single letter
      Exp exp;
    };

    void push_word(const Letter *data, std::size_t len, bool inverse, Exp reps) {
      if (len == 0 || reps == 0)
        return;
      if (reps < 0) {
        inverse = !inverse;
        reps = -reps;
      }
      if (len == 1) {
        Exp x = detail::checked_mul(data[0].exp, inverse ? -reps : reps);
        push_letter(data[0].gen, x);
        return;
      }
      stack_.push_back({data, len, inverse, reps, 0, 0, 0});
    }

    void push_letter(int gen, Exp exp) {
      if (exp != 0)
        stack_.push_back({nullptr, 0, false, 0, 0, gen, exp});
    }

    void drain() {
      std::uint32_t ticks = 0;
      while (!stack_.empty()) {
        // large exponents are moved across a letter at a time
        if ((++ticks & 0xfffff) == 0)
          Budget::check("collection");
        Item &it = stack_.back();
        if (it.data == nullptr) {
          int g = it.gen;
          Exp x = it.exp;
          stack_.pop_back();
          apply(static_cast<std::size_t>(g), x);
          continue;
        }
        const Letter &l = it.inverse ? it.data[it.len - 1 - it.pos] : it.data[it.pos];
        const int g = l.gen;
        const Exp x = it.inverse ? -l.exp : l.exp;
        if (++it.pos == it.len) {
          it.pos = 0;
          if (--it.reps == 0)
            stack_.pop_back();
        }
        apply(static_cast<std::size_t>(g), x);
      }
    }

    // e <- e * g_k^x
    void apply(std::size_t k, Exp x) {
      const std::size_t m = e_.size();
      const Exp o = p_.orders_[k];
      std::size_t top = m;
      while (top > k + 1 && e_[top - 1] == 0)
        --top;
      std::size_t low = k + 1;
      while (low < top && e_[low] == 0)
        ++low;
      if (low >= p_.commute_from_[k]) {
        // g_k commutes with every letter to its right
        add_exponent(k, x);
        return;
      }
      if (x > 0) {
        // move one g_k across the tail, leave the rest for later
        push_letter(static_cast<int>(k), x - 1);
        step(k, false, top);
        return;
      }
      if (o == 0) {
        push_letter(static_cast<int>(k), x + 1);
        step(k, true, top);
        return;
      }
      // finite order: g_k^-1 = g_k^{o-1} * power(k)^-1
      const PcWord &w = p_.power_[k];
      push_letter(static_cast<int>(k), x + 1);
      push_word(w.data(), w.size(), true, 1);
      push_letter(static_cast<int>(k), o - 1);
    }

    // e <- e * g_k^{+-1} where the tail beyond k is nonzero up to `top`.
    void step(std::size_t k, bool inverse, std::size_t top) {
      // tail^{g_k} pushed in reverse so the lowest index is processed first
      for (std::size_t j = top; j-- > k + 1;) {
        const Exp ej = e_[j];
        if (ej == 0)
          continue;
        e_[j] = 0;
        const PcWord &w = inverse ? p_.conj_inv_[j][k] : p_.conj_[j][k];
        if (w.empty())
          push_letter(static_cast<int>(j), ej);
        else
          push_word(w.data(), w.size(), false, ej);
      }
      add_exponent(k, inverse ? -1 : 1);
    }

    void add_exponent(std::size_t k, Exp x) {
      const Exp o = p_.orders_[k];
      Exp v = detail::checked_add(e_[k], x);
      if (o == 0) {
        e_[k] = v;
        return;
      }
      Exp q = detail::floor_div(v, o);
      e_[k] = v - q * o;
      if (q != 0) {
        const PcWord &w = p_.power_[k];
        push_word(w.data(), w.size(), false, q);
      }
    }

    const PcPresentation &p_;
    ExpVec &e_;
    std::vector<Item> stack_;
  };

  std::vector<Exp> orders_;
  std::vector<PcWord> power_;
  std::vector<std::vector<PcWord>> conj_;
  std::vector<std::vector<PcWord>> conj_inv_;
  std::vector<std::size_t> commute_from_;
};

/// Element of a pc group: presentation reference plus collected exponents.
struct PcElement {
  const PcPresentation *pc = nullptr;
  ExpVec exps;

  PcElement() = default;
  PcElement(const PcPresentation &p, ExpVec e) : pc(&p), exps(std::move(e)) {}

  static PcElement from_word(const PcPresentation &p, const PcWord &w) {
    return {p, p.collect(w)};
  }

  bool is_identity() const { return pc->is_identity(exps); }
  PcElement inverse() const { return {*pc, pc->inverse(exps)}; }
  PcElement pow(Exp k) const { return {*pc, pc->power(exps, k)}; }

  friend PcElement operator*(const PcElement &a, const PcElement &b) {
    return {*a.pc, a.pc->multiply(a.exps, b.exps)};
  }
  friend bool operator==(const PcElement &a, const PcElement &b) {
    return a.exps == b.exps;
  }
  friend std::ostream &operator<<(std::ostream &os, const PcElement &a) {
    return os << word_to_string(to_word(a.exps));
  }
};

inline PcElement commutator(const PcElement &a, const PcElement &b) {
  return {*a.pc, a.pc->commutator(a.exps, b.exps)};
}

inline PcElement collect(const PcPresentation &p, const PcWord &w) {
  return PcElement::from_word(p, w);
}

} // namespace hcgt
