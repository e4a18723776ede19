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

// Center of a pc group G whose finest normal pc series has abelian factors
// V_0, V_1, ... and on which G acts through a finite group.
//
// Let C be the kernel of the action of G on all V_s; the center lies in C.
// Starting from Z = C, for each layer s >= 1 the map
//     z -> ([z, h] mod G_{s+1})_h        (h over a generating set of G)
// is a homomorphism Z -> V_s^k, and Z is replaced by its kernel. Kernels
// come from solve_congruence on the layer coordinates together with [Z, Z].

#include <map>
#include <optional>
#include <vector>

#include "hcgt/errors.hpp"
#include "hcgt/intlinalg.hpp"
#include "hcgt/log.hpp"
#include "hcgt/pc/presentation.hpp"
#include "hcgt/pc/subgroup.hpp"

namespace hcgt {

/// Positions b such that <g_b, ..., g_m> is normal, including 0 and m.
inline std::vector<std::size_t> normal_boundaries(const PcPresentation &p) {
  const std::size_t m = p.size();
  // lowest[a][...]: smallest generator in any conjugate of some g_j (j >= b)
  // by g_a must be >= b.
  std::vector<std::size_t> out{0};
  for (std::size_t b = 1; b < m; ++b) {
    bool ok = true;
    for (std::size_t a = 0; a < b && ok; ++a)
      for (std::size_t j = b; j < m && ok; ++j) {
        const PcWord &w = p.conj_raw(j, a);
        if (!w.empty() && static_cast<std::size_t>(w.front().gen) < b)
          ok = false;
        if (ok && p.is_infinite(a)) {
          const PcWord &v = p.conj_inv_raw(j, a);
          if (!v.empty() && static_cast<std::size_t>(v.front().gen) < b)
            ok = false;
        }
      }
    if (ok)
      out.push_back(b);
  }
  out.push_back(m);
  return out;
}

/// One abelian factor G_s / G_{s+1} = Z^d / Lambda, with Smith coordinates.
struct Layer {
  std::size_t begin = 0, end = 0;
  IntMatrix V;                 // row vector x -> x V gives Smith coordinates
  IntMatrix Vinv;
  std::vector<std::size_t> kept; // Smith coordinates with modulus != 1
  std::vector<Integer> moduli;   // per kept coordinate, 0 = free

  std::size_t dim() const { return kept.size(); }

  std::vector<Integer> coords(const ExpVec &x) const {
    const std::size_t d = end - begin;
    std::vector<Integer> y(kept.size(), 0);
    for (std::size_t c = 0; c < kept.size(); ++c) {
      Integer v = 0;
      for (std::size_t r = 0; r < d; ++r)
        if (x[begin + r] != 0)
          v += Integer(x[begin + r]) * V(r, kept[c]);
      if (moduli[c] != 0) {
        v %= moduli[c];
        if (v < 0)
          v += moduli[c];
      }
      y[c] = v;
    }
    return y;
  }

  /// Element of G_s representing the c-th kept coordinate vector.
  ExpVec basis_element(const PcPresentation &p, std::size_t c) const {
    const std::size_t d = end - begin;
    PcWord w;
    for (std::size_t r = 0; r < d; ++r) {
      const Integer &v = Vinv(kept[c], r);
      if (v != 0)
        w.push_back({static_cast<int>(begin + r), static_cast<Exp>(v)});
    }
    return p.collect(w);
  }
};

inline std::vector<Layer> abelian_layers(const PcPresentation &p) {
  const auto bounds = normal_boundaries(p);
  std::vector<Layer> layers;
  for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
    Layer L;
    L.begin = bounds[s];
    L.end = bounds[s + 1];
    const std::size_t d = L.end - L.begin;
    auto restricted_is_unit = [&](const PcWord &w, std::size_t j) {
      if (w.empty())
        return true;
      for (const auto &l : w) {
        const auto g = static_cast<std::size_t>(l.gen);
        if (g >= L.end)
          break;
        if (g != j || l.exp != 1)
          return false;
      }
      return std::any_of(w.begin(), w.end(), [&](const Letter &l) {
        return static_cast<std::size_t>(l.gen) == j;
      });
    };
    for (std::size_t i = L.begin; i < L.end; ++i)
      for (std::size_t j = i + 1; j < L.end; ++j) {
        if (!restricted_is_unit(p.conj_raw(j, i), j) ||
            (p.is_infinite(i) && !restricted_is_unit(p.conj_inv_raw(j, i), j)))
          throw AlgebraError("center: pc series has a nonabelian factor at g" +
                             std::to_string(L.begin + 1) + "..g" + std::to_string(L.end));
      }
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = L.begin; i < L.end; ++i) {
      if (p.is_infinite(i))
        continue;
      std::vector<Integer> row(d, 0);
      row[i - L.begin] = p.relative_order(i);
      for (const auto &l : p.power(i))
        if (static_cast<std::size_t>(l.gen) < L.end)
          row[static_cast<std::size_t>(l.gen) - L.begin] -= l.exp;
      rows.push_back(std::move(row));
    }
    IntMatrix Lam = rows.empty() ? IntMatrix(0, d) : IntMatrix::from_rows(rows, d);
    if (rows.empty()) {
      L.V = IntMatrix::identity(d);
      L.Vinv = IntMatrix::identity(d);
      for (std::size_t c = 0; c < d; ++c) {
        L.kept.push_back(c);
        L.moduli.push_back(0);
      }
    } else {
      SmithDecomposition sd = snf(Lam);
      L.V = sd.V;
      L.Vinv = hnf(sd.V).U; // U V = I for unimodular V
      for (std::size_t c = 0; c < d; ++c) {
        Integer mod = c < sd.rank ? sd.S(c, c) : Integer(0);
        if (mod == 1)
          continue;
        L.kept.push_back(c);
        L.moduli.push_back(mod);
      }
    }
    layers.push_back(std::move(L));
  }
  return layers;
}

struct CenterOptions {
  // Generating set of G used for the commutator tests; empty = all pc
  // generators.
  std::vector<ExpVec> generators;
  // Abort if the image of G acting on the layers exceeds this many elements.
  std::size_t max_action_image = 200000;
};

namespace detail {

// Kernel of the action of G on all layers, by orbit-stabilizer over the pc
// sequence (bottom-up) in the regular action of the finite image.
inline PcSubgroup action_kernel(const PcPresentation &p, const std::vector<Layer> &layers,
                                std::size_t max_image) {
  const std::size_t m = p.size();
  using Point = std::vector<Integer>; // concatenated layer matrices
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto &L : layers) {
    offset.push_back(total);
    total += L.dim() * L.dim();
  }
  std::vector<ExpVec> basis_elems;
  std::vector<std::vector<ExpVec>> layer_basis(layers.size());
  for (std::size_t s = 0; s < layers.size(); ++s)
    for (std::size_t c = 0; c < layers[s].dim(); ++c)
      layer_basis[s].push_back(layers[s].basis_element(p, c));

  auto matrix_of = [&](const ExpVec &g) {
    Point pt(total, 0);
    for (std::size_t s = 0; s < layers.size(); ++s) {
      const auto &L = layers[s];
      for (std::size_t r = 0; r < L.dim(); ++r) {
        auto y = L.coords(p.conjugate(layer_basis[s][r], g));
        for (std::size_t c = 0; c < L.dim(); ++c)
          pt[offset[s] + r * L.dim() + c] = y[c];
      }
    }
    return pt;
  };
  auto mult = [&](const Point &a, const Point &b) {
    Point out(total, 0);
    for (std::size_t s = 0; s < layers.size(); ++s) {
      const auto &L = layers[s];
      const std::size_t d = L.dim();
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
          const Integer &x = a[offset[s] + r * d + k];
          if (x == 0)
            continue;
          for (std::size_t c = 0; c < d; ++c)
            out[offset[s] + r * d + c] += x * b[offset[s] + k * d + c];
        }
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (L.moduli[c] != 0) {
            Integer &v = out[offset[s] + r * d + c];
            v %= L.moduli[c];
            if (v < 0)
              v += L.moduli[c];
          }
    }
    return out;
  };
  Point one(total, 0);
  for (std::size_t s = 0; s < layers.size(); ++s)
    for (std::size_t r = 0; r < layers[s].dim(); ++r)
      one[offset[s] + r * layers[s].dim() + r] = 1;

  std::map<Point, ExpVec> orbit{{one, p.identity()}};
  std::vector<ExpVec> stab;
  for (std::size_t i = m; i-- > 0;) {
    const ExpVec g = p.generator(i);
    const Point Mg = matrix_of(g);
    if (Mg == one) {
      stab.push_back(g);
      continue;
    }
    // smallest l with one * Mg^l in the current orbit
    Point cur = Mg;
    std::size_t l = 1;
    while (!orbit.count(cur)) {
      cur = mult(cur, Mg);
      ++l;
      if (l * orbit.size() > max_image)
        throw AlgebraError("center: action on the pc layers has too large an image");
    }
    stab.push_back(p.multiply(p.generator(i, static_cast<Exp>(l)), p.inverse(orbit.at(cur))));
    if (l == 1)
      continue;
    std::map<Point, ExpVec> grown = orbit;
    Point step = one;
    ExpVec gj = p.identity();
    for (std::size_t j = 1; j < l; ++j) {
      step = mult(step, Mg);
      gj = p.multiply(gj, g);
      for (const auto &[pt, t] : orbit)
        grown.emplace(mult(pt, step), p.multiply(t, gj));
    }
    orbit = std::move(grown);
  }
  log().debug("center: action image of order {}", orbit.size());
  return subgroup(p, stab);
}

} // namespace detail

inline PcSubgroup center(const PcPresentation &p, const CenterOptions &opt = {}) {
  const std::size_t m = p.size();
  if (m == 0)
    return PcSubgroup(p);
  const auto layers = abelian_layers(p);
  std::vector<ExpVec> gens = opt.generators;
  if (gens.empty())
    for (std::size_t k = 0; k < m; ++k)
      gens.push_back(p.generator(k));

  PcSubgroup Z = detail::action_kernel(p, layers, opt.max_action_image);
  for (std::size_t s = 1; s < layers.size() && !Z.is_trivial(); ++s) {
    const Layer &L = layers[s];
    const auto zs = Z.igs();
    const std::size_t rows = gens.size() * L.dim();
    IntMatrix A(rows, zs.size());
    std::vector<Integer> moduli(rows);
    bool all_zero = true;
    for (std::size_t t = 0; t < zs.size(); ++t)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const ExpVec c = p.commutator(zs[t], gens[k]);
        for (std::size_t q = 0; q < L.begin; ++q)
          if (c[q] != 0)
            throw AlgebraError("center: commutator left the current layer");
        auto y = L.coords(c);
        for (std::size_t i = 0; i < L.dim(); ++i) {
          A(k * L.dim() + i, t) = y[i];
          moduli[k * L.dim() + i] = L.moduli[i];
          if (y[i] != 0)
            all_zero = false;
        }
      }
    if (all_zero)
      continue;
    auto lattice = solve_congruence(A, moduli);
    PcSubgroup next = commutator_subgroup(Z, Z);
    std::vector<ExpVec> elems;
    for (const auto &e : lattice) {
      ExpVec z = p.identity();
      for (std::size_t t = 0; t < zs.size(); ++t)
        if (e[t] != 0)
          z = p.multiply(z, p.power(zs[t], static_cast<Exp>(e[t])));
      elems.push_back(std::move(z));
    }
    next.extend(elems);
    Z = std::move(next);
  }
  for (const auto &z : Z.igs())
    for (std::size_t k = 0; k < m; ++k)
      if (!p.is_identity(p.commutator(z, p.generator(k))))
        throw AlgebraError("center: result does not commute with g" + std::to_string(k + 1));
  return Z;
}

} // namespace hcgt
