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

// J_n(A) = T_n / (gamma_c([T_n, T_n]) N) with c = 2^{n+1} and N the
// symmetric commutator of the normal closures of the R-families, and the
// center of J_n(A). Two constructions are provided: relators removed class
// by class (the default), or the full class c - 1 quotient first and N
// afterwards (only viable for small cases, used as a cross-check).

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hcgt/homotopy/class_builder.hpp"
#include "hcgt/homotopy/symmetric.hpp"
#include "hcgt/homotopy/tn_context.hpp"
#include "hcgt/pc/abelian_invariants.hpp"
#include "hcgt/pc/center.hpp"

namespace hcgt {

/// N is the symmetric commutator of the normal closures of the families,
/// times the normal closure of the extra bracket arrangements.
struct RelatorSpec {
  std::vector<std::vector<FreeProductWord>> families;
  std::vector<BracketTree> extra;
};

struct JnOptions {
  int class_bound = 0; // 0 means 2^{n+1}
  NqOptions nq;
  SymmetricOptions sym;
  std::size_t fat_brackets = 0; // random non-left-normed arrangements added to N
  std::uint64_t fat_seed = 1;
};

inline PcSubgroup relator_subgroup(const NilStage &E, const RelatorSpec &spec,
                                   SymmetricOptions sym = {}) {
  const PcPresentation &pc = E.pc;
  auto lift = [&](const FreeProductWord &w) { return E.lift(w); };
  sym.group_gens = E.generators();
  std::vector<PcSubgroup> closures;
  for (const auto &fam : spec.families) {
    std::vector<ExpVec> gens;
    for (const auto &w : fam)
      gens.push_back(lift(w));
    closures.push_back(normal_closure(pc, gens, sym.group_gens));
  }
  PcSubgroup N = symmetric_commutator(closures, sym);
  if (!spec.extra.empty()) {
    std::vector<ExpVec> xs;
    for (const auto &t : spec.extra)
      xs.push_back(t.evaluate([&](const FreeProductWord &w) { return lift(w); },
                              [&](const ExpVec &a, const ExpVec &b) { return pc.commutator(a, b); }));
    N = join(N, normal_closure(pc, xs, sym.group_gens));
  }
  return N;
}

/// T / (gamma_c(K) N), removing N after every class.
inline NilStage build_interleaved(const FreeProductContext &fp, int c, const RelatorSpec &spec,
                                  const NqOptions &nq = {}, const SymmetricOptions &sym = {},
                                  const std::function<void(const NilStage &)> &on_stage = {}) {
  RelatorFn rel = [&](const NilStage &E) { return relator_subgroup(E, spec, sym); };
  return NqBuilder(fp).run(c, rel, nq, on_stage);
}

/// Same group, built as T / gamma_c(K) first and divided by N at the end.
inline NilStage build_then_quotient(const FreeProductContext &fp, int c, const RelatorSpec &spec,
                                    const NqOptions &nq = {}, const SymmetricOptions &sym = {}) {
  NilStage Q = build_q(fp, c, nq);
  const PcSubgroup N = relator_subgroup(Q, spec, sym);
  for (const auto &g : N.igs())
    if (depth(g) < Q.top())
      throw AlgebraError("build_then_quotient: relators are not inside [T, T]");
  const PcQuotient q = quotient(Q.pc, N, false);
  NilStage out{q.pc, Q.left_gens, Q.right_gens, Q.cls, {}, {}, {}};
  for (std::size_t g : q.preimage) {
    out.weight.push_back(Q.weight[g]);
    out.defs.push_back(Q.defs[g]);
  }
  for (const auto &x : Q.letters)
    out.letters.push_back(q.map(x));
  return out;
}

inline int default_class_bound(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("class bound: n out of range");
  return 1 << (n + 1);
}

inline RelatorSpec jn_relators(const TnContext &ctx, const JnOptions &opt) {
  RelatorSpec spec{build_r_system(ctx).families, {}};
  if (opt.fat_brackets)
    spec.extra = random_fat_brackets(ctx.fp(), spec.families, opt.fat_brackets,
                                     static_cast<std::size_t>(ctx.n()) + 3, opt.fat_seed);
  return spec;
}

inline NilStage build_jn(const TnContext &ctx, const JnOptions &opt = {},
                         const std::function<void(const NilStage &)> &on_stage = {}) {
  const int c = opt.class_bound ? opt.class_bound : default_class_bound(ctx.n());
  return build_interleaved(ctx.fp(), c, jn_relators(ctx, opt), opt.nq, opt.sym, on_stage);
}

/// Invariants of gamma_i(K) / gamma_{i+1}(K) for the K-part (generators
/// from top on), i = 1, 2, ... until the series stops.
inline std::vector<AbelianInvariants> lower_central_sections(const PcPresentation &pc,
                                                             std::size_t top,
                                                             std::size_t bound = 64) {
  std::vector<ExpVec> gens;
  for (std::size_t g = top; g < pc.size(); ++g)
    gens.push_back(pc.generator(g));
  const auto lcs = lower_central_series(subgroup(pc, gens), bound, true);
  std::vector<AbelianInvariants> out;
  for (std::size_t i = 0; i + 1 < lcs.size(); ++i) {
    const PcQuotient q = quotient(pc, lcs[i + 1], false);
    std::vector<ExpVec> img;
    for (const auto &x : lcs[i].igs())
      img.push_back(q.map(x));
    out.push_back(abelian_invariants(subgroup(q.pc, img)));
  }
  return out;
}

inline AbelianInvariants center_invariants(const PcPresentation &pc) {
  return abelian_invariants(center(pc));
}

/// A (x) A for A = Z/d1 x ... x Z/dk: the sum of Z/gcd(di, dj).
inline AbelianInvariants tensor_oracle(const FiniteAbelianGroup &a) {
  const auto &d = a.factors();
  const std::size_t k = d.size();
  IntMatrix D(k * k, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      D(i * k + j, i * k + j) = std::gcd(d[i], d[j]);
  return cokernel_invariants(D);
}

struct HomotopyResult {
  std::vector<std::int64_t> a;
  int n = 0;
  int class_bound = 0;
  std::size_t hirsch_length = 0;
  AbelianInvariants center;
  std::optional<AbelianInvariants> oracle;
  bool outside_theorem_scope = false;
  NilStage jn;
  double seconds = 0;
};

/// The center of J_n(A) and, for n = 2, the tensor square oracle.
inline HomotopyResult homotopy_group(const FiniteAbelianGroup &a, int n, const JnOptions &opt = {},
                                     bool with_oracle = true) {
  const auto t0 = std::chrono::steady_clock::now();
  const TnContext ctx(a, n);
  HomotopyResult r;
  r.a = a.factors();
  r.n = n;
  r.class_bound = opt.class_bound ? opt.class_bound : default_class_bound(n);
  r.outside_theorem_scope = n < 2;
  r.jn = build_jn(ctx, opt);
  r.hirsch_length = r.jn.pc.hirsch_length();
  r.center = center_invariants(r.jn.pc);
  if (with_oracle && n == 2)
    r.oracle = tensor_oracle(a);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace hcgt
