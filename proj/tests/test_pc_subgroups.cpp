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

#include <catch_amalgamated.hpp>

#include <random>

#include "groups.hpp"
#include "hcgt/pc/consistency.hpp"
#include "hcgt/pc/quotient.hpp"
#include "hcgt/pc/subgroup.hpp"

using namespace hcgt;

TEST_CASE("subgroups of D_inf") {
  auto p = groups::dinf();
  auto b2 = subgroup(p, {p.generator(1, 2)});
  CHECK(b2.igs_size() == 1);
  CHECK(b2.contains(p.generator(1, -6)));
  CHECK(!b2.contains(p.generator(1, 3)));
  CHECK(b2.is_normal());
  CHECK(b2.hirsch_length() == 1);

  // <a b> has order 2 and is not normal
  auto ab = subgroup(p, {ExpVec{1, 1}});
  CHECK(ab.order() == 2);
  CHECK(!ab.is_normal());
  auto nc = normal_closure(p, {ExpVec{1, 1}});
  CHECK(nc.contains(p.generator(1, 2)));
  CHECK(!nc.contains(p.generator(1)));
  CHECK(nc.is_normal());

  // <b^4, b^6> = <b^2>
  CHECK(subgroup(p, {p.generator(1, 4), p.generator(1, 6)}) == b2);
  CHECK(whole_group(p).contains(ExpVec{1, -7}));
}

TEST_CASE("lower central series of D_inf") {
  auto p = groups::dinf();
  auto g = whole_group(p);
  auto lcs = lower_central_series(g, 4, true);
  REQUIRE(lcs.size() >= 3);
  CHECK(lcs[1] == subgroup(p, {p.generator(1, 2)}));
  CHECK(lcs[2] == subgroup(p, {p.generator(1, 4)}));
  // without the normality shortcut the answer is the same
  auto lcs2 = lower_central_series(g, 4, false);
  for (std::size_t k = 0; k < std::min(lcs.size(), lcs2.size()); ++k)
    CHECK(lcs[k] == lcs2[k]);
}

TEST_CASE("lower central series of the Heisenberg group") {
  auto p = groups::heisenberg();
  auto lcs = lower_central_series(whole_group(p), 5, true);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[1] == subgroup(p, {p.generator(2)}));
  CHECK(lcs[2].is_trivial());
  // [<x^2>, <y^3>] = <z^6>
  auto c = commutator_subgroup(subgroup(p, {p.generator(0, 2)}),
                               subgroup(p, {p.generator(1, 3)}));
  CHECK(c == subgroup(p, {p.generator(2, 6)}));
}

TEST_CASE("subgroups of Z/2 x Z/4") {
  auto p = groups::z2xz4();
  auto g = whole_group(p);
  CHECK(g.order() == 8);
  auto lcs = lower_central_series(g, 3, true);
  CHECK(lcs.back().is_trivial());
  auto h = subgroup(p, {ExpVec{1, 1, 0}});
  CHECK(h.order() == 4);
  CHECK(h.contains(ExpVec{0, 0, 1}));
  CHECK(subgroup(p, {ExpVec{1, 0, 1}}).order() == 2);
}

TEST_CASE("quotients") {
  SECTION("D_inf by <b^2> is Z/2 x Z/2") {
    auto p = groups::dinf();
    auto q = quotient(p, subgroup(p, {p.generator(1, 2)}));
    CHECK(q.pc.relative_orders() == std::vector<Exp>{2, 2});
    CHECK(is_consistent(q.pc));
    CHECK(q.pc.is_identity(q.pc.commutator(q.pc.generator(0), q.pc.generator(1))));
  }
  SECTION("Heisenberg by <z> is Z^2") {
    auto p = groups::heisenberg();
    auto q = quotient(p, subgroup(p, {p.generator(2)}));
    CHECK(q.pc.relative_orders() == std::vector<Exp>{0, 0});
    CHECK(q.pc.hirsch_length() == 2);
  }
  SECTION("Heisenberg by <z^3> keeps a Z/3 layer") {
    auto p = groups::heisenberg();
    auto q = quotient(p, subgroup(p, {p.generator(2, 3)}));
    CHECK(q.pc.relative_orders() == std::vector<Exp>{0, 0, 3});
    CHECK(is_consistent(q.pc));
  }
  SECTION("non-normal subgroup is rejected") {
    auto p = groups::dinf();
    CHECK_THROWS_AS(quotient(p, subgroup(p, {p.generator(0)})), AlgebraError);
  }
}

TEST_CASE("quotient map is a homomorphism") {
  std::mt19937 rng(41);
  auto h = groups::heisenberg();
  auto d = groups::dinf();
  auto z = groups::z2xz4();
  struct Case {
    const PcPresentation *p;
    PcSubgroup n;
  };
  std::vector<Case> cases{{&h, subgroup(h, {h.generator(2, 3)})},
                          {&h, normal_closure(h, {h.generator(1, 2)})},
                          {&d, subgroup(d, {d.generator(1, 4)})},
                          {&z, subgroup(z, {ExpVec{1, 0, 1}})}};
  for (const auto &c : cases) {
    const auto &p = *c.p;
    auto q = quotient(p, c.n);
    REQUIRE(is_consistent(q.pc));
    for (int trial = 0; trial < 200; ++trial) {
      auto x = groups::random_element(p, rng), y = groups::random_element(p, rng);
      REQUIRE(q.map(p.multiply(x, y)) == q.pc.multiply(q.map(x), q.map(y)));
      REQUIRE(q.map(q.section(q.map(x))) == q.map(x));
      // x and its reduction differ by a kernel element
      REQUIRE(c.n.contains(p.multiply(p.inverse(q.reduce(x)), x)));
    }
  }
}

TEST_CASE("canonical igs") {
  auto p = groups::heisenberg();
  std::mt19937_64 rng(3);
  const ExpVec x2 = p.generator(0, 2), y = p.generator(1), z3 = p.generator(2, 3);
  const PcSubgroup h = subgroup(p, {x2, y, z3});
  for (int trial = 0; trial < 50; ++trial) {
    // random products of the generators, shuffled, generate the same group
    std::vector<ExpVec> gens{x2, y, z3};
    for (int k = 0; k < 3; ++k) {
      auto &g = gens[rng() % 3];
      g = p.multiply(g, gens[rng() % 3 == 0 ? 2 : rng() % 2]);
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    const PcSubgroup k = subgroup(p, gens);
    if (!(k == h))
      continue;
    CHECK(k.canonical_igs() == h.canonical_igs());
  }
  CHECK(subgroup(p, {p.generator(0, -2)}).canonical_igs() ==
        subgroup(p, {p.generator(0, 2)}).canonical_igs());
}
