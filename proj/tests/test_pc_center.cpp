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

#include "groups.hpp"
#include "hcgt/pc/abelian_invariants.hpp"
#include "hcgt/pc/center.hpp"
#include "hcgt/pc/consistency.hpp"
#include "hcgt/pc/quotient.hpp"

using namespace hcgt;

namespace {

// Dihedral of order 8: a, r, r^2.
PcPresentation d8() {
  PcPresentation p({2, 2, 2});
  p.set_power(1, {{2, 1}});
  p.set_conj(1, 0, {{1, 1}, {2, 1}});
  return p;
}

PcPresentation q8() {
  PcPresentation p({2, 2, 2});
  p.set_power(0, {{2, 1}});
  p.set_power(1, {{2, 1}});
  p.set_conj(1, 0, {{1, 1}, {2, 1}});
  return p;
}

// Z/3 x| Z/4 with the generator of order 4 inverting Z/3; center is <t^2>.
PcPresentation z3_by_z4() {
  PcPresentation p({2, 2, 3});
  p.set_power(0, {{1, 1}});
  p.set_conj(2, 0, {{2, 2}});
  return p;
}

bool is_central(const PcPresentation &p, const ExpVec &x) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p.is_identity(p.commutator(x, p.generator(k))))
      return false;
  return true;
}

// Every exponent vector in a box, with finite coordinates in [0, order).
template <class F> void for_each_element(const PcPresentation &p, Exp box, F &&f) {
  ExpVec x(p.size(), 0);
  std::vector<Exp> lo(p.size()), hi(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    lo[k] = p.is_infinite(k) ? -box : 0;
    hi[k] = p.is_infinite(k) ? box : p.relative_order(k) - 1;
    x[k] = lo[k];
  }
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < x.size() && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == x.size())
      return;
    ++x[k];
  }
}

void check_against_enumeration(const PcPresentation &p, Exp box) {
  REQUIRE(is_consistent(p));
  auto z = center(p);
  for (const auto &g : z.igs())
    REQUIRE(is_central(p, g));
  for_each_element(p, box, [&](const ExpVec &x) { REQUIRE(is_central(p, x) == z.contains(x)); });
}

} // namespace

TEST_CASE("centers of small groups") {
  auto a = groups::z2xz4();
  CHECK(center(a) == whole_group(a));
  auto d = groups::dinf();
  CHECK(center(d).is_trivial());
  auto h = groups::heisenberg();
  CHECK(center(h) == subgroup(h, {h.generator(2)}));
  CHECK(center(d8()).order() == 2);
  CHECK(center(q8()) == subgroup(q8(), {ExpVec{0, 0, 1}}));
  auto t = z3_by_z4();
  CHECK(center(t) == subgroup(t, {t.generator(1)}));
}

TEST_CASE("center agrees with enumeration") {
  check_against_enumeration(groups::z2xz4(), 0);
  check_against_enumeration(d8(), 0);
  check_against_enumeration(q8(), 0);
  check_against_enumeration(z3_by_z4(), 0);
  check_against_enumeration(groups::dinf(), 6);
  check_against_enumeration(groups::heisenberg(), 3);
  auto h = groups::heisenberg();
  auto h3 = quotient(h, subgroup(h, {h.generator(2, 3)})).pc;
  check_against_enumeration(h3, 4);
  CHECK(center(h3) == subgroup(h3, {h3.generator(0, 3), h3.generator(1, 3), h3.generator(2)}));
}

TEST_CASE("normal boundaries and layers") {
  auto h = groups::heisenberg();
  CHECK(normal_boundaries(h) == std::vector<std::size_t>{0, 1, 2, 3});
  auto layers = abelian_layers(groups::z4_refined());
  // <g2> is normal, so the finest series has two Z/2 layers
  REQUIRE(layers.size() == 2);
  CHECK(layers[0].moduli == std::vector<Integer>{2});
}

TEST_CASE("abelian invariants") {
  auto d = groups::dinf();
  CHECK(abelian_invariants(d) == AbelianInvariants{{2, 2}, 0});
  auto h = groups::heisenberg();
  CHECK(abelian_invariants(h) == AbelianInvariants{{}, 2});
  CHECK(abelian_invariants(subgroup(h, {h.generator(2)})) == AbelianInvariants{{}, 1});
  CHECK(abelian_invariants(whole_group(groups::z2xz4())) == AbelianInvariants{{2, 4}, 0});
  CHECK(abelian_invariants(groups::z2xz4()) == AbelianInvariants{{2, 4}, 0});
  CHECK(abelian_invariants(q8()) == AbelianInvariants{{2, 2}, 0});
  CHECK_THROWS_AS(abelian_invariants(whole_group(h)), AlgebraError);
}
