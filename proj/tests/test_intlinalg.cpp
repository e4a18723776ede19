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

#include "hcgt/intlinalg.hpp"
#include "oracles.hpp"

using namespace hcgt;

namespace {

IntMatrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> val(-3, 3);
  IntMatrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      A(i, j) = val(rng);
  return A;
}

Integer det(const IntMatrix &A) { return oracle::bareiss_det(A); }

bool divisibility_chain(const SmithDecomposition &s) {
  for (std::size_t i = 0; i < s.S.rows(); ++i)
    for (std::size_t j = 0; j < s.S.cols(); ++j)
      if (i != j && s.S(i, j) != 0)
        return false;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.S(i, i) <= 0)
      return false;
    if (i + 1 < s.rank && s.S(i + 1, i + 1) % s.S(i, i) != 0)
      return false;
  }
  for (std::size_t i = s.rank; i < std::min(s.S.rows(), s.S.cols()); ++i)
    if (s.S(i, i) != 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("hnf fixed points") {
  auto I = IntMatrix::identity(2);
  auto h = hnf(I);
  CHECK(h.H == I);
  CHECK(h.U == I);

  IntMatrix Z(2, 2);
  auto hz = hnf(Z);
  CHECK(hz.H == Z);
  CHECK(hz.U == I);
}

TEST_CASE("hnf of [[2,4],[0,3]] against elementary-operation oracle") {
  IntMatrix A{{2, 4}, {0, 3}};
  auto h = hnf(A);
  CHECK(h.U * A == h.H);
  CHECK(is_row_hermite(h.H));
  CHECK(abs_value(det(h.U)) == 1);
  // independent reduction by gcd pivoting gives the same unique form
  CHECK(h.H == oracle::hermite_by_row_ops(A));
  CHECK(h.H == IntMatrix{{2, 1}, {0, 3}});
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{0}}).S == IntMatrix{{0}});
  auto s23 = snf(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s23.diagonal() == std::vector<Integer>{1, 6});
  CHECK(s23.diagonal() == oracle::diagonal_chain_2x2(2, 3));
  CHECK(snf(IntMatrix{{2, 0}, {0, 2}}).diagonal() == std::vector<Integer>{2, 2});
  CHECK(oracle::diagonal_chain_2x2(4, 6) == snf(IntMatrix{{4, 0}, {0, 6}}).diagonal());
}

TEST_CASE("solve_congruence examples") {
  std::vector<Integer> m0{0}, m4{4}, m5{5};
  CHECK(solve_congruence(IntMatrix{{1}}, m0).empty());
  auto b = solve_congruence(IntMatrix{{2}}, m4);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == std::vector<Integer>{2});
  auto c = solve_congruence(IntMatrix{{0}}, m5);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::vector<Integer>{1});
}

TEST_CASE("snf and hnf contracts on random small matrices") {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix A = random_matrix(rng, r, c);

    SmithDecomposition s = snf(A);
    REQUIRE(s.U * A * s.V == s.S);
    REQUIRE(abs_value(det(s.U)) == 1);
    REQUIRE(abs_value(det(s.V)) == 1);
    REQUIRE(divisibility_chain(s));
    REQUIRE(s.rank == oracle::bareiss_rank(A));

    HermiteForm h = hnf(A);
    REQUIRE(h.U * A == h.H);
    REQUIRE(abs_value(det(h.U)) == 1);
    REQUIRE(is_row_hermite(h.H));
    REQUIRE(hnf(h.H).H == h.H);
    REQUIRE(h.rank == s.rank);
  }
}

TEST_CASE("solve_congruence agrees with brute-force enumeration") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> modd(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix A = random_matrix(rng, r, c);
    std::vector<Integer> moduli(r);
    for (auto &x : moduli) {
      int v = modd(rng);
      x = v == 1 ? 0 : v;
    }
    auto basis = solve_congruence(A, moduli);
    // every basis vector solves the system
    for (const auto &v : basis)
      REQUIRE(oracle::satisfies(A, moduli, v));
    // every solution in a small box lies in the generated lattice
    LatticeEchelon lat(c);
    for (const auto &v : basis)
      lat.add(v);
    oracle::for_each_in_box(c, -6, 6, [&](const std::vector<Integer> &x) {
      if (oracle::satisfies(A, moduli, x))
        REQUIRE(lat.contains(x));
    });
  }
}

TEST_CASE("lattice echelon matches hnf of the same rows") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix A = random_matrix(rng, 4, 4);
    LatticeEchelon lat(4);
    for (std::size_t r = 0; r < 4; ++r)
      lat.add(A.row(r));
    auto h = hnf(A);
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < h.rank; ++r)
      rows.push_back(h.H.row(r));
    REQUIRE(lat.hermite_basis() == rows);
  }
}

TEST_CASE("cokernel invariants") {
  auto inv = cokernel_invariants(IntMatrix{{2, 0, 0}, {0, 4, 0}});
  CHECK(inv.torsion == std::vector<Integer>{2, 4});
  CHECK(inv.free_rank == 1);
  auto inv2 = cokernel_invariants(IntMatrix{{3, 0}, {0, 5}});
  CHECK(inv2.torsion == std::vector<Integer>{15});
  CHECK(inv2.free_rank == 0);
}
