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

#include <array>
#include <random>

#include "groups.hpp"
#include "hcgt/pc/consistency.hpp"
#include "hcgt/pc/presentation.hpp"
#include "hcgt/pc/text_format.hpp"
#include "oracles.hpp"

using namespace hcgt;

namespace {

// D_inf acting on Z by affine maps x -> s x + t, composed left to right.
struct Affine {
  long long s = 1, t = 0;
  friend Affine operator*(Affine u, Affine v) { return {u.s * v.s, u.t * v.s + v.t}; }
  friend bool operator==(Affine, Affine) = default;
};

Affine affine_letter(const Letter &l) {
  Affine g = l.gen == 0 ? Affine{-1, 0} : Affine{1, 1};
  Affine inv = l.gen == 0 ? g : Affine{1, -1};
  Affine r;
  for (Exp k = 0; k < (l.exp < 0 ? -l.exp : l.exp); ++k)
    r = r * (l.exp < 0 ? inv : g);
  return r;
}

Affine affine_of_word(const PcWord &w) {
  Affine r;
  for (const auto &l : w)
    r = r * affine_letter(l);
  return r;
}

oracle::Mat3 heis_of_word(const PcWord &w) {
  const std::array<oracle::Mat3, 3> g{oracle::heis_x(), oracle::heis_y(), oracle::heis_z()};
  oracle::Mat3 r = oracle::mat_pow(g[0], 0);
  for (const auto &l : w)
    r = oracle::mat_mul(r, oracle::mat_pow(g[static_cast<std::size_t>(l.gen)], l.exp));
  return r;
}

// Collect a word in randomly sized chunks and multiply the normal forms.
ExpVec chunked(const PcPresentation &p, const PcWord &w, std::mt19937 &rng) {
  ExpVec acc = p.identity();
  std::uniform_int_distribution<std::size_t> cut(1, 4);
  for (std::size_t k = 0; k < w.size();) {
    std::size_t len = std::min(cut(rng), w.size() - k);
    PcWord part(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k + len));
    acc = p.multiply(acc, p.collect(part));
    k += len;
  }
  return acc;
}

} // namespace

TEST_CASE("collection in Z/4") {
  auto p = groups::z4();
  CHECK(p.collect({{0, 5}}) == ExpVec{1});
  CHECK(p.collect({{0, -1}}) == ExpVec{3});
  auto q = groups::z4_refined();
  CHECK(q.collect({{0, 1}, {0, 1}}) == ExpVec{0, 1});
  CHECK(q.collect({{0, 3}}) == ExpVec{1, 1});
  CHECK(q.collect({{0, -1}}) == ExpVec{1, 1});
  CHECK(q.is_identity(q.collect({{0, 4}})));
}

TEST_CASE("collection in D_inf") {
  auto p = groups::dinf();
  CHECK(p.collect({{1, 1}, {0, 1}}) == ExpVec{1, -1});
  CHECK(p.collect({{0, 1}, {1, 3}, {0, 1}}) == ExpVec{0, -3});
  CHECK(p.is_identity(p.commutator(p.generator(1), p.generator(1, 5))));
  CHECK(p.commutator(p.generator(1), p.generator(0)) == ExpVec{0, -2});
}

TEST_CASE("collection in the Heisenberg group") {
  auto p = groups::heisenberg();
  CHECK(p.collect({{1, 1}, {0, 1}}) == ExpVec{1, 1, 1});
  CHECK(p.conj_inv(1, 0) == PcWord{{1, 1}, {2, -1}});
  CHECK(p.commutator(p.generator(1), p.generator(0)) == ExpVec{0, 0, 1});
  CHECK(p.collect({{1, 2}, {0, 3}}) == ExpVec{3, 2, 6});
}

TEST_CASE("collection agrees with the matrix oracle") {
  std::mt19937 rng(17);
  auto h = groups::heisenberg();
  auto d = groups::dinf();
  for (int trial = 0; trial < 500; ++trial) {
    auto w = groups::random_word(h, rng, 10, 4);
    auto e = h.collect(w);
    REQUIRE(oracle::heis_eval(e[0], e[1], e[2]) == heis_of_word(w));
    auto v = groups::random_word(d, rng, 10, 4);
    auto f = d.collect(v);
    REQUIRE(affine_of_word(to_word(f)) == affine_of_word(v));
  }
}

TEST_CASE("collection in Z/2 x Z/4") {
  auto p = groups::z2xz4();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = groups::random_word(p, rng, 8, 5);
    // oracle: exponent sums in Z/2 x Z/4 with g2 -> 1, g3 -> 2 in Z/4
    long long a = 0, b = 0;
    for (const auto &l : w) {
      if (l.gen == 0)
        a += l.exp;
      else
        b += l.exp * (l.gen == 1 ? 1 : 2);
    }
    a = ((a % 2) + 2) % 2;
    b = ((b % 4) + 4) % 4;
    REQUIRE(p.collect(w) == ExpVec{a, b % 2, b / 2});
  }
}

TEST_CASE("collection is confluent") {
  std::mt19937 rng(29);
  for (const auto &p : {groups::z4_refined(), groups::dinf(), groups::heisenberg(),
                        groups::z2xz4()}) {
    for (int trial = 0; trial < 500; ++trial) {
      auto w = groups::random_word(p, rng, 12, 3);
      auto e = p.collect(w);
      REQUIRE(chunked(p, w, rng) == e);
      REQUIRE(p.collect(to_word(e)) == e);
      auto x = groups::random_element(p, rng), y = groups::random_element(p, rng),
           z = groups::random_element(p, rng);
      REQUIRE(p.multiply(p.multiply(x, y), z) == p.multiply(x, p.multiply(y, z)));
      REQUIRE(p.is_identity(p.multiply(x, p.inverse(x))));
    }
  }
}

TEST_CASE("consistency checks") {
  CHECK(is_consistent(groups::z4()));
  CHECK(is_consistent(groups::z4_refined()));
  CHECK(is_consistent(groups::dinf()));
  CHECK(is_consistent(groups::heisenberg()));
  CHECK(is_consistent(groups::z2xz4()));
  auto bad = consistency_check(groups::inconsistent_example());
  REQUIRE(bad.has_value());
  CHECK(!bad->describe().empty());
}

TEST_CASE("relation setters validate their input") {
  PcPresentation p({2, 0});
  CHECK_THROWS(p.set_power(0, {{0, 1}}));
  CHECK_THROWS(p.set_conj(1, 0, {{0, 1}}));
  CHECK_THROWS(p.set_conj_inv(1, 0, {{1, 1}}));
}

TEST_CASE("pc text format round trip") {
  std::mt19937 rng(31);
  for (const auto &p : {groups::z4_refined(), groups::dinf(), groups::heisenberg(),
                        groups::z2xz4()}) {
    auto text = write_pc_string(p);
    auto q = read_pc_string(text);
    REQUIRE(q.relative_orders() == p.relative_orders());
    REQUIRE(write_pc_string(q) == text);
    for (int trial = 0; trial < 50; ++trial) {
      auto w = groups::random_word(p, rng, 8);
      REQUIRE(q.collect(w) == p.collect(w));
    }
  }
  CHECK_THROWS(read_pc_string("gens 2\ng1^2 = g7\n"));
  CHECK_THROWS(read_pc_string("nonsense\n"));
}
