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

// The integral version of the construction: T_n = Z^n * Z^n with the same
// R-families, written out symbolically. The quotient T_n / [R_1..R_{n+1}]_S
// is not polycyclic, so nothing here computes a center.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcgt {

struct S2Description {
  int n = 0;
  // x1..xn generate the left Z^n, x(n+1)..x(2n) the right one.
  std::vector<std::string> left, right;
  // Normal generators of R_1..R_{n+1}.
  std::vector<std::vector<std::string>> families;
  // One left-normed bracket per permutation, in lexicographic order.
  std::vector<std::string> brackets;
  static constexpr const char *notice =
      "symbolic description only: the quotient is not polycyclic and no center is computed";
};

inline S2Description s2_emit(int n) {
  if (n < 3 || n > 9)
    throw std::invalid_argument("s2_emit: n must be between 3 and 9");
  auto x = [](int j) { return "x" + std::to_string(j); };
  S2Description d;
  d.n = n;
  for (int j = 1; j <= n; ++j) {
    d.left.push_back(x(j));
    d.right.push_back(x(n + j));
  }
  d.families.push_back({x(1), x(n + 1)});
  for (int i = 2; i <= n; ++i)
    d.families.push_back({x(i) + "*" + x(i - 1) + "^-1", x(n + i) + "*" + x(n + i - 1) + "^-1"});
  d.families.push_back({x(n), x(2 * n)});

  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::string b = "R" + std::to_string(perm[0]);
    for (std::size_t k = 1; k < perm.size(); ++k)
      b = "[" + b + ",R" + std::to_string(perm[k]) + "]";
    d.brackets.push_back(std::move(b));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return d;
}

} // namespace hcgt
