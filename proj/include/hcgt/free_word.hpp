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

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hcgt {

struct Letter {
  int gen;
  std::int64_t exp;
  friend bool operator==(const Letter &, const Letter &) = default;
  friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// Freely reduced word in a free group. Generators are 0-based indices.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<Letter> &letters) {
    for (const auto &l : letters)
      push(l);
  }

  static FreeWord gen(int g, std::int64_t e = 1) { return FreeWord({{g, e}}); }

  const std::vector<Letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  std::int64_t length() const {
    std::int64_t n = 0;
    for (const auto &l : letters_)
      n += l.exp < 0 ? -l.exp : l.exp;
    return n;
  }

  /// Appends one letter, merging and cancelling against the end.
  void push(Letter l) {
    if (l.exp == 0)
      return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0)
        letters_.pop_back();
      return;
    }
    letters_.push_back(l);
  }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  FreeWord &operator*=(const FreeWord &o) {
    for (const auto &l : o.letters_)
      push(l);
    return *this;
  }

  friend FreeWord operator*(FreeWord a, const FreeWord &b) { return a *= b; }

  FreeWord pow(std::int64_t k) const {
    FreeWord base = k < 0 ? inverse() : *this;
    FreeWord out;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
      out *= base;
    return out;
  }

  friend bool operator==(const FreeWord &, const FreeWord &) = default;
  friend auto operator<=>(const FreeWord &a, const FreeWord &b) {
    return a.letters_ <=> b.letters_;
  }

  /// Renders as x1^2*x3^-1 with 1-based names; the empty word is "1".
  std::string to_string(const std::string &name = "x") const {
    if (letters_.empty())
      return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i)
        s += '*';
      s += name + std::to_string(letters_[i].gen + 1);
      if (letters_[i].exp != 1)
        s += '^' + std::to_string(letters_[i].exp);
    }
    return s;
  }

private:
  std::vector<Letter> letters_;
};

inline FreeWord free_commutator(const FreeWord &a, const FreeWord &b) {
  return a.inverse() * b.inverse() * a * b;
}

inline std::ostream &operator<<(std::ostream &os, const FreeWord &w) {
  return os << w.to_string();
}

} // namespace hcgt
