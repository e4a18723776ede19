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

// Braid words, the word problem through the Artin action on the free group,
// pure braid generators A_{i,j} (including the formal A_{0,j}), the face
// maps d_0, ..., d_n between pure braid groups, and the normal generators
// of Brunnian and boundary Brunnian braids.

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcgt/free_word.hpp"

namespace hcgt::braids {

/// sigma_i^{+-1} words on n strands, 1 <= i <= n - 1, freely reduced.
class BraidWord {
public:
  struct Letter {
    int i;
    int e; // +1 or -1
    friend bool operator==(const Letter &, const Letter &) = default;
  };

  explicit BraidWord(int strands = 1) : n_(strands) {
    if (strands < 1)
      throw std::invalid_argument("BraidWord: need at least one strand");
  }

  int strands() const { return n_; }
  const std::vector<Letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(int i, int e) {
    if (i < 1 || i >= n_ || (e != 1 && e != -1))
      throw std::out_of_range("BraidWord: letter s" + std::to_string(i) + " on " +
                              std::to_string(n_) + " strands");
    if (!letters_.empty() && letters_.back().i == i && letters_.back().e == -e)
      letters_.pop_back();
    else
      letters_.push_back({i, e});
  }

  BraidWord &operator*=(const BraidWord &o) {
    check_same(o);
    for (const auto &l : o.letters_)
      push(l.i, l.e);
    return *this;
  }
  friend BraidWord operator*(BraidWord a, const BraidWord &b) { return a *= b; }

  BraidWord inverse() const {
    BraidWord w(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->i, -it->e});
    return w;
  }

  /// perm[p] = strand ending at position p (0-based), reading left to right.
  std::vector<int> permutation() const {
    std::vector<int> at(static_cast<std::size_t>(n_));
    std::iota(at.begin(), at.end(), 0);
    for (const auto &l : letters_)
      std::swap(at[static_cast<std::size_t>(l.i - 1)], at[static_cast<std::size_t>(l.i)]);
    return at;
  }

  bool is_pure() const {
    const auto p = permutation();
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != static_cast<int>(k))
        return false;
    return true;
  }

  std::string to_string() const {
    if (letters_.empty())
      return "1";
    std::string s;
    for (const auto &l : letters_) {
      if (!s.empty())
        s += ' ';
      s += "s" + std::to_string(l.i);
      if (l.e < 0)
        s += "^-1";
    }
    return s;
  }

  /// "s1 s2^-1 s1^2"; "1" or the empty string is the identity.
  static BraidWord parse(int strands, const std::string &text) {
    BraidWord w(strands);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      if (tok == "1")
        continue;
      if (tok[0] != 's')
        throw std::invalid_argument("BraidWord::parse: bad token '" + tok + "'");
      const auto caret = tok.find('^');
      const int i = std::stoi(tok.substr(1, caret - 1));
      const int e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      for (int k = 0; k < std::abs(e); ++k)
        w.push(i, e > 0 ? 1 : -1);
    }
    return w;
  }

  friend bool operator==(const BraidWord &, const BraidWord &) = default;

private:
  void check_same(const BraidWord &o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("BraidWord: strand counts differ");
  }

  int n_;
  std::vector<Letter> letters_;
};

/// Words in the letters A_{i,j}^{+-1}, 0 <= i < j <= n. A_{0,j} is a formal
/// letter standing for the product given by zero_letter().
class PureBraidWord {
public:
  struct Letter {
    int i, j;
    int e;
    friend bool operator==(const Letter &, const Letter &) = default;
  };

  explicit PureBraidWord(int strands = 1) : n_(strands) {
    if (strands < 1)
      throw std::invalid_argument("PureBraidWord: need at least one strand");
  }

  static PureBraidWord gen(int n, int i, int j, int e = 1) {
    PureBraidWord w(n);
    w.push(i, j, e);
    return w;
  }

  int strands() const { return n_; }
  const std::vector<Letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// A_{j,i} = A_{i,j}; exponents other than +-1 are split into letters.
  void push(int i, int j, int e) {
    if (i > j)
      std::swap(i, j);
    if (i < 0 || i == j || j > n_ || j < 1)
      throw std::out_of_range("PureBraidWord: A[" + std::to_string(i) + "," +
                              std::to_string(j) + "] on " + std::to_string(n_) + " strands");
    for (int k = 0; k < std::abs(e); ++k) {
      const int s = e > 0 ? 1 : -1;
      if (!letters_.empty() && letters_.back().i == i && letters_.back().j == j &&
          letters_.back().e == -s)
        letters_.pop_back();
      else
        letters_.push_back({i, j, s});
    }
  }

  bool has_zero_letters() const {
    return std::any_of(letters_.begin(), letters_.end(), [](const Letter &l) { return l.i == 0; });
  }

  PureBraidWord &operator*=(const PureBraidWord &o) {
    if (o.n_ != n_)
      throw std::invalid_argument("PureBraidWord: strand counts differ");
    for (const auto &l : o.letters_)
      push(l.i, l.j, l.e);
    return *this;
  }
  friend PureBraidWord operator*(PureBraidWord a, const PureBraidWord &b) { return a *= b; }

  PureBraidWord inverse() const {
    PureBraidWord w(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->i, it->j, -it->e});
    return w;
  }

  std::string to_string() const {
    if (letters_.empty())
      return "1";
    std::string s;
    for (const auto &l : letters_) {
      if (!s.empty())
        s += ' ';
      s += "A[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
      if (l.e < 0)
        s += "^-1";
    }
    return s;
  }

  /// "A[1,3]^-1 A[2,3]"; "1" or the empty string is the identity.
  static PureBraidWord parse(int strands, const std::string &text) {
    PureBraidWord w(strands);
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        t += c;
    std::size_t p = 0;
    while (p < t.size()) {
      if (t[p] == '1' || t[p] == '*') {
        ++p;
        continue;
      }
      if (t.compare(p, 2, "A[") != 0)
        throw std::invalid_argument("PureBraidWord::parse: expected A[i,j] at offset " +
                                    std::to_string(p));
      const auto close = t.find(']', p);
      const auto comma = t.find(',', p);
      if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw std::invalid_argument("PureBraidWord::parse: malformed letter");
      const int i = std::stoi(t.substr(p + 2, comma - p - 2));
      const int j = std::stoi(t.substr(comma + 1, close - comma - 1));
      p = close + 1;
      int e = 1;
      if (p < t.size() && t[p] == '^') {
        std::size_t used = 0;
        e = std::stoi(t.substr(p + 1), &used);
        p += 1 + used;
      }
      w.push(i, j, e);
    }
    return w;
  }

  friend bool operator==(const PureBraidWord &, const PureBraidWord &) = default;

private:
  int n_;
  std::vector<Letter> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
inline PureBraidWord commutator(const PureBraidWord &a, const PureBraidWord &b) {
  return a.inverse() * b.inverse() * a * b;
}

/// Standard: A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
/// Transposed conjugates from the other side.
enum class BandConvention { Standard, Transposed };

/// A_{0,j} in P_m as a word in the A_{i,j}, i >= 1:
/// (A_{j,j+1} ... A_{j,m})^-1 (A_{1,j} ... A_{j-1,j})^-1.
inline PureBraidWord zero_letter(int j, int m) {
  if (j < 1 || j > m)
    throw std::out_of_range("zero_letter: index");
  PureBraidWord first(m), second(m);
  for (int k = j + 1; k <= m; ++k)
    first.push(j, k, 1);
  for (int k = 1; k < j; ++k)
    second.push(k, j, 1);
  return first.inverse() * second.inverse();
}

using ZeroLetterFn = std::function<PureBraidWord(int j, int m)>;

/// The same element written with sigmas:
/// (s_j ... s_{m-2} s_{m-1}^2 s_{m-2} ... s_j)^-1 (s_{j-1} ... s_2 s_1^2 s_2 ... s_{j-1})^-1.
inline BraidWord zero_letter_sigma_form(int j, int m) {
  auto arch = [&](int lo, int hi, bool descending) {
    // s_lo ... s_{hi-1} s_hi^2 s_{hi-1} ... s_lo, or its mirror from hi down to lo
    BraidWord w(m);
    if (lo > hi)
      return w;
    if (!descending) {
      for (int k = lo; k < hi; ++k)
        w.push(k, 1);
      w.push(hi, 1);
      w.push(hi, 1);
      for (int k = hi - 1; k >= lo; --k)
        w.push(k, 1);
    } else {
      for (int k = hi; k > lo; --k)
        w.push(k, 1);
      w.push(lo, 1);
      w.push(lo, 1);
      for (int k = lo + 1; k <= hi; ++k)
        w.push(k, 1);
    }
    return w;
  };
  return arch(j, m - 1, false).inverse() * arch(1, j - 1, true).inverse();
}

inline BraidWord band(int i, int j, int n, BandConvention conv = BandConvention::Standard) {
  if (i > j)
    std::swap(i, j);
  if (i < 1 || j > n || i == j)
    throw std::out_of_range("band: index");
  BraidWord w(n);
  const int outer = conv == BandConvention::Standard ? 1 : -1;
  for (int k = j - 1; k > i; --k)
    w.push(k, outer);
  w.push(i, 1);
  w.push(i, 1);
  for (int k = i + 1; k < j; ++k)
    w.push(k, -outer);
  return w;
}

/// Replaces every A_{0,j} by its expansion in the ambient group.
inline PureBraidWord expand_zero(const PureBraidWord &w, const ZeroLetterFn &zero = zero_letter) {
  PureBraidWord out(w.strands());
  for (const auto &l : w.letters()) {
    if (l.i != 0) {
      out.push(l.i, l.j, l.e);
      continue;
    }
    const PureBraidWord z = zero(l.j, w.strands());
    out *= l.e > 0 ? z : z.inverse();
  }
  return out;
}

inline BraidWord to_sigma(const PureBraidWord &w, BandConvention conv = BandConvention::Standard,
                          const ZeroLetterFn &zero = zero_letter) {
  BraidWord out(w.strands());
  const PureBraidWord x = expand_zero(w, zero);
  for (const auto &l : x.letters()) {
    const BraidWord b = band(l.i, l.j, w.strands(), conv);
    out *= l.e > 0 ? b : b.inverse();
  }
  return out;
}

/// A_{i,j} as a sigma word in B_n; i = 0 uses the A_{0,j} formula in P_n.
inline BraidWord pure_gen(int i, int j, int n, BandConvention conv = BandConvention::Standard) {
  return to_sigma(PureBraidWord::gen(n, i, j), conv);
}

/// An endomorphism of the free group on x_1..x_n (0-based generators).
struct FreeGroupEndo {
  std::vector<FreeWord> images;

  static FreeGroupEndo identity(int n) {
    FreeGroupEndo f;
    for (int k = 0; k < n; ++k)
      f.images.push_back(FreeWord::gen(k));
    return f;
  }

  int rank() const { return static_cast<int>(images.size()); }

  FreeWord apply(const FreeWord &w) const {
    FreeWord out;
    for (const auto &l : w.letters()) {
      const FreeWord &x = images[static_cast<std::size_t>(l.gen)];
      out *= x.pow(l.exp);
    }
    return out;
  }

  /// (f o g)(x) = f(g(x)).
  friend FreeGroupEndo compose(const FreeGroupEndo &f, const FreeGroupEndo &g) {
    FreeGroupEndo h;
    for (const auto &x : g.images)
      h.images.push_back(f.apply(x));
    return h;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < images.size(); ++k)
      if (!(images[k] == FreeWord::gen(static_cast<int>(k))))
        return false;
    return true;
  }

  friend bool operator==(const FreeGroupEndo &, const FreeGroupEndo &) = default;
};

/// s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i. A word acts as the
/// composite of its letters, leftmost outermost, so
/// artin_endo(b b') = artin_endo(b) o artin_endo(b').
inline FreeGroupEndo artin_endo(const BraidWord &b) {
  FreeGroupEndo f = FreeGroupEndo::identity(b.strands());
  for (const auto &l : b.letters()) {
    auto &u = f.images[static_cast<std::size_t>(l.i - 1)];
    auto &v = f.images[static_cast<std::size_t>(l.i)];
    // f <- f o s_i^{+-1}
    if (l.e > 0) {
      FreeWord nu = u * v * u.inverse();
      v = u;
      u = std::move(nu);
    } else {
      FreeWord nv = v.inverse() * u * v;
      u = v;
      v = std::move(nv);
    }
  }
  return f;
}

inline bool is_trivial(const BraidWord &b) { return artin_endo(b).is_identity(); }

inline bool is_central(const BraidWord &b) {
  for (int i = 1; i < b.strands(); ++i) {
    BraidWord s(b.strands());
    s.push(i, 1);
    if (!is_trivial(b * s * b.inverse() * s.inverse()))
      return false;
  }
  return true;
}

inline bool equal(const BraidWord &a, const BraidWord &b) { return artin_endo(a) == artin_endo(b); }

inline bool equal(const PureBraidWord &a, const PureBraidWord &b,
                  BandConvention conv = BandConvention::Standard) {
  return equal(to_sigma(a, conv), to_sigma(b, conv));
}

/// d_i on sigma words: delete strand i (1-based) and renumber.
inline BraidWord remove_strand(const BraidWord &b, int i) {
  const int n = b.strands();
  if (i < 1 || i > n)
    throw std::out_of_range("remove_strand: strand index");
  if (!b.is_pure())
    throw std::invalid_argument("remove_strand: braid is not pure");
  if (n == 1)
    throw std::invalid_argument("remove_strand: cannot remove the only strand");
  std::vector<int> at(static_cast<std::size_t>(n));
  std::iota(at.begin(), at.end(), 1);
  BraidWord out(n - 1);
  for (const auto &l : b.letters()) {
    const std::size_t p = static_cast<std::size_t>(l.i - 1);
    if (at[p] != i && at[p + 1] != i) {
      // positions to the right of the removed strand move one to the left
      const auto where = std::find(at.begin(), at.end(), i) - at.begin();
      out.push(where < static_cast<std::ptrdiff_t>(p) ? l.i - 1 : l.i, l.e);
    }
    std::swap(at[p], at[p + 1]);
  }
  return out;
}

/// d_i on A-words, i >= 1: A_{i,j} -> 1 and indices above i drop by one.
/// A_{0,j} letters are expanded first.
inline PureBraidWord face(const PureBraidWord &w, int i, const ZeroLetterFn &zero = zero_letter) {
  const int n = w.strands();
  if (i < 1 || i > n || n == 1)
    throw std::out_of_range("face: index");
  PureBraidWord out(n - 1);
  const PureBraidWord x = expand_zero(w, zero);
  for (const auto &l : x.letters()) {
    if (l.i == i || l.j == i)
      continue;
    out.push(l.i - (l.i > i), l.j - (l.j > i), l.e);
  }
  return out;
}

/// d_0 A_{i,j} = A_{i-1,j-1}; A_{0,j} letters in the image are kept formal.
inline PureBraidWord d0(const PureBraidWord &w) {
  if (w.has_zero_letters())
    throw std::invalid_argument("d0: input contains A[0,j] letters");
  if (w.strands() == 1)
    throw std::out_of_range("d0: one strand");
  PureBraidWord out(w.strands() - 1);
  for (const auto &l : w.letters())
    out.push(l.i - 1, l.j - 1, l.e);
  return out;
}

inline bool is_brunnian(const BraidWord &b) {
  if (!b.is_pure())
    throw std::invalid_argument("is_brunnian: braid is not pure");
  if (b.strands() == 1)
    return true;
  for (int i = 1; i <= b.strands(); ++i)
    if (!is_trivial(remove_strand(b, i)))
      return false;
  return true;
}

inline bool is_brunnian(const PureBraidWord &w, BandConvention conv = BandConvention::Standard) {
  return is_brunnian(to_sigma(w, conv));
}

/// Relators of the classical presentation of P_n: for r < s < j and i < j,
/// A_{r,s}^-1 A_{i,j} A_{r,s} times the inverse of its prescribed value.
inline std::vector<PureBraidWord> pure_braid_relators(int n) {
  std::vector<PureBraidWord> out;
  auto A = [&](int i, int j, int e = 1) { return PureBraidWord::gen(n, i, j, e); };
  for (int j = 2; j <= n; ++j)
    for (int s = 2; s < j; ++s)
      for (int r = 1; r < s; ++r)
        for (int i = 1; i < j; ++i) {
          PureBraidWord rhs(n);
          if (i > s || i < r)
            rhs = A(i, j);
          else if (i == s)
            rhs = A(r, j) * A(i, j) * A(r, j, -1);
          else if (i == r)
            rhs = A(r, j) * A(s, j) * A(i, j) * A(s, j, -1) * A(r, j, -1);
          else
            rhs = A(r, j) * A(s, j) * A(r, j, -1) * A(s, j, -1) * A(i, j) * A(s, j) * A(r, j) *
                  A(s, j, -1) * A(r, j, -1);
          out.push_back(A(r, s, -1) * A(i, j) * A(r, s) * rhs.inverse());
        }
  return out;
}

struct DeltaReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct DeltaOptions {
  BandConvention conv = BandConvention::Standard;
  ZeroLetterFn zero = zero_letter;
};

/// Face identities d_i d_j = d_{j-1} d_i (0 <= i < j <= n) on every A_{k,l}
/// of P_n, agreement of the letterwise d_i with strand removal, and d_0 of
/// every relator of P_n being trivial in P_{n-1}.
inline DeltaReport verify_delta(int n, const DeltaOptions &opt = {}) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("verify_delta: n must be between 3 and 8");
  DeltaReport rep;
  rep.n = n;
  auto fc = [&](const PureBraidWord &w, int i) {
    return i == 0 ? d0(expand_zero(w, opt.zero)) : face(w, i, opt.zero);
  };
  auto same = [&](const PureBraidWord &a, const PureBraidWord &b) {
    return equal(to_sigma(a, opt.conv, opt.zero), to_sigma(b, opt.conv, opt.zero));
  };
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const PureBraidWord g = PureBraidWord::gen(n, k, l);
      for (int j = 1; j <= n; ++j) {
        ++rep.checked;
        const BraidWord geometric = remove_strand(to_sigma(g, opt.conv, opt.zero), j);
        if (!equal(geometric, to_sigma(face(g, j, opt.zero), opt.conv, opt.zero)))
          rep.failures.push_back("d" + std::to_string(j) + " " + g.to_string() +
                                 ": letterwise image differs from strand removal");
      }
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          ++rep.checked;
          const PureBraidWord lhs = fc(fc(g, j), i);
          const PureBraidWord rhs = fc(fc(g, i), j - 1);
          if (same(lhs, rhs))
            continue;
          const BraidWord diff = to_sigma(lhs.inverse() * rhs, opt.conv, opt.zero);
          rep.failures.push_back("d" + std::to_string(i) + "d" + std::to_string(j) + " != d" +
                                 std::to_string(j - 1) + "d" + std::to_string(i) + " on " +
                                 g.to_string() + " (" + lhs.to_string() + " vs " +
                                 rhs.to_string() + ", quotient " +
                                 (is_central(diff) ? "central" : "not central") + ")");
        }
    }
  for (const auto &r : pure_braid_relators(n)) {
    ++rep.checked;
    if (!is_trivial(to_sigma(r, opt.conv, opt.zero)))
      rep.failures.push_back("relator " + r.to_string() + " is not trivial in P" +
                             std::to_string(n));
    else if (!is_trivial(to_sigma(d0(r), opt.conv, opt.zero)))
      rep.failures.push_back("d0 of relator " + r.to_string() + " is not trivial");
  }
  return rep;
}

namespace detail {

// Calls f(perm, js) for every bijection perm of {lo..hi} (as a list indexed
// by slot) and every tuple js with js[t] in [1, jmax], js[t] != perm[t] + off.
template <class F>
void for_each_slot_choice(int lo, int hi, int jmax, int off, int jmin, F &&f) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  std::iota(perm.begin(), perm.end(), lo);
  do {
    std::vector<int> js(perm.size(), jmin);
    auto bad = [&](std::size_t t) { return js[t] == perm[t] + off; };
    // first admissible tuple in lexicographic order, then odometer steps
    auto fix = [&](std::size_t t) {
      while (js[t] <= jmax && bad(t))
        ++js[t];
      return js[t] <= jmax;
    };
    bool ok = true;
    for (std::size_t t = 0; t < js.size(); ++t)
      ok = ok && fix(t);
    while (ok) {
      f(perm, js);
      std::size_t t = js.size();
      ok = false;
      while (t-- > 0) {
        ++js[t];
        if (fix(t)) {
          for (std::size_t u = t + 1; u < js.size(); ++u) {
            js[u] = jmin;
            fix(u);
          }
          ok = true;
          break;
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace detail

/// [[[A_{1,n}, A_{s(2),j_2}], ...], A_{s(n-1),j_{n-1}}] over permutations s of
/// {2..n-1} and 1 <= j_t <= n with j_t != s(t); lexicographic in (s, j).
inline std::vector<PureBraidWord> brun_generators(int n) {
  if (n < 3)
    throw std::invalid_argument("brun_generators: n must be at least 3");
  std::vector<PureBraidWord> out;
  detail::for_each_slot_choice(2, n - 1, n, 0, 1, [&](const auto &perm, const auto &js) {
    PureBraidWord w = PureBraidWord::gen(n, 1, n);
    for (std::size_t t = 0; t < perm.size(); ++t)
      w = commutator(w, PureBraidWord::gen(n, perm[t], js[t]));
    out.push_back(std::move(w));
  });
  return out;
}

/// The boundary family in P_n, indexed as in the proof that these elements
/// generate: [[[A_{0,n}, A_{s(2)-1,j_2}], ...], A_{s(n)-1,j_n}] over
/// permutations s of {2..n} and 1 <= j_t <= n with j_t != s(t) - 1. The
/// statement of the result indexes by s in the permutations of n - 1 letters
/// with j_1..j_{n-1} and constrains j_t != s(t) only for 2 <= t <= n - 1;
/// that set is not enumerated here.
inline std::vector<PureBraidWord> bd_generators(int n) {
  if (n < 3)
    throw std::invalid_argument("bd_generators: n must be at least 3");
  std::vector<PureBraidWord> out;
  detail::for_each_slot_choice(2, n, n, -1, 1, [&](const auto &perm, const auto &js) {
    PureBraidWord w = PureBraidWord::gen(n, 0, n);
    for (std::size_t t = 0; t < perm.size(); ++t)
      w = commutator(w, PureBraidWord::gen(n, perm[t] - 1, js[t]));
    out.push_back(std::move(w));
  });
  return out;
}

/// The Brun_{n+1} generators whose d_0 images are bd_generators(n), in the
/// same order: those with every j_t >= 2.
inline std::vector<PureBraidWord> bd_sources(int n) {
  if (n < 3)
    throw std::invalid_argument("bd_sources: n must be at least 3");
  std::vector<PureBraidWord> out;
  const int m = n + 1;
  detail::for_each_slot_choice(2, m - 1, m, 0, 2, [&](const auto &perm, const auto &js) {
    PureBraidWord w = PureBraidWord::gen(m, 1, m);
    for (std::size_t t = 0; t < perm.size(); ++t)
      w = commutator(w, PureBraidWord::gen(m, perm[t], js[t]));
    out.push_back(std::move(w));
  });
  return out;
}

inline constexpr const char *bd_indexing_note =
    "boundary generators follow the proof's indexing (j_s != sigma(s)-1, 2 <= s <= n); the "
    "statement's indexing (j_s != sigma(s), 2 <= s <= n-1) differs in offset and range";

} // namespace hcgt::braids
