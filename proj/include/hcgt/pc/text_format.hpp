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

// Plain-text pc presentations, one relation per line:
//
//   gens 3                  number of generators (first non-comment line)
//   g1^2 = g3               power relation; declares g1 of relative order 2
//   g2^g1 = g2^-1*g3        conjugate of g2 by g1
//   g2^(g1^-1) = g2*g3      conjugate by an inverse (infinite g1 only)
//
// Generators are 1-based. Words are `id` or factors `gK` / `gK^E` joined by
// `*`, in normal form. Generators without a power line are infinite. Missing
// conjugate lines mean the pair commutes; missing inverse conjugates are
// computed. `#` starts a comment.

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcgt/pc/presentation.hpp"

namespace hcgt {

inline void write_pc(std::ostream &os, const PcPresentation &p,
                     const std::string &header = "") {
  if (!header.empty()) {
    std::istringstream hs(header);
    std::string line;
    while (std::getline(hs, line))
      os << "# " << line << '\n';
  }
  const std::size_t m = p.size();
  os << "gens " << m << '\n';
  for (std::size_t i = 0; i < m; ++i)
    if (!p.is_infinite(i))
      os << 'g' << i + 1 << '^' << p.relative_order(i) << " = "
         << word_to_string(p.power(i)) << '\n';
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!p.conj_raw(j, i).empty())
        os << 'g' << j + 1 << "^g" << i + 1 << " = " << word_to_string(p.conj_raw(j, i))
           << '\n';
      if (p.is_infinite(i) && !p.conj_inv_raw(j, i).empty())
        os << 'g' << j + 1 << "^(g" << i + 1 << "^-1) = "
           << word_to_string(p.conj_inv_raw(j, i)) << '\n';
    }
}

namespace detail {

inline std::string trim(const std::string &s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return s.substr(a, b - a);
}

struct PcParseError : std::invalid_argument {
  PcParseError(std::size_t line, const std::string &msg)
      : std::invalid_argument("pc text line " + std::to_string(line) + ": " + msg) {}
};

// "gK" or "gK^E" -> (K-1, E)
inline Letter parse_factor(const std::string &tok, std::size_t line) {
  std::string t = trim(tok);
  if (t.size() < 2 || t[0] != 'g')
    throw PcParseError(line, "bad factor '" + t + "'");
  const std::size_t caret = t.find('^');
  try {
    int g = std::stoi(t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    Exp e = caret == std::string::npos ? 1 : std::stoll(t.substr(caret + 1));
    if (g < 1)
      throw PcParseError(line, "generator index must be >= 1");
    return {g - 1, e};
  } catch (const std::logic_error &) {
    throw PcParseError(line, "bad factor '" + t + "'");
  }
}

inline PcWord parse_word(const std::string &text, std::size_t line) {
  std::string t = trim(text);
  if (t == "id" || t == "1")
    return {};
  PcWord w;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, '*'))
    w.push_back(parse_factor(tok, line));
  return w;
}

} // namespace detail

inline PcPresentation read_pc(std::istream &is) {
  struct Rel {
    std::size_t line;
    enum { Power, Conj, ConjInv } kind;
    int j, i;
    Exp order;
    PcWord rhs;
  };
  std::vector<Rel> rels;
  long long m = -1;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    if (m < 0) {
      if (line.rfind("gens", 0) != 0)
        throw detail::PcParseError(lineno, "expected 'gens <m>'");
      try {
        m = std::stoll(line.substr(4));
      } catch (const std::logic_error &) {
        throw detail::PcParseError(lineno, "bad generator count");
      }
      if (m < 0)
        throw detail::PcParseError(lineno, "bad generator count");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw detail::PcParseError(lineno, "expected '='");
    const std::string lhs = detail::trim(line.substr(0, eq));
    PcWord rhs = detail::parse_word(line.substr(eq + 1), lineno);
    const std::size_t caret = lhs.find('^');
    if (caret == std::string::npos)
      throw detail::PcParseError(lineno, "left side must be gK^E or gK^gI");
    Letter base = detail::parse_factor(lhs.substr(0, caret), lineno);
    std::string ex = detail::trim(lhs.substr(caret + 1));
    if (!ex.empty() && ex[0] == '(') {
      if (ex.back() != ')')
        throw detail::PcParseError(lineno, "unbalanced parenthesis");
      Letter by = detail::parse_factor(ex.substr(1, ex.size() - 2), lineno);
      if (by.exp != -1)
        throw detail::PcParseError(lineno, "only (gI^-1) conjugators are allowed");
      rels.push_back({lineno, Rel::ConjInv, base.gen, by.gen, 0, std::move(rhs)});
    } else if (!ex.empty() && ex[0] == 'g') {
      Letter by = detail::parse_factor(ex, lineno);
      if (by.exp != 1)
        throw detail::PcParseError(lineno, "conjugator must be a generator");
      rels.push_back({lineno, Rel::Conj, base.gen, by.gen, 0, std::move(rhs)});
    } else {
      Exp o;
      try {
        o = std::stoll(ex);
      } catch (const std::logic_error &) {
        throw detail::PcParseError(lineno, "bad exponent");
      }
      if (o < 2)
        throw detail::PcParseError(lineno, "relative order must be >= 2");
      rels.push_back({lineno, Rel::Power, base.gen, base.gen, o, std::move(rhs)});
    }
  }
  if (m < 0)
    throw std::invalid_argument("pc text: missing 'gens' line");

  std::vector<Exp> orders(static_cast<std::size_t>(m), 0);
  for (const auto &r : rels) {
    if (r.j >= m || r.i >= m)
      throw detail::PcParseError(r.line, "generator index out of range");
    if (r.kind == Rel::Power) {
      if (orders[static_cast<std::size_t>(r.j)] != 0)
        throw detail::PcParseError(r.line, "duplicate power relation");
      orders[static_cast<std::size_t>(r.j)] = r.order;
    }
  }
  PcPresentation p(orders);
  bool missing_inverse = false;
  std::map<std::pair<int, int>, bool> have_inv;
  for (const auto &r : rels) {
    try {
      if (r.kind == Rel::Power)
        p.set_power(static_cast<std::size_t>(r.j), r.rhs);
      else if (r.kind == Rel::Conj)
        p.set_conj(static_cast<std::size_t>(r.j), static_cast<std::size_t>(r.i), r.rhs);
      else {
        p.set_conj_inv(static_cast<std::size_t>(r.j), static_cast<std::size_t>(r.i), r.rhs);
        have_inv[{r.j, r.i}] = true;
      }
    } catch (const std::invalid_argument &e) {
      throw detail::PcParseError(r.line, e.what());
    }
  }
  for (const auto &r : rels)
    if (r.kind == Rel::Conj && p.is_infinite(static_cast<std::size_t>(r.i)) &&
        !have_inv.count({r.j, r.i}))
      missing_inverse = true;
  if (missing_inverse)
    p.complete_conj_inv();
  return p;
}

inline PcPresentation read_pc_string(const std::string &text) {
  std::istringstream is(text);
  return read_pc(is);
}

inline std::string write_pc_string(const PcPresentation &p) {
  std::ostringstream os;
  write_pc(os, p);
  return os.str();
}

} // namespace hcgt
