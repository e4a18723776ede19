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

// hcgt: homotopy centers, braid generator families, and presentation export.
//
// Exit codes: 0 ok, 1 usage, 2 resource limit, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcgt/braids.hpp"
#include "hcgt/budget.hpp"
#include "hcgt/homotopy/pipeline.hpp"
#include "hcgt/homotopy/s2_emit.hpp"
#include "hcgt/log.hpp"
#include "hcgt/pc/consistency.hpp"
#include "hcgt/pc/text_format.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hcgt;

enum Exit : int { kOk = 0, kUsage = 1, kResource = 2, kVerify = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::int64_t> a;
  int n = 0;
  int class_bound = 0;
  bool with_oracle = false;
  bool verify = false;
  unsigned jobs = 1;
  std::size_t limit_hirsch = 0;
  std::size_t limit_gens = 0;
  double time_budget = 0;
  std::string output;
  std::string format = "json";
  std::string word;
};

json integer_json(const Integer &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

json torsion_json(const AbelianInvariants &inv) {
  json out = json::array();
  for (const auto &t : inv.torsion)
    out.push_back(integer_json(t));
  return out;
}

std::string invariants_text(const AbelianInvariants &inv) {
  std::string s;
  for (const auto &t : inv.torsion)
    s += (s.empty() ? "Z/" : " x Z/") + t.str();
  for (std::size_t k = 0; k < inv.free_rank; ++k)
    s += s.empty() ? "Z" : " x Z";
  return s.empty() ? "1" : s;
}

// Writes to -o when given, stdout otherwise.
void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.output);
  if (!os)
    throw UsageError("cannot open " + cfg.output + " for writing");
  os << text;
}

FiniteAbelianGroup group_from(const RunConfig &cfg) {
  if (cfg.a.empty())
    throw UsageError("--A is required");
  for (auto d : cfg.a)
    if (d < 2)
      throw UsageError("--A entries must be at least 2");
  return FiniteAbelianGroup::canonical(cfg.a);
}

void check_n(const RunConfig &cfg, int lo, int hi) {
  if (cfg.n < lo || cfg.n > hi)
    throw UsageError("--n must be between " + std::to_string(lo) + " and " + std::to_string(hi));
}

struct Progress {
  int cls = 0;
  std::size_t hirsch = 0;
};

// Builds J_n(A), remembering the last finished class for abort reports.
NilStage build(const RunConfig &cfg, const FiniteAbelianGroup &a, Progress &prog) {
  JnOptions opt;
  opt.class_bound = cfg.class_bound;
  opt.nq.max_hirsch = cfg.limit_hirsch;
  opt.nq.max_gens = cfg.limit_gens;
  opt.sym.jobs = cfg.jobs;
  const TnContext ctx(a, cfg.n);
  return build_jn(ctx, opt, [&](const NilStage &s) {
    prog.cls = s.cls;
    prog.hirsch = s.pc.hirsch_length();
    log().info("class {} done: {} generators, Hirsch length {}", s.cls, s.pc.size(), prog.hirsch);
  });
}

int cmd_homotopy(const RunConfig &cfg) {
  const FiniteAbelianGroup a = group_from(cfg);
  check_n(cfg, 1, 20);
  if (cfg.format != "json" && cfg.format != "text" && cfg.format != "pc")
    throw UsageError("--format must be json, text or pc");
  const int c = cfg.class_bound ? cfg.class_bound : default_class_bound(cfg.n);
  Progress prog;
  json head;
  head["A"] = a.factors();
  head["n"] = cfg.n;
  head["class_bound"] = c;
  try {
    const NilStage jn = build(cfg, a, prog);
    const AbelianInvariants z = center_invariants(jn.pc);
    std::optional<AbelianInvariants> oracle;
    if (cfg.n == 2)
      oracle = tensor_oracle(a);
    const bool consistent = !cfg.verify || is_consistent(jn.pc);
    const bool oracle_ok = !(cfg.with_oracle && oracle) || *oracle == z;

    json r = head;
    r["hirsch_length"] = jn.pc.hirsch_length();
    r["center_invariants"] = torsion_json(z);
    r["center_free_rank"] = z.free_rank;
    r["oracle_invariants"] = oracle ? torsion_json(*oracle) : json(nullptr);
    r["outside_theorem_scope"] = cfg.n < 2;

    if (cfg.format == "json") {
      emit(cfg, r.dump(2) + "\n");
    } else if (cfg.format == "pc") {
      std::ostringstream os;
      write_pc(os, jn.pc,
               "J_" + std::to_string(cfg.n) + "(" + a.to_string() + "), class bound " +
                   std::to_string(c) + "\ncenter " + invariants_text(z));
      emit(cfg, os.str());
    } else {
      std::ostringstream os;
      os << "group        J_" << cfg.n << "(" << a.to_string() << ")\n"
         << "class bound  " << c << "\n"
         << "hirsch       " << jn.pc.hirsch_length() << "\n"
         << "generators   " << jn.pc.size() << "\n"
         << "center       " << invariants_text(z) << "\n";
      if (oracle)
        os << "oracle       " << invariants_text(*oracle) << "\n";
      if (cfg.n < 2)
        os << "note         n = 1 lies outside the range of the theorem\n";
      emit(cfg, os.str());
    }
    if (!consistent) {
      std::cerr << "hcgt: presentation failed the consistency check\n";
      return kVerify;
    }
    if (!oracle_ok) {
      std::cerr << "hcgt: center " << invariants_text(z) << " differs from oracle "
                << invariants_text(*oracle) << "\n";
      return kVerify;
    }
    return kOk;
  } catch (const ResourceLimitError &e) {
    json r = head;
    r["aborted"] = true;
    r["reason"] = e.what();
    r["last_completed_class"] = std::max(prog.cls, e.last_completed_class());
    r["hirsch_length"] = std::max(prog.hirsch, e.hirsch_length());
    std::cout << r.dump(2) << "\n";
    std::cerr << "hcgt: " << e.what() << "\n";
    return kResource;
  } catch (const std::overflow_error &e) {
    json r = head;
    r["aborted"] = true;
    r["reason"] = e.what();
    r["last_completed_class"] = prog.cls;
    r["hirsch_length"] = prog.hirsch;
    std::cout << r.dump(2) << "\n";
    std::cerr << "hcgt: " << e.what() << "\n";
    return kResource;
  }
}

braids::BraidWord parse_sigma_or_pure(int n, const std::string &w, bool &from_pure) {
  from_pure = w.find('A') != std::string::npos;
  if (from_pure)
    return braids::to_sigma(braids::PureBraidWord::parse(n, w));
  return braids::BraidWord::parse(n, w);
}

int report_braid(const RunConfig &cfg, const json &r, const std::vector<std::string> &lines,
                 bool failed) {
  if (cfg.format == "json") {
    emit(cfg, r.dump(2) + "\n");
  } else if (cfg.format == "text") {
    std::string s;
    for (const auto &l : lines)
      s += l + "\n";
    emit(cfg, s);
  } else {
    throw UsageError("--format must be json or text for braid commands");
  }
  return failed ? kVerify : kOk;
}

int cmd_braid(const std::string &sub, const RunConfig &cfg) {
  using namespace hcgt::braids;
  std::vector<std::string> lines;
  json r;
  r["n"] = cfg.n;
  if (sub == "brun-gens" || sub == "bd-gens") {
    check_n(cfg, 3, sub == "brun-gens" ? 6 : 5);
    const bool bd = sub == "bd-gens";
    const auto gens = bd ? bd_generators(cfg.n) : brun_generators(cfg.n);
    std::vector<std::string> failures;
    std::size_t checked = 0;
    if (cfg.verify) {
      const auto src = bd ? bd_sources(cfg.n) : std::vector<PureBraidWord>{};
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ++checked;
        if (!is_brunnian(gens[k]))
          failures.push_back(gens[k].to_string() + ": not Brunnian");
        if (bd && !(d0(src[k]) == gens[k]))
          failures.push_back(gens[k].to_string() + ": not the d0 image of " + src[k].to_string());
      }
    }
    r["family"] = bd ? "boundary" : "brunnian";
    r["count"] = gens.size();
    json g = json::array();
    for (const auto &w : gens) {
      g.push_back(w.to_string());
      lines.push_back(w.to_string());
    }
    r["generators"] = g;
    if (bd)
      r["note"] = bd_indexing_note;
    r["checked"] = checked;
    r["failures"] = failures;
    for (const auto &f : failures)
      lines.push_back("FAIL " + f);
    return report_braid(cfg, r, lines, !failures.empty());
  }
  if (sub == "verify-delta") {
    check_n(cfg, 3, 8);
    const DeltaReport d = verify_delta(cfg.n);
    r["checked"] = d.checked;
    r["failures"] = d.failures;
    lines.push_back("checked " + std::to_string(d.checked));
    for (const auto &f : d.failures)
      lines.push_back("FAIL " + f);
    return report_braid(cfg, r, lines, !d.ok());
  }
  if (sub == "check-brunnian") {
    check_n(cfg, 1, 64);
    if (cfg.word.empty())
      throw UsageError("--word is required");
    bool from_pure = false;
    const BraidWord b = parse_sigma_or_pure(cfg.n, cfg.word, from_pure);
    const bool pure = b.is_pure();
    const bool brun = pure && is_brunnian(b);
    r["word"] = cfg.word;
    r["pure"] = pure;
    r["trivial"] = is_trivial(b);
    r["brunnian"] = brun;
    lines.push_back(std::string(brun ? "brunnian" : "not brunnian") + (pure ? "" : " (not pure)"));
    return report_braid(cfg, r, lines, false);
  }
  throw UsageError("unknown braid command " + sub);
}

int cmd_emit(const std::string &sub, const RunConfig &cfg) {
  if (sub == "jn-pc") {
    const FiniteAbelianGroup a = group_from(cfg);
    check_n(cfg, 1, 20);
    const int c = cfg.class_bound ? cfg.class_bound : default_class_bound(cfg.n);
    Progress prog;
    try {
      const NilStage jn = build(cfg, a, prog);
      std::ostringstream os;
      write_pc(os, jn.pc,
               "J_" + std::to_string(cfg.n) + "(" + a.to_string() + "), class bound " +
                   std::to_string(c) + "\ngenerators 1.." + std::to_string(jn.top()) +
                   " are the images of the factors of T");
      emit(cfg, os.str());
      if (cfg.verify) {
        const PcPresentation back = read_pc_string(os.str());
        bool ok = back.size() == jn.pc.size() && is_consistent(back);
        for (std::size_t g = 0; ok && g < back.size(); ++g)
          ok = back.relative_order(g) == jn.pc.relative_order(g);
        if (!ok) {
          std::cerr << "hcgt: emitted presentation does not round-trip\n";
          return kVerify;
        }
      }
      return kOk;
    } catch (const ResourceLimitError &e) {
      std::cerr << "hcgt: " << e.what() << " (last completed class "
                << std::max(prog.cls, e.last_completed_class()) << ", Hirsch length "
                << std::max(prog.hirsch, e.hirsch_length()) << ")\n";
      return kResource;
    } catch (const std::overflow_error &e) {
      std::cerr << "hcgt: " << e.what() << " (last completed class " << prog.cls
                << ", Hirsch length " << prog.hirsch << ")\n";
      return kResource;
    }
  }
  if (sub == "s2-data") {
    check_n(cfg, 3, 9);
    const S2Description d = s2_emit(cfg.n);
    if (cfg.format == "text") {
      std::ostringstream os;
      os << "# " << S2Description::notice << "\n";
      for (std::size_t k = 0; k < d.families.size(); ++k) {
        os << "R" << k + 1 << " =";
        for (const auto &g : d.families[k])
          os << " " << g;
        os << "\n";
      }
      for (const auto &b : d.brackets)
        os << b << "\n";
      emit(cfg, os.str());
    } else if (cfg.format == "json") {
      json r;
      r["n"] = d.n;
      r["notice"] = S2Description::notice;
      r["left"] = d.left;
      r["right"] = d.right;
      r["families"] = d.families;
      r["brackets"] = d.brackets;
      emit(cfg, r.dump(2) + "\n");
    } else {
      throw UsageError("--format must be json or text for s2-data");
    }
    return kOk;
  }
  throw UsageError("unknown emit command " + sub);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Centers of nilpotent quotients of free products, and braid generator families"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *s) {
    s->add_option("--n", cfg.n, "simplicial degree or number of strands")->required();
    s->add_option("-o", cfg.output, "output file (default stdout)");
    s->add_option("--format", cfg.format, "json, text or pc")
        ->check(CLI::IsMember({"json", "text", "pc"}));
  };
  auto add_group = [&](CLI::App *s) {
    s->add_option("--A", cfg.a, "invariant factors of A, comma separated")
        ->delimiter(',')
        ->required();
    s->add_option("--class-bound", cfg.class_bound, "override the class bound (exploratory)")
        ->check(CLI::PositiveNumber);
    s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--limit-hirsch", cfg.limit_hirsch, "abort above this Hirsch length")
        ->check(CLI::PositiveNumber);
    s->add_option("--limit-gens", cfg.limit_gens, "abort above this many generators")
        ->check(CLI::PositiveNumber);
    s->add_option("--time-budget", cfg.time_budget, "wall-clock budget in seconds")
        ->check(CLI::PositiveNumber);
  };

  auto *homotopy = app.add_subcommand("homotopy", "center of J_n(A)");
  add_common(homotopy);
  add_group(homotopy);
  homotopy->add_flag("--with-oracle", cfg.with_oracle, "fail unless the center equals A (x) A");
  homotopy->add_flag("--verify", cfg.verify, "check consistency of the presentation");

  auto *braid = app.add_subcommand("braid", "pure braid generator families");
  braid->require_subcommand(1);
  const std::pair<const char *, const char *> braid_cmds[] = {
      {"brun-gens", "generators of the Brunnian braids on n strands"},
      {"bd-gens", "boundary generators in P_n"},
      {"verify-delta", "check the face identities on P_n"},
      {"check-brunnian", "test a braid word for Brunnian membership"}};
  for (const auto &[name, help] : braid_cmds) {
    auto *s = braid->add_subcommand(name, help);
    add_common(s);
    if (std::string(name) == "brun-gens" || std::string(name) == "bd-gens")
      s->add_flag("--verify", cfg.verify, "check every generator");
    if (std::string(name) == "check-brunnian")
      s->add_option("--word", cfg.word, "sigma word (s1 s2^-1) or A-word (A[1,3]^-1)")
          ->required();
  }

  auto *emit_cmd = app.add_subcommand("emit", "write presentations and descriptions");
  emit_cmd->require_subcommand(1);
  auto *jn_pc = emit_cmd->add_subcommand("jn-pc", "pc presentation of J_n(A)");
  add_common(jn_pc);
  add_group(jn_pc);
  jn_pc->add_flag("--verify", cfg.verify, "re-read and check the written presentation");
  auto *s2 = emit_cmd->add_subcommand("s2-data", "symbolic description over Z^n * Z^n");
  add_common(s2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (cfg.time_budget > 0)
    Budget::set(cfg.time_budget);
  try {
    if (homotopy->parsed())
      return cmd_homotopy(cfg);
    if (braid->parsed())
      return cmd_braid(braid->get_subcommands().front()->get_name(), cfg);
    return cmd_emit(emit_cmd->get_subcommands().front()->get_name(), cfg);
  } catch (const UsageError &e) {
    std::cerr << "hcgt: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "hcgt: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range &e) {
    std::cerr << "hcgt: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError &e) {
    std::cerr << "hcgt: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc &) {
    std::cerr << "hcgt: out of memory\n";
    return kResource;
  } catch (const AlgebraError &e) {
    std::cerr << "hcgt: internal check failed: " << e.what() << "\n";
    return kVerify;
  }
}
