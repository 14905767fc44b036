// SPDX-License-Identifier: Apache-2.0

// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "../common/cases.hpp"
#include "../common/scenarios.hpp"
#include "treedoc/bench/bench.hpp"
#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/corpus/faults.hpp"
#include "treedoc/corpus/records.hpp"
#include "treedoc/latex/exporter.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/latex/merge.hpp"
#include "treedoc/metrics/entropy.hpp"
#include "treedoc/metrics/multiplicity.hpp"
#include "treedoc/metrics/scoring.hpp"
#include "treedoc/resolver/resolver.hpp"
#include "treedoc/serializer/sexp.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace {

using namespace treedoc;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome integral_golden() {
  const auto t0 = Clock::now();
  const auto r = latex::import_latex(testing::kIntegralSource);
  const std::string got = write_sexp_document(r.document);
  const double t = seconds_since(t0);
  const bool ok = got == testing::kIntegralSexp && r.diagnostics.empty() && t < 1.0;
  return {ok, ok ? fmt("byte-exact in %.3f s", t) : "got " + got};
}

Outcome equivalence_table() {
  std::size_t pass = 0;
  std::string first_bad;
  for (const auto& p : testing::kEquivalencePairs) {
    const auto a = latex::import_formula(p.left);
    const auto b = latex::import_formula(p.right);
    if (a.diagnostics.empty() && b.diagnostics.empty() && struct_eq(a.tree, b.tree)) {
      ++pass;
    } else if (first_bad.empty()) {
      first_bad = std::string(p.left) + " vs " + std::string(p.right);
    }
  }
  const bool ok = pass == testing::kEquivalencePairs.size();
  return {ok, std::to_string(pass) + "/30 pairs struct_eq" + (ok ? "" : "; first failure " + first_bad)};
}

Outcome round_trips() {
  const auto t0 = Clock::now();
  corpus::GenParams p;
  p.seed = 42;
  p.count = 1000;
  const auto records = corpus::gen_corpus(p);
  std::size_t pass = 0;
  std::size_t variants = 0;
  std::set<corpus::FormulaCategory> cats;
  std::string first_bad;
  for (const auto& r : records) {
    cats.insert(r.category);
    bool ok = struct_eq(read_sexp(write_sexp(r.tree)), r.tree) && struct_eq(read_tmu_node(write_tmu_node(r.tree)), r.tree);
    const Node& content = r.tree.child(0);
    const auto back = latex::import_formula(latex::export_formula(content));
    ok = ok && back.diagnostics.empty() && struct_eq(back.tree, content);
    for (const auto& v : r.latex_variants) {
      const auto vb = latex::import_formula(v);
      ok = ok && vb.diagnostics.empty() && struct_eq(vb.tree, content);
      ++variants;
    }
    if (ok) {
      ++pass;
    } else if (first_bad.empty()) {
      first_bad = r.id;
    }
  }
  const double t = seconds_since(t0);
  const bool ok = pass == records.size() && cats.size() == 10 && t < 30.0;
  return {ok, fmt("%.0f/1000 formulas (%.0f variants) in %.2f s", static_cast<double>(pass),
                  static_cast<double>(variants), t) +
                  (first_bad.empty() ? "" : "; first failure " + first_bad)};
}

Outcome associate_fidelity() {
  Document d = testing::associate_document();
  const auto r = resolve_full(d);
  d.aux() = r.table;
  const std::string tmu = write_tmu(d);
  const std::string want = "<associate|sec:tree-struc-on-mogan|<tuple|5.1|13>>";
  std::string line;
  for (std::size_t pos = 0, next; pos < tmu.size(); pos = next + 1) {
    next = tmu.find('\n', pos);
    const std::string l = tmu.substr(pos, next - pos);
    if (l.rfind("<associate|sec:tree-struc-on-mogan|", 0) == 0) line = l;
  }
  return {line == want, "associate line " + (line.empty() ? std::string("missing") : line)};
}

Outcome incremental_equals_full() {
  const auto t0 = Clock::now();
  std::size_t steps = 0;
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Document d = corpus::gen_document(corpus::GenParams{corpus::derive_seed(7, i)}, 12, 2);
    const auto check = testing::check_script(d, bench::gen_edit_script(i, 6));
    steps += check.steps;
    mismatches += check.mismatches;
  }
  const double t = seconds_since(t0);
  const bool ok = mismatches == 0 && t < 60.0;
  return {ok, fmt("200 scripts, %.0f edits, %.0f mismatches", static_cast<double>(steps), static_cast<double>(mismatches)) +
                  fmt(" in %.2f s", t)};
}

Outcome locality() {
  const Document d = corpus::gen_document(corpus::GenParams{0}, 1000, 2);
  bench::EditStep step;
  step.kind = bench::EditStep::Kind::kEditText;
  step.a = 500;
  const auto edits = bench::materialize(step, d.root());
  if (edits.size() != 1) return {false, "text edit did not materialize as one edit"};
  const Document e = apply_edit(d, edits[0]);
  const AuxTable before = resolve_full(d).table;

  std::vector<double> full_t, inc_t;
  ResolveResult inc;
  for (int run = 0; run < 5; ++run) {
    auto t0 = Clock::now();
    const auto full = resolve_full(e);
    full_t.push_back(seconds_since(t0));
    t0 = Clock::now();
    inc = resolve_incremental(e, before, edits[0]);
    inc_t.push_back(seconds_since(t0));
    if (!(full.table == inc.table)) return {false, "incremental table differs from full"};
  }
  std::sort(full_t.begin(), full_t.end());
  std::sort(inc_t.begin(), inc_t.end());
  const double full_med = full_t[2];
  const double inc_med = std::max(inc_t[2], 1e-9);
  const double touched = 100.0 * static_cast<double>(inc.stats.touched_nodes) / static_cast<double>(inc.stats.total_nodes);
  const bool ok = touched < 5.0 && full_med >= 5.0 * inc_med;
  return {ok, fmt("touched %.4f%% of nodes, full %.6f s vs incremental ", touched, full_med) +
                  fmt("%.6f s (%.0fx)", inc_med, full_med / inc_med)};
}

// The faulty parse equals the clean parse with the subtree at the
// diagnostic's anchor swapped in.
bool confined(const Node& clean, const Node& faulty, const Path& anchor) {
  if (anchor.empty()) return true;
  if (!path_valid(clean, anchor) || !path_valid(faulty, anchor)) return false;
  const Node patched =
      apply_edit(clean, EditRecord::replace(anchor, subtree_at(clean, anchor), subtree_at(faulty, anchor)));
  return struct_eq(patched, faulty);
}

Outcome fault_localization() {
  const auto suite = corpus::fault_suite(corpus::GenParams{0});
  std::size_t pass = 0;
  std::map<FaultKind, int> counts;
  std::string first_bad;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& s = suite[i];
    ++counts[s.spec.kind];
    const auto clean = latex::import_latex(s.clean);
    const auto faulty = latex::import_latex(s.faulty);
    std::vector<Diagnostic> diags = faulty.diagnostics;
    if (s.spec.kind == FaultKind::kUndefinedCrossReference) {
      const auto r = resolve_full(faulty.document);
      diags.insert(diags.end(), r.diagnostics.begin(), r.diagnostics.end());
    }
    const bool ok = clean.diagnostics.empty() && diags.size() == 1 && diags[0].code == s.spec.kind &&
                    confined(clean.document.root(), faulty.document.root(), diags[0].anchor);
    if (ok) {
      ++pass;
    } else if (first_bad.empty()) {
      first_bad = "sample " + std::to_string(i) + " (" + std::string(to_string(s.spec.kind)) + ")";
    }
  }
  bool counts_ok = suite.size() == 20;
  for (const auto& [kind, n] : corpus::kFaultSuiteCounts) counts_ok = counts_ok && counts[kind] == n;
  const bool ok = counts_ok && pass == suite.size();
  return {ok, std::to_string(pass) + "/20 samples with one diagnostic of the planted kind, confined to its anchor" +
                  (first_bad.empty() ? "" : "; first failure " + first_bad)};
}

Outcome entropy_direction() {
  corpus::GenParams p;
  p.seed = 42;
  p.count = 1000;
  const auto records = corpus::gen_corpus(p);
  const double tex = metrics::token_entropy(metrics::corpus_streams(records, metrics::Format::kTex), 2).bits_per_token;
  const double tmu = metrics::token_entropy(metrics::corpus_streams(records, metrics::Format::kTmu), 2).bits_per_token;
  const auto m = metrics::class_multiplicity(records);
  const bool ok = tex > tmu && m.tmu.mean_forms_per_class == 1.0 && m.tmu.max_forms == 1;
  return {ok, fmt("order-2 bits/token tex %.3f > tmu %.3f; tmu forms per class %.3f", tex, tmu,
                  m.tmu.mean_forms_per_class) +
                  fmt(" (tex %.3f)", m.tex.mean_forms_per_class)};
}

Outcome scoring_table() {
  std::size_t pass = 0;
  for (const auto& c : testing::kScoreCases) {
    const int got = c.kind == testing::ScoreKind::kItem ? metrics::score_item(c.input) : metrics::score_merge(c.input);
    if (got == c.expected) ++pass;
  }
  return {pass == testing::kScoreCases.size(), std::to_string(pass) + "/12 hand-computed cases"};
}

Outcome merge_pair() {
  const auto pair = corpus::gen_theorem_proof_pair(corpus::GenParams{0}, 10);
  const auto lead = latex::import_latex(pair.lead);
  const auto follower = latex::import_latex(pair.follower);
  const auto merged = latex::merge_documents(lead.document, follower.document);
  const Node& root = merged.document.root();
  std::size_t adjacent = 0;
  std::size_t proofs = 0;
  for (std::size_t i = 0; i < root.arity(); ++i) {
    if (!root.child(i).has_label("proof")) continue;
    ++proofs;
    // The proof cites its theorem first; the block before it must carry that label.
    const std::string sexp = write_sexp(root.child(i));
    const auto at = sexp.find("(reference \"");
    if (i == 0 || at == std::string::npos) continue;
    const std::string target = sexp.substr(at + 12, sexp.find('"', at + 12) - at - 12);
    if (is_theorem_like(root.child(i - 1).label()) &&
        write_sexp(root.child(i - 1)).find("(label \"" + target + "\")") != std::string::npos) {
      ++adjacent;
    }
  }
  const auto resolved = resolve_full(merged.document);
  const std::string plain = render_plain(merged.document, resolved.table);
  const std::string tex = latex::export_latex(merged.document);
  const auto lead_alias = lead.document.style().alias_for("theorem");
  const auto follower_alias = follower.document.style().alias_for("theorem");
  const bool style_ok = lead_alias && follower_alias && *lead_alias != *follower_alias &&
                        tex.find("\\begin{" + *lead_alias + "}") != std::string::npos &&
                        tex.find("\\begin{" + *follower_alias + "}") == std::string::npos;
  const bool ok = lead.diagnostics.empty() && follower.diagnostics.empty() && merged.diagnostics.empty() &&
                  proofs == 10 && adjacent == 10 && plain.find("??") == std::string::npos && style_ok;
  return {ok, std::to_string(adjacent) + "/10 proofs under their theorems, " +
                  (plain.find("??") == std::string::npos ? "no" : "some") + " unresolved references, " +
                  (style_ok ? "lead" : "wrong") + " environment names"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"integral listing golden", integral_golden},
      {"canonical equivalence table", equivalence_table},
      {"round-trip suite", round_trips},
      {"associate fidelity", associate_fidelity},
      {"incremental equals full", incremental_equals_full},
      {"locality", locality},
      {"fault localization", fault_localization},
      {"entropy direction", entropy_direction},
      {"scoring formulas", scoring_table},
      {"merge", merge_pair},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
