// SPDX-License-Identifier: Apache-2.0

#include "treedoc/bench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "treedoc/corpus/rng.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/exporter.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
  const auto start = Clock::now();
  f();
  return seconds_since(start);
}

void collect_paths(const Node& n, Path& at, std::string_view label, std::vector<Path>& out) {
  if (n.is_leaf()) return;
  if (n.has_label(label)) {
    out.push_back(at);
    return;
  }
  for (std::size_t i = 0; i < n.arity(); ++i) {
    at = at.child(i);
    collect_paths(n.child(i), at, label, out);
    at = at.parent();
  }
}

std::vector<Path> paths_of(const Node& root, std::string_view label) {
  std::vector<Path> out;
  Path at;
  collect_paths(root, at, label, out);
  return out;
}

// Text leaves directly inside top-level paragraphs.
std::vector<Path> paragraph_leaves(const Node& root) {
  std::vector<Path> out;
  for (std::size_t i = 0; i < root.arity(); ++i) {
    const Node& b = root.child(i);
    if (b.is_leaf()) {
      out.push_back(Path{i});
    } else if (b.has_label("concat")) {
      for (std::size_t k = 0; k < b.arity(); ++k) {
        if (b.child(k).is_leaf()) out.push_back(Path{i, k});
      }
    }
  }
  return out;
}

void finish(BenchReport& r) {
  r.trials = static_cast<int>(r.samples.size());
  for (const auto& s : r.samples) {
    r.t_compiling += s.t_compiling;
    r.t_rendering += s.t_rendering;
    r.t_io += s.t_io;
  }
  if (!r.samples.empty()) {
    const auto n = static_cast<double>(r.samples.size());
    r.t_compiling /= n;
    r.t_rendering /= n;
    r.t_io /= n;
  }
}

ResolveOptions resolve_options(const BenchOptions& o) {
  ResolveOptions r;
  r.parallel = o.parallel;
  return r;
}

}  // namespace

std::string_view to_string(EditStep::Kind kind) {
  switch (kind) {
    case EditStep::Kind::kAddSection: return "add-section";
    case EditStep::Kind::kAddFigure: return "add-figure";
    case EditStep::Kind::kRelabel: return "relabel";
    case EditStep::Kind::kMove: return "move";
    case EditStep::Kind::kEditText: return "edit-text";
  }
  return "edit-text";
}

EditScript gen_edit_script(std::uint64_t seed, int steps) {
  corpus::SplitMix64 rng(corpus::derive_seed(seed, 0x65646974ULL));
  EditScript script;
  for (int i = 0; i < steps; ++i) {
    EditStep s;
    s.kind = static_cast<EditStep::Kind>(rng.below(5));
    s.a = static_cast<std::size_t>(rng.next() >> 16);
    s.b = static_cast<std::size_t>(rng.next() >> 16);
    s.tag = std::to_string(seed) + "." + std::to_string(i);
    script.steps.push_back(std::move(s));
  }
  return script;
}

std::vector<EditRecord> materialize(const EditStep& step, const Node& root) {
  const std::size_t n = root.arity();
  switch (step.kind) {
    case EditStep::Kind::kAddSection: {
      Node section = make_node(
          "section", {make_node("concat", {Node("Inserted " + step.tag), make_node("label", {Node("new:" + step.tag)})})});
      return {EditRecord::insert(Path{step.a % (n + 1)}, std::move(section))};
    }
    case EditStep::Kind::kAddFigure: {
      Node figure = make_node("figure", {make_node("label", {Node("fig:new:" + step.tag)})});
      return {EditRecord::insert(Path{step.a % (n + 1)}, std::move(figure))};
    }
    case EditStep::Kind::kRelabel: {
      const auto refs = paths_of(root, "reference");
      const auto labels = paths_of(root, "label");
      if (refs.empty() || labels.empty()) throw Error("relabel: the document has no reference or no label");
      const Path& at = refs[step.a % refs.size()];
      const Node target = subtree_at(root, labels[step.b % labels.size()]).child(0);
      return {EditRecord::replace(at, subtree_at(root, at), make_node("reference", {target}))};
    }
    case EditStep::Kind::kMove: {
      if (n < 2) throw Error("move: the document has fewer than two blocks");
      const std::size_t from = step.a % n;
      const std::size_t to = step.b % (n - 1);
      const Node block = root.child(from);
      return {EditRecord::remove(Path{from}, block), EditRecord::insert(Path{to}, block)};
    }
    case EditStep::Kind::kEditText: {
      const auto leaves = paragraph_leaves(root);
      if (leaves.empty()) throw Error("edit-text: the document has no paragraph text");
      const Path& at = leaves[step.a % leaves.size()];
      const Node old = subtree_at(root, at);
      return {EditRecord::replace(at, old, Node(old.text() + " Revised."))};
    }
  }
  return {};
}

BenchReport run_full(const Document& doc, int trials, const BenchOptions& options, const std::string& doc_id) {
  if (trials < 1) throw Error("run_full: trials must be at least 1");
  const std::string source = latex::export_latex(doc);
  BenchReport report;
  report.doc_id = doc_id;
  report.mode = "full";
  for (int t = 0; t <= trials; ++t) {
    TrialTimes s;
    Document imported;
    s.t_compiling = timed([&] { imported = latex::import_latex(source).document; });
    ResolveResult resolved;
    s.t_rendering = timed([&] { resolved = resolve_full(imported, options.layout, resolve_options(options)); });
    imported.aux() = resolved.table;
    s.t_io = timed([&] {
      const std::string text = write_tmu(imported);
      const Document back = read_tmu(text);
      if (back.root().size() != imported.root().size()) throw Error("run_full: tmu round trip lost nodes");
    });
    if (t == 0) continue;  // warm-up
    report.touched = resolved.stats;
    report.samples.push_back(s);
  }
  finish(report);
  return report;
}

std::vector<BenchReport> run_incremental(const Document& doc, const EditScript& script, int trials,
                                         const BenchOptions& options, const std::string& doc_id) {
  if (trials < 1) throw Error("run_incremental: trials must be at least 1");
  std::vector<BenchReport> out;
  Document current = doc;
  AuxTable table = resolve_full(current, options.layout, resolve_options(options)).table;
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    std::vector<EditRecord> edits;
    try {
      edits = materialize(script.steps[k], current.root());
    } catch (const Error& e) {
      throw Error("edit script step " + std::to_string(k) + " is inapplicable: " + e.what());
    }
    BenchReport report;
    report.doc_id = doc_id;
    report.mode = "incremental";
    report.step = static_cast<int>(k);
    Document next;
    AuxTable next_table;
    for (int t = 0; t <= trials; ++t) {
      TrialTimes s;
      TouchStats touched{0, 0, 0};
      Document d = current;
      AuxTable tab = table;
      for (const auto& e : edits) {
        try {
          s.t_compiling += timed([&] { d = apply_edit(d, e); });
        } catch (const Error& err) {
          throw Error("edit script step " + std::to_string(k) + " is inapplicable: " + err.what());
        }
        ResolveResult r;
        s.t_rendering += timed([&] { r = resolve_incremental(d, tab, e, options.layout); });
        tab = std::move(r.table);
        touched.touched_nodes += r.stats.touched_nodes;
        touched.recomputed_refs += r.stats.recomputed_refs;
        touched.total_nodes = r.stats.total_nodes;
      }
      next = std::move(d);
      next_table = std::move(tab);
      if (t == 0) continue;  // warm-up
      report.touched = touched;
      report.samples.push_back(s);
    }
    if (options.verify) {
      const ResolveResult full = resolve_full(next, options.layout, resolve_options(options));
      if (!(full.table == next_table)) {
        throw Error("edit script step " + std::to_string(k) + ": incremental table differs from resolve_full");
      }
    }
    finish(report);
    out.push_back(std::move(report));
    current = std::move(next);
    table = std::move(next_table);
  }
  return out;
}

std::string to_csv(const std::vector<BenchReport>& reports) {
  std::string out = "doc_id,mode,trial,t_compiling,t_rendering,t_io,touched,total\n";
  char buf[256];
  for (const auto& r : reports) {
    const std::string id = r.step >= 0 ? r.doc_id + "/step" + std::to_string(r.step) : r.doc_id;
    for (std::size_t t = 0; t < r.samples.size(); ++t) {
      const auto& s = r.samples[t];
      std::snprintf(buf, sizeof buf, ",%s,%zu,%.9f,%.9f,%.9f,%zu,%zu\n", r.mode.c_str(), t + 1, s.t_compiling,
                    s.t_rendering, s.t_io, r.touched.touched_nodes, r.touched.total_nodes);
      out += id + buf;
    }
  }
  return out;
}

double median_rendering(const BenchReport& r) {
  std::vector<double> v;
  for (const auto& s : r.samples) v.push_back(s.t_rendering);
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace treedoc::bench
