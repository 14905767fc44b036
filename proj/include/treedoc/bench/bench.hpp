// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_BENCH_BENCH_HPP
#define TREEDOC_BENCH_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treedoc/doctree/edit.hpp"
#include "treedoc/document.hpp"
#include "treedoc/resolver/resolver.hpp"

namespace treedoc::bench {

// One editing action of the incremental benchmark. `a` and `b` select
// targets modulo what the document holds when the step runs, so a script
// stays applicable while the document changes under it.
struct EditStep {
  enum class Kind {
    kAddSection,  // insert a labeled section before block a
    kAddFigure,   // insert a labeled figure before block a
    kRelabel,     // point reference a at label b
    kMove,        // move block a to position b
    kEditText,    // append words to text leaf a of a top-level paragraph
  };
  Kind kind = Kind::kEditText;
  std::size_t a = 0;
  std::size_t b = 0;
  std::string tag;  // makes inserted labels unique
};
std::string_view to_string(EditStep::Kind kind);

struct EditScript {
  std::vector<EditStep> steps;
};

// `steps` random steps drawn uniformly from the five kinds.
EditScript gen_edit_script(std::uint64_t seed, int steps);

// The tree edits one step performs on `root` (a move is a delete followed
// by an insert). Throws Error when the document offers no target, e.g. a
// relabel step on a document without references.
std::vector<EditRecord> materialize(const EditStep& step, const Node& root);

struct TrialTimes {
  double t_compiling = 0.0;
  double t_rendering = 0.0;
  double t_io = 0.0;
};

// Seconds are means over the measured trials; `samples` keeps each one.
// Full mode: t_compiling is LaTeX import (which canonicalizes), t_rendering
// resolve_full and t_io a tmu write plus read. Incremental mode:
// t_compiling is the tree edit, t_rendering resolve_incremental and t_io 0.
struct BenchReport {
  std::string doc_id;
  std::string mode;  // "full" or "incremental"
  int step = -1;     // script step for incremental reports
  double t_compiling = 0.0;
  double t_rendering = 0.0;
  double t_io = 0.0;
  TouchStats touched;
  int trials = 3;
  std::vector<TrialTimes> samples;
};

struct BenchOptions {
  LayoutParams layout;
  // Resolve on worker threads; tables are identical either way.
  bool parallel = false;
  // Check every incremental table against resolve_full (throws Error on a
  // mismatch naming the step).
  bool verify = true;
};

// Exports `doc`, then per trial times import, resolve_full and a tmu
// round trip. One untimed warm-up trial runs first. Throws Error if
// trials < 1.
BenchReport run_full(const Document& doc, int trials = 3, const BenchOptions& options = {},
                     const std::string& doc_id = "doc");

// Applies the script step by step, one report per step. Each step is
// timed `trials` times after a warm-up, always from the pre-step state.
// Throws Error naming the step index when a step cannot be applied.
std::vector<BenchReport> run_incremental(const Document& doc, const EditScript& script, int trials = 3,
                                         const BenchOptions& options = {}, const std::string& doc_id = "doc");

// doc_id,mode,trial,t_compiling,t_rendering,t_io,touched,total with one row
// per measured trial; incremental rows use doc_id "<id>/step<k>".
std::string to_csv(const std::vector<BenchReport>& reports);

// Median of one timing column over a report's samples.
double median_rendering(const BenchReport& r);

}  // namespace treedoc::bench

#endif  // TREEDOC_BENCH_BENCH_HPP
