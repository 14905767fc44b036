// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_RESOLVER_RESOLVER_HPP
#define TREEDOC_RESOLVER_RESOLVER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "treedoc/doctree/diagnostic.hpp"
#include "treedoc/doctree/edit.hpp"
#include "treedoc/document.hpp"
#include "treedoc/resolver/aux_table.hpp"

namespace treedoc {

// Line-count pagination: every child of a `document` node is one line, a
// figure is figure_lines lines; page = line / lines_per_page + 1.
struct LayoutParams {
  int lines_per_page = 40;
  int figure_lines = 10;
  friend bool operator==(const LayoutParams&, const LayoutParams&) = default;
};

struct TouchStats {
  std::size_t touched_nodes = 0;
  std::size_t recomputed_refs = 0;
  std::size_t total_nodes = 0;
};

struct ResolveOptions {
  // Extract per-block numbering events on worker threads, then fold them
  // sequentially. Produces the same table as the sequential path.
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ResolveResult {
  AuxTable table;
  // conflicting-definition for duplicate labels (first binding wins) and
  // undefined-cross-reference for every reference without a label, each
  // anchored at the offending label or reference node.
  std::vector<Diagnostic> diagnostics;
  TouchStats stats;
};

// Numbers every labeled unit in document order. Sections are 1, 2, ...;
// subsections s.k; equations, theorem-like blocks and figures s.k with
// per-section counters. A label takes the number of the most recent
// numbered unit and the page of the most recently started block.
// Throws Error on invalid layout parameters.
ResolveResult resolve_full(const Document& doc, const LayoutParams& layout = {},
                           const ResolveOptions& options = {});

// Updates `prev` (the table resolve_full produced for the pre-edit document)
// for `edit`, already applied to `doc`. Only the edited region is walked;
// later blocks are renumbered from cached per-block summaries. Falls back to
// a full pass when `prev` carries no index (e.g. it was read from a file).
//
// stats.touched_nodes counts the nodes of the new edited subtree that were
// walked plus every reference node whose target value changed.
ResolveResult resolve_incremental(const Document& doc, const AuxTable& prev,
                                  const EditRecord& edit, const LayoutParams& layout = {});

// Kind of every label, by the same most-recent-unit rule the resolver uses.
std::map<std::string, RefKind> label_kinds(const Node& root);

// Plain-text rendering with references replaced by their numbers, or "??"
// when the label is undefined.
std::string render_plain(const Document& doc, const AuxTable& aux);

// {"label": {"number": "5.1", "page": 13, "kind": "section"}, ...}
std::string aux_to_json(const AuxTable& aux);

}  // namespace treedoc

#endif  // TREEDOC_RESOLVER_RESOLVER_HPP
