// SPDX-License-Identifier: Apache-2.0

#include "treedoc/resolver/resolver.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <thread>
#include <utility>

#include <json.hpp>

#include "treedoc/error.hpp"

namespace treedoc {

namespace detail {

enum class EventKind : std::uint8_t {
  kLine,
  kSection,
  kSubsection,
  kEquation,
  kTheorem,
  kFigure,
  kLabel,
  kRef,
};

// One numbering-relevant step of the pre-order walk. `path` is relative to
// the owning top-level block.
struct Event {
  EventKind kind = EventKind::kLine;
  int lines = 0;
  std::string name;
  std::vector<std::size_t> path;

  bool same_effect(const Event& o) const {
    return kind == o.kind && lines == o.lines && name == o.name;
  }
  friend bool operator==(const Event&, const Event&) = default;
};

using Events = std::vector<Event>;

struct CounterState {
  int section = 0;
  int subsection = 0;
  int equation = 0;
  int theorem = 0;
  int figure = 0;
  long line = 0;
  long block_start = 0;
  bool has_unit = false;
  RefKind kind = RefKind::kSection;
  std::string number;
  friend bool operator==(const CounterState&, const CounterState&) = default;
};

struct ResolveIndex {
  LayoutParams layout;
  std::vector<std::shared_ptr<const Events>> blocks;
  // entry[i] is the state before block i; entry.size() == blocks.size() + 1.
  std::vector<CounterState> entry;
  // label -> indices of the blocks that define it, ascending, with repeats.
  std::map<std::string, std::vector<std::size_t>, std::less<>> defs;
  std::map<std::string, std::size_t, std::less<>> ref_counts;
  std::vector<Diagnostic> diagnostics;
};

}  // namespace detail

namespace {

using detail::CounterState;
using detail::Event;
using detail::EventKind;
using detail::Events;
using detail::ResolveIndex;

void check_layout(const LayoutParams& lp) {
  if (lp.lines_per_page < 1) throw Error("lines_per_page must be at least 1");
  if (lp.figure_lines < 1) throw Error("figure_lines must be at least 1");
}

void flatten_text(const Node& n, std::string& out) {
  if (n.is_leaf()) {
    out += n.text();
    return;
  }
  for (const auto& c : n.children()) flatten_text(c, out);
}

std::string key_of(const Node& n) {
  if (n.arity() == 1 && n.child(0).is_leaf()) return n.child(0).text();
  std::string out;
  flatten_text(n, out);
  return out;
}

void collect(const Node& n, bool block, const LayoutParams& lp, std::vector<std::size_t>& path,
             Events& out) {
  if (block) out.push_back(Event{EventKind::kLine, n.has_label("figure") ? lp.figure_lines : 1, {}, path});
  if (n.is_leaf()) return;
  const std::string& l = n.label();
  if (l == "section") {
    out.push_back(Event{EventKind::kSection, 0, {}, path});
  } else if (l == "subsection") {
    out.push_back(Event{EventKind::kSubsection, 0, {}, path});
  } else if (l == "equation") {
    out.push_back(Event{EventKind::kEquation, 0, {}, path});
  } else if (l == "figure") {
    out.push_back(Event{EventKind::kFigure, 0, {}, path});
  } else if (is_theorem_like(l)) {
    out.push_back(Event{EventKind::kTheorem, 0, {}, path});
  } else if (l == "label" && n.arity() == 1) {
    out.push_back(Event{EventKind::kLabel, 0, key_of(n), path});
    return;
  } else if (l == "reference" && n.arity() == 1) {
    out.push_back(Event{EventKind::kRef, 0, key_of(n), path});
    return;
  }
  const bool doc = l == "document";
  for (std::size_t i = 0; i < n.arity(); ++i) {
    path.push_back(i);
    collect(n.child(i), doc, lp, path, out);
    path.pop_back();
  }
}

Events block_events(const Node& n, bool block, const LayoutParams& lp,
                    std::vector<std::size_t> path = {}) {
  Events out;
  collect(n, block, lp, path, out);
  return out;
}

std::string dotted(int a, int b) { return std::to_string(a) + "." + std::to_string(b); }

void set_unit(CounterState& s, RefKind kind, std::string number) {
  s.has_unit = true;
  s.kind = kind;
  s.number = std::move(number);
}

// Applies one event. Returns true for a label event, with its value in *out.
bool step(CounterState& s, const Event& e, const LayoutParams& lp, RefValue* out) {
  switch (e.kind) {
    case EventKind::kLine:
      s.block_start = s.line;
      s.line += e.lines;
      return false;
    case EventKind::kSection:
      ++s.section;
      s.subsection = s.equation = s.theorem = s.figure = 0;
      set_unit(s, RefKind::kSection, std::to_string(s.section));
      return false;
    case EventKind::kSubsection:
      ++s.subsection;
      set_unit(s, RefKind::kSection, dotted(s.section, s.subsection));
      return false;
    case EventKind::kEquation:
      ++s.equation;
      set_unit(s, RefKind::kEquation, dotted(s.section, s.equation));
      return false;
    case EventKind::kTheorem:
      ++s.theorem;
      set_unit(s, RefKind::kTheorem, dotted(s.section, s.theorem));
      return false;
    case EventKind::kFigure:
      ++s.figure;
      set_unit(s, RefKind::kFigure, dotted(s.section, s.figure));
      return false;
    case EventKind::kLabel:
      *out = RefValue{s.has_unit ? s.number : std::string(),
                      static_cast<int>(s.block_start / lp.lines_per_page) + 1,
                      s.has_unit ? s.kind : RefKind::kSection};
      return true;
    case EventKind::kRef:
      return false;
  }
  return false;
}

Path absolute(std::size_t block, const std::vector<std::size_t>& rel) {
  std::vector<std::size_t> idx;
  idx.reserve(rel.size() + 1);
  idx.push_back(block);
  idx.insert(idx.end(), rel.begin(), rel.end());
  return Path(std::move(idx));
}

std::vector<Diagnostic> compute_diagnostics(const ResolveIndex& index) {
  std::vector<Diagnostic> out;
  std::set<std::string, std::less<>> seen;
  for (std::size_t b = 0; b < index.blocks.size(); ++b) {
    for (const auto& e : *index.blocks[b]) {
      if (e.kind == EventKind::kLabel) {
        if (!seen.insert(e.name).second) {
          out.push_back(Diagnostic{FaultKind::kConflictingDefinition, absolute(b, e.path), {},
                                   "label '" + e.name + "' is defined more than once",
                                   "kept the first definition"});
        }
      } else if (e.kind == EventKind::kRef) {
        auto it = index.defs.find(e.name);
        if (it == index.defs.end() || it->second.empty()) {
          out.push_back(Diagnostic{FaultKind::kUndefinedCrossReference, absolute(b, e.path), {},
                                   "reference to undefined label '" + e.name + "'",
                                   "rendered as ??"});
        }
      }
    }
  }
  return out;
}

void add_block_counts(ResolveIndex& index, const Events& events, std::size_t block) {
  for (const auto& e : events) {
    if (e.kind == EventKind::kLabel) {
      auto& v = index.defs[e.name];
      v.insert(std::upper_bound(v.begin(), v.end(), block), block);
    } else if (e.kind == EventKind::kRef) {
      ++index.ref_counts[e.name];
    }
  }
}

void remove_block_counts(ResolveIndex& index, const Events& events, std::size_t block) {
  for (const auto& e : events) {
    if (e.kind == EventKind::kLabel) {
      auto it = index.defs.find(e.name);
      if (it == index.defs.end()) continue;
      auto& v = it->second;
      if (auto pos = std::find(v.begin(), v.end(), block); pos != v.end()) v.erase(pos);
      if (v.empty()) index.defs.erase(it);
    } else if (e.kind == EventKind::kRef) {
      auto it = index.ref_counts.find(e.name);
      if (it == index.ref_counts.end()) continue;
      if (--it->second == 0) index.ref_counts.erase(it);
    }
  }
}

// Shifts every recorded definition site at or after `from` by `delta`.
void shift_defs(ResolveIndex& index, std::size_t from, long delta) {
  for (auto& [name, v] : index.defs) {
    for (auto& b : v) {
      if (b >= from) b = static_cast<std::size_t>(static_cast<long>(b) + delta);
    }
  }
}

std::vector<std::shared_ptr<const Events>> summarize(const Node& root, const LayoutParams& lp,
                                                     const ResolveOptions& options) {
  const std::size_t n = root.arity();
  std::vector<std::shared_ptr<const Events>> blocks(n);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      blocks[i] = std::make_shared<const Events>(block_events(root.child(i), true, lp));
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (!options.parallel || threads <= 1 || n < 2) {
    work(0, n);
    return blocks;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t lo = 0; lo < n; lo += chunk) {
    pool.emplace_back(work, lo, std::min(n, lo + chunk));
  }
  for (auto& t : pool) t.join();
  return blocks;
}

ResolveResult full_pass(const Node& root, const LayoutParams& lp, const ResolveOptions& options) {
  auto index = std::make_shared<ResolveIndex>();
  index->layout = lp;
  index->blocks = summarize(root, lp, options);
  index->entry.reserve(index->blocks.size() + 1);
  AuxTable table;
  CounterState s;
  for (std::size_t b = 0; b < index->blocks.size(); ++b) {
    index->entry.push_back(s);
    for (const auto& e : *index->blocks[b]) {
      RefValue v;
      if (step(s, e, lp, &v) && !table.lookup(e.name)) table.set(e.name, std::move(v));
    }
    add_block_counts(*index, *index->blocks[b], b);
  }
  index->entry.push_back(s);
  index->diagnostics = compute_diagnostics(*index);
  ResolveResult r;
  r.diagnostics = index->diagnostics;
  r.stats = TouchStats{root.size(), 0, root.size()};
  table.set_index(std::move(index));
  r.table = std::move(table);
  return r;
}

bool has_prefix(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q, std::size_t n) {
  return p.size() >= n && std::equal(q.begin(), q.begin() + static_cast<long>(n), p.begin());
}

// Rewrites the event list of one block for an edit at relative path q. The
// events of the subtree at q form one contiguous run in pre-order.
Events splice(const Events& old, const std::vector<std::size_t>& q, EditKind kind, Events fresh) {
  auto lower = std::find_if(old.begin(), old.end(), [&](const Event& e) { return !(e.path < q); });
  auto upper = lower;
  if (kind != EditKind::kInsert) {
    while (upper != old.end() && has_prefix(upper->path, q, q.size())) ++upper;
  }
  Events out(old.begin(), lower);
  out.insert(out.end(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
  const std::size_t d = q.size() - 1;
  for (auto it = upper; it != old.end(); ++it) {
    Event e = *it;
    if (kind != EditKind::kReplace && has_prefix(e.path, q, d)) {
      if (kind == EditKind::kInsert && e.path[d] >= q[d]) ++e.path[d];
      if (kind == EditKind::kDelete && e.path[d] > q[d]) --e.path[d];
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool same_signature(const Events& a, const Events& b) {
  auto skip = [](const Events& v, std::size_t i) {
    while (i < v.size() && v[i].kind == EventKind::kRef) ++i;
    return i;
  };
  std::size_t i = skip(a, 0);
  std::size_t j = skip(b, 0);
  while (i < a.size() && j < b.size()) {
    if (!a[i].same_effect(b[j])) return false;
    i = skip(a, i + 1);
    j = skip(b, j + 1);
  }
  return i == a.size() && j == b.size();
}

}  // namespace

ResolveResult resolve_full(const Document& doc, const LayoutParams& layout,
                           const ResolveOptions& options) {
  check_layout(layout);
  return full_pass(doc.root(), layout, options);
}

ResolveResult resolve_incremental(const Document& doc, const AuxTable& prev, const EditRecord& edit,
                                  const LayoutParams& layout) {
  check_layout(layout);
  const Node& root = doc.root();
  const auto& idx = prev.index();
  const std::size_t n_new = root.arity();

  enum class Shape { kBlockReplace, kBlockInsert, kBlockDelete, kInner };
  Shape shape = Shape::kInner;
  bool usable = idx && idx->layout == layout && !edit.path.empty();
  if (usable) {
    const std::size_t n_old = idx->blocks.size();
    if (edit.path.depth() == 1) {
      shape = edit.kind == EditKind::kInsert   ? Shape::kBlockInsert
              : edit.kind == EditKind::kDelete ? Shape::kBlockDelete
                                               : Shape::kBlockReplace;
    }
    const std::size_t expect = shape == Shape::kBlockInsert   ? n_old + 1
                               : shape == Shape::kBlockDelete ? n_old - 1
                                                              : n_old;
    usable = (shape == Shape::kBlockDelete ? n_old > 0 : true) && n_new == expect &&
             edit.path[0] < (shape == Shape::kBlockDelete ? n_old : n_new);
  }
  if (!usable) return full_pass(root, layout, {});

  const std::size_t i = edit.path[0];
  TouchStats stats{0, 0, root.size()};
  auto blocks = idx->blocks;
  Events fresh;

  switch (shape) {
    case Shape::kBlockReplace:
    case Shape::kBlockInsert:
      fresh = block_events(root.child(i), true, layout);
      stats.touched_nodes += root.child(i).size();
      break;
    case Shape::kBlockDelete:
      break;
    case Shape::kInner: {
      std::vector<std::size_t> q(edit.path.indices().begin() + 1, edit.path.indices().end());
      Events sub;
      if (edit.new_node) {
        const Node parent = subtree_at(root, edit.path.parent());
        sub = block_events(*edit.new_node, parent.has_label("document"), layout, q);
        stats.touched_nodes += edit.new_node->size();
      }
      fresh = splice(*idx->blocks[i], q, edit.kind, std::move(sub));
      break;
    }
  }

  if (shape == Shape::kBlockReplace || shape == Shape::kInner) {
    const Events& old = *idx->blocks[i];
    if (old == fresh) {
      ResolveResult r{prev, idx->diagnostics, stats};
      return r;
    }
    if (same_signature(old, fresh)) {
      // Numbering is unaffected; only reference sites or paths moved.
      auto next = std::make_shared<ResolveIndex>(*idx);
      remove_block_counts(*next, old, i);
      next->blocks[i] = std::make_shared<const Events>(std::move(fresh));
      add_block_counts(*next, *next->blocks[i], i);
      next->diagnostics = compute_diagnostics(*next);
      ResolveResult r{prev, next->diagnostics, stats};
      r.table.set_index(std::move(next));
      return r;
    }
  }

  auto next = std::make_shared<ResolveIndex>();
  next->layout = layout;
  next->defs = idx->defs;
  next->ref_counts = idx->ref_counts;
  std::set<std::string, std::less<>> rebound;
  auto note_labels = [&](const Events& ev) {
    for (const auto& e : ev) {
      if (e.kind == EventKind::kLabel) rebound.insert(e.name);
    }
  };
  switch (shape) {
    case Shape::kBlockReplace:
    case Shape::kInner:
      note_labels(*idx->blocks[i]);
      note_labels(fresh);
      remove_block_counts(*next, *idx->blocks[i], i);
      blocks[i] = std::make_shared<const Events>(std::move(fresh));
      add_block_counts(*next, *blocks[i], i);
      break;
    case Shape::kBlockInsert:
      note_labels(fresh);
      shift_defs(*next, i, +1);
      blocks.insert(blocks.begin() + static_cast<long>(i), std::make_shared<const Events>(std::move(fresh)));
      add_block_counts(*next, *blocks[i], i);
      break;
    case Shape::kBlockDelete:
      note_labels(*idx->blocks[i]);
      remove_block_counts(*next, *idx->blocks[i], i);
      shift_defs(*next, i + 1, -1);
      blocks.erase(blocks.begin() + static_cast<long>(i));
      break;
  }
  next->blocks = std::move(blocks);

  // Index of the pre-edit block that new block j corresponds to; -1 if new.
  auto old_of = [&](std::size_t j) -> long {
    switch (shape) {
      case Shape::kBlockInsert:
        return j < i ? static_cast<long>(j) : j == i ? -1 : static_cast<long>(j) - 1;
      case Shape::kBlockDelete:
        return j < i ? static_cast<long>(j) : static_cast<long>(j) + 1;
      default:
        return static_cast<long>(j);
    }
  };

  AuxTable table = prev;
  std::set<std::string, std::less<>> changed;
  auto bind = [&](const std::string& name, RefValue v) {
    auto cur = table.lookup(name);
    if (!cur || !(*cur == v)) {
      table.set(name, std::move(v));
      changed.insert(name);
    }
  };
  auto first_def = [&](const std::string& name) -> long {
    auto it = next->defs.find(name);
    return it == next->defs.end() || it->second.empty() ? -1 : static_cast<long>(it->second.front());
  };

  next->entry.assign(idx->entry.begin(), idx->entry.begin() + static_cast<long>(i) + 1);
  next->entry.resize(n_new + 1);
  CounterState s = idx->entry[i];
  std::size_t j = i;
  bool resynced = false;
  for (; j < n_new; ++j) {
    const bool edited = j == i && shape != Shape::kBlockDelete;
    if (!edited && s == idx->entry[static_cast<std::size_t>(old_of(j))]) {
      resynced = true;
      break;
    }
    next->entry[j] = s;
    std::set<std::string, std::less<>> seen;
    for (const auto& e : *next->blocks[j]) {
      RefValue v;
      if (step(s, e, layout, &v) && seen.insert(e.name).second &&
          first_def(e.name) == static_cast<long>(j)) {
        bind(e.name, std::move(v));
      }
    }
  }
  if (resynced) {
    for (std::size_t k = j; k <= n_new; ++k) {
      const long o = k == n_new ? static_cast<long>(idx->blocks.size()) : old_of(k);
      next->entry[k] = idx->entry[static_cast<std::size_t>(o)];
    }
  } else {
    next->entry[n_new] = s;
  }
  const std::size_t replayed_end = j;

  // Labels whose definition sites moved may now bind in a block the replay
  // did not reach.
  for (const auto& name : rebound) {
    const long k = first_def(name);
    if (k < 0) {
      if (table.lookup(name)) {
        table.erase(name);
        changed.insert(name);
      }
      continue;
    }
    const auto b = static_cast<std::size_t>(k);
    if (b < i || b < replayed_end) continue;
    CounterState t = next->entry[b];
    for (const auto& e : *next->blocks[b]) {
      RefValue v;
      if (step(t, e, layout, &v) && e.name == name) {
        bind(name, std::move(v));
        break;
      }
    }
  }

  for (const auto& name : changed) {
    if (auto it = next->ref_counts.find(name); it != next->ref_counts.end()) {
      stats.recomputed_refs += it->second;
    }
  }
  stats.touched_nodes += stats.recomputed_refs;
  stats.touched_nodes = std::min(stats.touched_nodes, stats.total_nodes);

  next->diagnostics = compute_diagnostics(*next);
  ResolveResult r;
  r.diagnostics = next->diagnostics;
  r.stats = stats;
  table.set_index(std::move(next));
  r.table = std::move(table);
  return r;
}

std::map<std::string, RefKind> label_kinds(const Node& root) {
  std::map<std::string, RefKind> out;
  LayoutParams lp;
  CounterState s;
  for (const auto& child : root.children()) {
    for (const auto& e : block_events(child, true, lp)) {
      RefValue v;
      if (step(s, e, lp, &v)) out.emplace(e.name, v.kind);
    }
  }
  return out;
}

namespace {

void render(const Node& n, const AuxTable& aux, std::string& out) {
  if (n.is_leaf()) {
    out += n.text();
    return;
  }
  if (n.has_label("label")) return;
  if (n.has_label("reference") && n.arity() == 1) {
    auto v = aux.lookup(key_of(n));
    out += v ? v->number : "??";
    return;
  }
  const bool doc = n.has_label("document");
  for (std::size_t i = 0; i < n.arity(); ++i) {
    if (doc && i > 0) out += '\n';
    render(n.child(i), aux, out);
  }
}

}  // namespace

std::string render_plain(const Document& doc, const AuxTable& aux) {
  std::string out;
  render(doc.root(), aux, out);
  return out;
}

std::string aux_to_json(const AuxTable& aux) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [label, v] : aux.entries()) {
    j[label] = {{"number", v.number}, {"page", v.page}, {"kind", std::string(to_string(v.kind))}};
  }
  return j.dump();
}

}  // namespace treedoc
