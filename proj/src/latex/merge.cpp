// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/merge.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

#include "treedoc/latex/canonicalize.hpp"

namespace treedoc::latex {

namespace {

std::optional<std::string> first_key(const Node& n, std::string_view label) {
  if (n.is_leaf()) return std::nullopt;
  if (n.has_label(label) && n.arity() == 1 && n.child(0).is_leaf()) return n.child(0).text();
  for (const auto& c : n.children()) {
    if (auto k = first_key(c, label)) return k;
  }
  return std::nullopt;
}

void collect_labels(const Node& n, std::set<std::string>& out) {
  if (n.is_leaf()) return;
  if (n.has_label("label") && n.arity() == 1 && n.child(0).is_leaf()) {
    out.insert(n.child(0).text());
    return;
  }
  for (const auto& c : n.children()) collect_labels(c, out);
}

// Replaces label nodes whose key is already taken with "", recording the
// keys dropped; new keys are added to `taken`.
Node drop_duplicates(const Node& n, std::set<std::string>& taken, std::vector<std::string>& dropped) {
  if (n.is_leaf()) return n;
  if (n.has_label("label") && n.arity() == 1 && n.child(0).is_leaf()) {
    if (taken.insert(n.child(0).text()).second) return n;
    dropped.push_back(n.child(0).text());
    return Node("");
  }
  std::vector<Node> kids;
  bool changed = false;
  for (const auto& c : n.children()) {
    kids.push_back(drop_duplicates(c, taken, dropped));
    changed = changed || !kids.back().same_object(c);
  }
  return changed ? make_node(n.label(), std::move(kids)) : n;
}

bool is_theorem_block(const Node& n) { return n.is_compound() && is_theorem_like(n.label()); }

}  // namespace

MergeResult merge_documents(const Document& lead, const Document& follower) {
  struct Pending {
    FaultKind code;
    std::string message;
    std::string recovery;
  };
  // groups[i] holds one block followed by the proofs placed after it.
  std::vector<std::vector<Node>> groups;
  std::vector<std::vector<Pending>> notes;
  std::map<std::string, std::size_t> theorem_group;

  std::set<std::string> taken;
  collect_labels(lead.root(), taken);

  auto add_group = [&](Node block) {
    if (is_theorem_block(block)) {
      if (auto key = first_key(block, "label")) theorem_group.emplace(*key, groups.size());
    }
    groups.push_back({std::move(block)});
    notes.emplace_back();
  };
  for (const auto& b : lead.root().children()) add_group(b);

  std::vector<Node> proofs;
  std::vector<std::vector<Pending>> proof_notes;
  for (const auto& b : follower.root().children()) {
    std::vector<std::string> dropped;
    Node block = drop_duplicates(b, taken, dropped);
    if (!dropped.empty()) block = canonicalize(block, false);
    std::vector<Pending> pending;
    for (const auto& key : dropped) {
      pending.push_back({FaultKind::kConflictingDefinition, "label '" + key + "' is defined in both documents",
                         "kept the lead document's definition"});
    }
    if (block.has_label("proof")) {
      proofs.push_back(std::move(block));
      proof_notes.push_back(std::move(pending));
      continue;
    }
    add_group(std::move(block));
    notes.back() = std::move(pending);
  }

  std::vector<Node> tail;
  std::vector<std::vector<Pending>> tail_notes;
  std::vector<std::vector<std::vector<Pending>>> attached_notes(groups.size());
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    const auto target = first_key(proofs[i], "reference");
    const auto it = target ? theorem_group.find(*target) : theorem_group.end();
    if (it != theorem_group.end()) {
      groups[it->second].push_back(proofs[i]);
      attached_notes[it->second].push_back(std::move(proof_notes[i]));
      continue;
    }
    proof_notes[i].push_back({FaultKind::kUndefinedCrossReference,
                              target ? "proof refers to '" + *target + "', which names no theorem"
                                     : "proof refers to no theorem",
                              "appended the proof at the end"});
    tail.push_back(proofs[i]);
    tail_notes.push_back(std::move(proof_notes[i]));
  }

  std::vector<Node> blocks;
  std::vector<Diagnostic> diags;
  auto emit = [&](Node block, const std::vector<Pending>& pending) {
    for (const auto& p : pending) diags.push_back(Diagnostic{p.code, Path{blocks.size()}, Span{}, p.message, p.recovery});
    blocks.push_back(std::move(block));
  };
  for (std::size_t g = 0; g < groups.size(); ++g) {
    emit(groups[g][0], notes[g]);
    for (std::size_t k = 1; k < groups[g].size(); ++k) emit(groups[g][k], attached_notes[g][k - 1]);
  }
  for (std::size_t i = 0; i < tail.size(); ++i) emit(tail[i], tail_notes[i]);

  Document out(make_node("document", std::move(blocks)), lead.title());
  out.style() = lead.style();
  return MergeResult{std::move(out), std::move(diags)};
}

}  // namespace treedoc::latex
