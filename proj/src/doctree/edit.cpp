// SPDX-License-Identifier: Apache-2.0

#include "treedoc/doctree/edit.hpp"

#include <charconv>
#include <utility>

#include "treedoc/error.hpp"

namespace treedoc {

Path Path::parent() const {
  if (indices_.empty()) throw Error("the empty path has no parent");
  return Path(std::vector<std::size_t>(indices_.begin(), indices_.end() - 1));
}

Path Path::child(std::size_t index) const {
  auto next = indices_;
  next.push_back(index);
  return Path(std::move(next));
}

bool Path::starts_with(const Path& other) const {
  if (other.depth() > depth()) return false;
  for (std::size_t i = 0; i < other.depth(); ++i) {
    if (indices_[i] != other.indices_[i]) return false;
  }
  return true;
}

std::string Path::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(indices_[i]);
  }
  return out;
}

Path Path::parse(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return Path();
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    std::size_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p) throw Error("malformed path '" + text + "'");
    out.push_back(v);
    p = next;
    if (p < end) {
      if (*p != '.' && *p != '/') throw Error("malformed path '" + text + "'");
      ++p;
      if (p == end) throw Error("malformed path '" + text + "'");
    }
  }
  return Path(std::move(out));
}

Node subtree_at(const Node& root, const Path& path) {
  const Node* cur = &root;
  for (std::size_t depth = 0; depth < path.depth(); ++depth) {
    if (cur->is_leaf() || path[depth] >= cur->arity()) {
      throw PathError(depth, "path " + path.to_string() + " is out of range at depth " +
                                 std::to_string(depth));
    }
    cur = &cur->child(path[depth]);
  }
  return *cur;
}

bool path_valid(const Node& root, const Path& path) {
  const Node* cur = &root;
  for (std::size_t depth = 0; depth < path.depth(); ++depth) {
    if (cur->is_leaf() || path[depth] >= cur->arity()) return false;
    cur = &cur->child(path[depth]);
  }
  return true;
}

EditRecord EditRecord::replace(Path path, Node old_node, Node new_node) {
  return EditRecord{std::move(path), EditKind::kReplace, std::move(old_node), std::move(new_node)};
}

EditRecord EditRecord::insert(Path path, Node new_node) {
  return EditRecord{std::move(path), EditKind::kInsert, std::nullopt, std::move(new_node)};
}

EditRecord EditRecord::remove(Path path, Node old_node) {
  return EditRecord{std::move(path), EditKind::kDelete, std::move(old_node), std::nullopt};
}

std::string to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kReplace: return "replace";
    case EditKind::kInsert: return "insert";
    case EditKind::kDelete: return "delete";
  }
  return "?";
}

namespace {

void check_shape(const EditRecord& edit) {
  const bool ok = (edit.kind == EditKind::kReplace && edit.old_node && edit.new_node) ||
                  (edit.kind == EditKind::kInsert && !edit.old_node && edit.new_node) ||
                  (edit.kind == EditKind::kDelete && edit.old_node && !edit.new_node);
  if (!ok) throw Error("malformed " + to_string(edit.kind) + " edit record");
}

Node rebuild(const Node& node, const EditRecord& edit, std::size_t depth) {
  const auto& path = edit.path;
  const bool at_parent = depth + 1 == path.depth();
  if (node.is_leaf()) {
    throw PathError(depth, "path " + path.to_string() + " descends into a leaf at depth " +
                               std::to_string(depth));
  }
  const std::size_t index = path[depth];
  const std::size_t limit = (at_parent && edit.kind == EditKind::kInsert) ? node.arity() + 1
                                                                          : node.arity();
  if (index >= limit) {
    throw PathError(depth, "path " + path.to_string() + " is out of range at depth " +
                               std::to_string(depth));
  }
  std::vector<Node> kids(node.children().begin(), node.children().end());
  if (!at_parent) {
    kids[index] = rebuild(node.child(index), edit, depth + 1);
  } else {
    switch (edit.kind) {
      case EditKind::kReplace:
        if (!struct_eq(kids[index], *edit.old_node)) {
          throw ConflictError("stale edit at " + path.to_string() +
                              ": recorded old subtree does not match the document");
        }
        kids[index] = *edit.new_node;
        break;
      case EditKind::kDelete:
        if (!struct_eq(kids[index], *edit.old_node)) {
          throw ConflictError("stale edit at " + path.to_string() +
                              ": recorded old subtree does not match the document");
        }
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(index));
        break;
      case EditKind::kInsert:
        kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(index), *edit.new_node);
        break;
    }
  }
  return make_node(node.label(), std::move(kids));
}

}  // namespace

Node apply_edit(const Node& root, const EditRecord& edit) {
  check_shape(edit);
  if (edit.path.empty()) {
    if (edit.kind != EditKind::kReplace) throw PathError(0, "only replace may target the root");
    if (!struct_eq(root, *edit.old_node)) {
      throw ConflictError("stale edit at root: recorded old tree does not match");
    }
    return *edit.new_node;
  }
  return rebuild(root, edit, 0);
}

}  // namespace treedoc
