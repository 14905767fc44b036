// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_DOCTREE_EDIT_HPP
#define TREEDOC_DOCTREE_EDIT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treedoc/doctree/node.hpp"

namespace treedoc {

// Cursor into a tree: child indices from the root.
class Path {
 public:
  Path() = default;
  Path(std::initializer_list<std::size_t> indices) : indices_(indices) {}
  explicit Path(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t depth() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  std::size_t back() const { return indices_.back(); }

  Path parent() const;
  Path child(std::size_t index) const;
  // True if this path equals `other` or lies inside the subtree it names.
  bool starts_with(const Path& other) const;

  // "0.2.1"; the empty path renders as "".
  std::string to_string() const;
  // Inverse of to_string. Throws Error on malformed input.
  static Path parse(const std::string& text);

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<std::size_t> indices_;
};

// Returns the referenced subtree. Throws PathError carrying the failing depth.
Node subtree_at(const Node& root, const Path& path);
bool path_valid(const Node& root, const Path& path);

enum class EditKind { kReplace, kInsert, kDelete };

// One structural edit. For insert, path names the slot the new node will
// occupy (the last index may equal the parent's child count to append).
struct EditRecord {
  Path path;
  EditKind kind = EditKind::kReplace;
  std::optional<Node> old_node;
  std::optional<Node> new_node;

  static EditRecord replace(Path path, Node old_node, Node new_node);
  static EditRecord insert(Path path, Node new_node);
  static EditRecord remove(Path path, Node old_node);
};

std::string to_string(EditKind kind);

// Applies an edit to a tree, sharing every subtree off the edited spine.
// Throws PathError, ConflictError (stale `old`), or ArityError.
Node apply_edit(const Node& root, const EditRecord& edit);

}  // namespace treedoc

#endif  // TREEDOC_DOCTREE_EDIT_HPP
