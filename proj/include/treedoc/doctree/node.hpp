// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_DOCTREE_NODE_HPP
#define TREEDOC_DOCTREE_NODE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treedoc {

// Arity class of a registered label: fixed(n) or variadic.
struct Arity {
  static constexpr std::size_t kVariadic = static_cast<std::size_t>(-1);
  std::size_t count = kVariadic;

  static constexpr Arity fixed(std::size_t n) { return Arity{n}; }
  static constexpr Arity variadic() { return Arity{kVariadic}; }
  bool is_variadic() const { return count == kVariadic; }
  bool admits(std::size_t n) const { return is_variadic() || n == count; }
  friend bool operator==(const Arity&, const Arity&) = default;
};

// A label name together with its arity class. Names outside the registered
// vocabulary are "raw": admitted as variadic and never interpreted, so foreign
// content survives a round trip.
struct NodeLabel {
  std::string name;
  Arity arity;
  bool raw = false;
};

// Looks a name up in the registered vocabulary; unknown names come back raw.
NodeLabel label_of(std::string_view name);
bool is_registered_label(std::string_view name);
// theorem, lemma, proposition, ... (numbered with the shared theorem counter).
bool is_theorem_like(std::string_view name);

// The universal document value: a string leaf or a labeled compound with
// ordered children. Nodes are immutable and cheap to copy; copies share
// structure. Subtree size and a structural hash are cached at construction.
class Node {
 public:
  // An empty leaf.
  Node();
  // A leaf. Implicit so that children lists can be written as {"1", "2"}.
  Node(std::string text);  // NOLINT(google-explicit-constructor)
  Node(const char* text);  // NOLINT(google-explicit-constructor)

  bool is_leaf() const { return impl_->leaf; }
  bool is_compound() const { return !impl_->leaf; }
  // Leaf text, or the label name of a compound.
  const std::string& text() const { return impl_->str; }
  const std::string& label() const { return impl_->str; }
  bool has_label(std::string_view name) const { return !impl_->leaf && impl_->str == name; }

  std::span<const Node> children() const { return impl_->children; }
  std::size_t arity() const { return impl_->children.size(); }
  const Node& child(std::size_t i) const { return impl_->children.at(i); }

  // Number of nodes in this subtree, including itself.
  std::size_t size() const { return impl_->size; }
  std::uint64_t hash() const { return impl_->hash; }
  // Same underlying object (not merely structurally equal).
  bool same_object(const Node& other) const { return impl_ == other.impl_; }
  const void* identity() const { return impl_.get(); }

 private:
  struct Impl {
    bool leaf = true;
    std::string str;
    std::vector<Node> children;
    std::size_t size = 1;
    std::uint64_t hash = 0;
  };
  explicit Node(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Node build_compound(std::string label, std::vector<Node> children);

  std::shared_ptr<const Impl> impl_;

  friend Node make_node(std::string_view label, std::vector<Node> children);
};

// Builds a compound node. Throws ArityError if the child count violates the
// label's arity class.
Node make_node(std::string_view label, std::vector<Node> children = {});

// Recursive structural equality of labels, leaf texts and child sequences.
bool struct_eq(const Node& a, const Node& b);

// Total order consistent with struct_eq; used for deterministic sorting.
int struct_compare(const Node& a, const Node& b);

// Walks every compound and reports the first node whose child count violates
// its label's arity. Returns nullopt when the tree is well formed.
std::optional<std::string> find_arity_violation(const Node& root);

}  // namespace treedoc

#endif  // TREEDOC_DOCTREE_NODE_HPP
