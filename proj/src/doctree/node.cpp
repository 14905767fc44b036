// SPDX-License-Identifier: Apache-2.0

#include "treedoc/doctree/node.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "treedoc/error.hpp"

namespace treedoc {

namespace {

struct Registered {
  std::string_view name;
  Arity arity;
};

constexpr std::array kVocabulary = {
    Registered{"document", Arity::variadic()},
    Registered{"concat", Arity::variadic()},
    Registered{"math", Arity::fixed(1)},
    Registered{"equation", Arity::fixed(1)},
    Registered{"equation*", Arity::fixed(1)},
    Registered{"frac", Arity::fixed(2)},
    Registered{"sqrt", Arity::fixed(1)},
    Registered{"rsub", Arity::fixed(1)},
    Registered{"rsup", Arity::fixed(1)},
    Registered{"big", Arity::fixed(1)},
    Registered{"around*", Arity::fixed(3)},
    Registered{"matrix", Arity::variadic()},
    Registered{"cases", Arity::variadic()},
    Registered{"row", Arity::variadic()},
    Registered{"cell", Arity::fixed(1)},
    Registered{"figure", Arity::variadic()},
    Registered{"itemize", Arity::variadic()},
    Registered{"item", Arity::fixed(0)},
    Registered{"label", Arity::fixed(1)},
    Registered{"reference", Arity::fixed(1)},
    Registered{"cite", Arity::fixed(1)},
    Registered{"section", Arity::fixed(1)},
    Registered{"subsection", Arity::fixed(1)},
    Registered{"theorem", Arity::fixed(1)},
    Registered{"lemma", Arity::fixed(1)},
    Registered{"proposition", Arity::fixed(1)},
    Registered{"corollary", Arity::fixed(1)},
    Registered{"definition", Arity::fixed(1)},
    Registered{"remark", Arity::fixed(1)},
    Registered{"example", Arity::fixed(1)},
    Registered{"conjecture", Arity::fixed(1)},
    Registered{"proof", Arity::fixed(1)},
    Registered{"error", Arity::fixed(2)},
};

constexpr std::array<std::string_view, 8> kTheoremLike = {
    "theorem", "lemma", "proposition", "corollary", "definition", "remark", "example", "conjecture",
};

const Registered* find_registered(std::string_view name) {
  for (const auto& r : kVocabulary) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

NodeLabel label_of(std::string_view name) {
  if (const auto* r = find_registered(name)) return NodeLabel{std::string(name), r->arity, false};
  return NodeLabel{std::string(name), Arity::variadic(), true};
}

bool is_registered_label(std::string_view name) { return find_registered(name) != nullptr; }

bool is_theorem_like(std::string_view name) {
  return std::find(kTheoremLike.begin(), kTheoremLike.end(), name) != kTheoremLike.end();
}

Node::Node() : Node(std::string()) {}

Node::Node(const char* text) : Node(std::string(text)) {}

Node::Node(std::string text) {
  auto impl = std::make_shared<Impl>();
  impl->leaf = true;
  impl->hash = fnv(kFnvOffset ^ 0x4c, text);
  impl->str = std::move(text);
  impl_ = std::move(impl);
}

Node Node::build_compound(std::string label, std::vector<Node> children) {
  auto impl = std::make_shared<Impl>();
  impl->leaf = false;
  std::uint64_t h = fnv(kFnvOffset ^ 0x43, label);
  std::size_t size = 1;
  for (const auto& c : children) {
    h = mix(h, c.hash());
    size += c.size();
  }
  impl->hash = mix(h, children.size());
  impl->size = size;
  impl->str = std::move(label);
  impl->children = std::move(children);
  return Node(std::shared_ptr<const Impl>(std::move(impl)));
}

Node make_node(std::string_view label, std::vector<Node> children) {
  if (label.empty()) throw Error("compound labels must be non-empty");
  const auto info = label_of(label);
  if (!info.arity.admits(children.size())) {
    throw ArityError(std::string(label), info.arity.count, children.size());
  }
  return Node::build_compound(std::string(label), std::move(children));
}

bool struct_eq(const Node& a, const Node& b) {
  if (a.same_object(b)) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  if (a.is_leaf() != b.is_leaf() || a.text() != b.text()) return false;
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!struct_eq(a.child(i), b.child(i))) return false;
  }
  return true;
}

int struct_compare(const Node& a, const Node& b) {
  if (a.same_object(b)) return 0;
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
  if (int c = a.text().compare(b.text()); c != 0) return c < 0 ? -1 : 1;
  const std::size_t n = std::min(a.arity(), b.arity());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = struct_compare(a.child(i), b.child(i)); c != 0) return c;
  }
  if (a.arity() == b.arity()) return 0;
  return a.arity() < b.arity() ? -1 : 1;
}

std::optional<std::string> find_arity_violation(const Node& root) {
  if (root.is_leaf()) return std::nullopt;
  const auto info = label_of(root.label());
  if (!info.arity.admits(root.arity())) {
    return root.label() + " has " + std::to_string(root.arity()) + " children, expected " +
           std::to_string(info.arity.count);
  }
  for (const auto& c : root.children()) {
    if (auto v = find_arity_violation(c)) return v;
  }
  return std::nullopt;
}

ArityError::ArityError(std::string label, std::size_t expected, std::size_t actual)
    : Error("arity violation: '" + label + "' takes " + std::to_string(expected) +
            " children, got " + std::to_string(actual)),
      label_(std::move(label)),
      expected_(expected),
      actual_(actual) {}

PathError::PathError(std::size_t depth, std::string what)
    : Error(std::move(what)), depth_(depth) {}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

ExportError::ExportError(std::string label, std::string path, const std::string& what)
    : Error(what), label_(std::move(label)), path_(std::move(path)) {}

}  // namespace treedoc
