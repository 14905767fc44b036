// SPDX-License-Identifier: Apache-2.0

#include "treedoc/serializer/tmu.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "treedoc/error.hpp"
#include "treedoc/resolver/resolver.hpp"

namespace treedoc {

namespace {

bool is_entity_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_entity_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Length of the entity `<name>` starting at text[pos], or 0.
std::size_t entity_length(std::string_view text, std::size_t pos) {
  if (pos + 2 >= text.size() || text[pos] != '<' || !is_entity_start(text[pos + 1])) return 0;
  std::size_t q = pos + 2;
  while (q < text.size() && is_entity_char(text[q])) ++q;
  if (q < text.size() && text[q] == '>') return q + 1 - pos;
  return 0;
}

void write_leaf(std::string& out, const std::string& text) {
  const bool whole_entity = !text.empty() && entity_length(text, 0) == text.size();
  for (std::size_t i = 0; i < text.size();) {
    if (!whole_entity) {
      if (std::size_t n = entity_length(text, i)) {
        out.append(text, i, n);
        i += n;
        continue;
      }
    }
    const char c = text[i++];
    if (c == '\\' || c == '|' || c == '<' || c == '>') out += '\\';
    out += c;
  }
}

void write_label(std::string& out, const std::string& label) {
  for (char c : label) {
    if (c == '\\' || c == '|' || c == '<' || c == '>') out += '\\';
    out += c;
  }
}

void write_node(std::string& out, const Node& node) {
  if (node.is_leaf()) {
    write_leaf(out, node.text());
    return;
  }
  out += '<';
  write_label(out, node.label());
  for (const auto& c : node.children()) {
    out += '|';
    write_node(out, c);
  }
  out += '>';
}

void collect_tokens(std::vector<std::string>& out, const Node& node) {
  if (node.is_leaf()) {
    std::string leaf;
    write_leaf(leaf, node.text());
    out.push_back(std::move(leaf));
    return;
  }
  std::string open = "<";
  write_label(open, node.label());
  out.push_back(std::move(open));
  for (const auto& c : node.children()) {
    out.emplace_back("|");
    collect_tokens(out, c);
  }
  out.emplace_back(">");
}

class Reader {
 public:
  explicit Reader(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  std::size_t offset() const { return base_ + pos_; }

  void skip_newlines() {
    while (pos_ < text_.size() &&
           (text_[pos_] == '\n' || text_[pos_] == '\r' || text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  // A top-level item must be a compound.
  Node read_top() {
    if (at_end() || text_[pos_] != '<') throw ParseError(offset(), "expected '<' at top level");
    return read_child(0, true);
  }

 private:
  static constexpr std::size_t kMaxDepth = 10000;

  bool is_terminator(std::size_t q, bool top) const {
    if (q >= text_.size()) return true;
    const char c = text_[q];
    if (top) return c == '\n' || c == '\r';
    return c == '|' || c == '>';
  }

  Node read_child(std::size_t depth, bool top) {
    if (depth > kMaxDepth) throw ParseError(offset(), "nesting too deep");
    if (pos_ < text_.size() && text_[pos_] == '<') {
      if (std::size_t n = entity_length(text_, pos_)) {
        if (is_terminator(pos_ + n, top)) {
          std::string label(text_.substr(pos_ + 1, n - 2));
          pos_ += n;
          return make_node(label);
        }
        if (!top) return read_leaf();
      } else {
        return read_compound(depth);
      }
    }
    if (top) throw ParseError(offset(), "expected a compound at top level");
    return read_leaf();
  }

  Node read_compound(std::size_t depth) {
    const std::size_t open = offset();
    ++pos_;  // '<'
    std::string label;
    while (true) {
      if (at_end()) throw ParseError(offset(), "unbalanced markup: '<' at offset " +
                                                   std::to_string(open) + " is never closed");
      char c = text_[pos_];
      if (c == '|' || c == '>') break;
      if (c == '<') throw ParseError(offset(), "unescaped '<' inside a tag name");
      if (c == '\\') {
        ++pos_;
        if (at_end()) throw ParseError(offset(), "dangling escape");
        c = text_[pos_];
      }
      label += c;
      ++pos_;
    }
    if (label.empty()) throw ParseError(open, "empty tag name");
    std::vector<Node> kids;
    while (text_[pos_] == '|') {
      ++pos_;
      kids.push_back(read_child(depth + 1, false));
      if (at_end()) throw ParseError(offset(), "unbalanced markup: '<' at offset " +
                                                   std::to_string(open) + " is never closed");
    }
    ++pos_;  // '>'
    try {
      return make_node(label, std::move(kids));
    } catch (const ArityError& e) {
      throw ParseError(open, e.what());
    }
  }

  Node read_leaf() {
    std::string out;
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == '|' || c == '>') break;
      if (c == '\\') {
        ++pos_;
        if (at_end()) throw ParseError(offset(), "dangling escape");
        out += text_[pos_++];
        continue;
      }
      if (c == '<') {
        const std::size_t n = entity_length(text_, pos_);
        if (n == 0) throw ParseError(offset(), "unescaped '<' in leaf text");
        out.append(text_.substr(pos_, n));
        pos_ += n;
        continue;
      }
      out += c;
      ++pos_;
    }
    return Node(std::move(out));
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

struct Associate {
  std::string label;
  RefValue value;
};

std::optional<Associate> as_associate(const Node& n) {
  if (!n.has_label("associate") || n.arity() != 2) return std::nullopt;
  const Node& key = n.child(0);
  const Node& tuple = n.child(1);
  if (!key.is_leaf() || !tuple.has_label("tuple") || tuple.arity() != 2) return std::nullopt;
  if (!tuple.child(0).is_leaf() || !tuple.child(1).is_leaf()) return std::nullopt;
  const std::string& page_text = tuple.child(1).text();
  int page = 0;
  auto [p, ec] = std::from_chars(page_text.data(), page_text.data() + page_text.size(), page);
  if (ec != std::errc() || p != page_text.data() + page_text.size() || page < 1) return std::nullopt;
  return Associate{key.text(), RefValue{tuple.child(0).text(), page, RefKind::kSection}};
}

}  // namespace

std::string write_tmu_node(const Node& node) {
  std::string out;
  write_node(out, node);
  return out;
}

Node read_tmu_node(std::string_view text) {
  Reader r(text);
  r.skip_newlines();
  Node n = r.read_top();
  r.skip_newlines();
  if (!r.at_end()) throw ParseError(r.offset(), "trailing characters after tree");
  return n;
}

std::string associate_line(const std::string& label, const RefValue& value) {
  std::string out = "<associate|";
  write_leaf(out, label);
  out += "|<tuple|";
  write_leaf(out, value.number);
  out += '|';
  out += std::to_string(value.page);
  out += ">>";
  return out;
}

std::string write_tmu(const Document& doc) {
  std::string out = write_tmu_node(doc.root());
  out += '\n';
  for (const auto& [label, value] : doc.aux().entries()) {
    out += associate_line(label, value);
    out += '\n';
  }
  return out;
}

Document read_tmu(std::string_view text) {
  Reader r(text);
  r.skip_newlines();
  std::optional<Node> root;
  std::vector<Associate> entries;
  while (!r.at_end()) {
    const std::size_t at = r.offset();
    Node item = r.read_top();
    if (item.has_label("associate")) {
      auto a = as_associate(item);
      if (!a) throw ParseError(at, "malformed associate entry");
      entries.push_back(std::move(*a));
    } else {
      if (root || !entries.empty()) throw ParseError(at, "unexpected tree after the root");
      root = std::move(item);
    }
    r.skip_newlines();
  }
  Document doc;
  if (root) {
    if (root->has_label("document")) {
      doc.set_root(std::move(*root));
    } else {
      doc.set_root(make_node("document", {std::move(*root)}));
    }
  }
  const auto kinds = label_kinds(doc.root());
  for (auto& e : entries) {
    if (auto it = kinds.find(e.label); it != kinds.end()) e.value.kind = it->second;
    doc.aux().set(e.label, e.value);
  }
  return doc;
}

std::vector<std::string> tmu_tokens(const Node& node) {
  std::vector<std::string> out;
  collect_tokens(out, node);
  return out;
}

}  // namespace treedoc
