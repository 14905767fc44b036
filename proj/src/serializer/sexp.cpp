// SPDX-License-Identifier: Apache-2.0

#include "treedoc/serializer/sexp.hpp"

#include <cctype>
#include <vector>

#include "treedoc/error.hpp"

namespace treedoc {

namespace {

bool is_delimiter(char c) {
  return c == '(' || c == ')' || c == '"' || c == '|' || c == ';' || c == '\\' ||
         std::isspace(static_cast<unsigned char>(c));
}

bool needs_bars(const std::string& label) {
  for (char c : label) {
    if (is_delimiter(c)) return true;
  }
  return false;
}

void write_quoted(std::string& out, const std::string& text, char quote) {
  out += quote;
  for (char c : text) {
    if (c == quote || c == '\\') out += '\\';
    out += c;
  }
  out += quote;
}

void write(std::string& out, const Node& node) {
  if (node.is_leaf()) {
    write_quoted(out, node.text(), '"');
    return;
  }
  out += '(';
  if (needs_bars(node.label())) {
    write_quoted(out, node.label(), '|');
  } else {
    out += node.label();
  }
  for (const auto& c : node.children()) {
    out += ' ';
    write(out, c);
  }
  out += ')';
}

void collect_tokens(std::vector<std::string>& out, const Node& node) {
  if (node.is_leaf()) {
    std::string leaf;
    write_quoted(leaf, node.text(), '"');
    out.push_back(std::move(leaf));
    return;
  }
  std::string open = "(";
  if (needs_bars(node.label())) {
    write_quoted(open, node.label(), '|');
  } else {
    open += node.label();
  }
  out.push_back(std::move(open));
  for (const auto& c : node.children()) collect_tokens(out, c);
  out.emplace_back(")");
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Node read_all() {
    skip_space();
    Node n = read_node(0);
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters after expression");
    return n;
  }

 private:
  static constexpr std::size_t kMaxDepth = 10000;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_quoted(char quote) {
    const std::size_t start = pos_;
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) {
        throw ParseError(text_.size(), std::string("unterminated ") +
                                           (quote == '"' ? "string" : "symbol") +
                                           " starting at offset " + std::to_string(start));
      }
      char c = text_[pos_++];
      if (c == quote) break;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw ParseError(text_.size(), "dangling escape");
        c = text_[pos_++];
      }
      out += c;
    }
    return out;
  }

  Node read_node(std::size_t depth) {
    if (depth > kMaxDepth) throw ParseError(pos_, "nesting too deep");
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '"') return Node(read_quoted('"'));
    if (c != '(') throw ParseError(pos_, std::string("expected '(' or '\"', found '") + c + "'");
    const std::size_t open = pos_;
    ++pos_;
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input after '('");
    std::string label;
    if (text_[pos_] == '|') {
      label = read_quoted('|');
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
      label = std::string(text_.substr(start, pos_ - start));
    }
    if (label.empty()) throw ParseError(pos_, "expected a label after '('");
    std::vector<Node> kids;
    while (true) {
      const std::size_t before = pos_;
      skip_space();
      if (pos_ >= text_.size()) {
        throw ParseError(pos_, "unbalanced parentheses: '(' at offset " + std::to_string(open) +
                                   " is never closed");
      }
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (pos_ == before && !kids.empty()) {
        throw ParseError(pos_, "expected whitespace between children");
      }
      kids.push_back(read_node(depth + 1));
    }
    try {
      return make_node(label, std::move(kids));
    } catch (const ArityError& e) {
      throw ParseError(open, e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string write_sexp(const Node& node) {
  std::string out;
  write(out, node);
  return out;
}

Node read_sexp(std::string_view text) { return Reader(text).read_all(); }

std::string write_sexp_document(const Document& doc) {
  const Node& root = doc.root();
  if (root.arity() == 1 && root.child(0).is_compound() && !root.child(0).has_label("document")) {
    return write_sexp(root.child(0));
  }
  return write_sexp(root);
}

Document read_sexp_document(std::string_view text) {
  Node n = read_sexp(text);
  if (n.has_label("document")) return Document(std::move(n));
  return Document(make_node("document", {std::move(n)}));
}

std::vector<std::string> sexp_tokens(const Node& node) {
  std::vector<std::string> out;
  collect_tokens(out, node);
  return out;
}

}  // namespace treedoc
