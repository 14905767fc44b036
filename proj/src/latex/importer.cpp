// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/importer.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_map>
#include <utility>
#include <variant>

#include "treedoc/latex/canonicalize.hpp"
#include "treedoc/latex/expander.hpp"
#include "treedoc/latex/symbols.hpp"

namespace treedoc::latex {

namespace {

enum class Mode { kText, kMath };

struct Scope {
  enum class Kind { kRoot, kGroup, kMath, kEnv, kLeftRight };
  Kind kind;
  std::string name;  // closer of a math scope, name of an environment
  Mode mode;
};

enum class Outcome { kClosed, kInterrupted, kBoundary };

// What the next token means to the open scopes.
struct Classified {
  enum class Kind { kNone, kClose, kStray, kBoundary };
  Kind kind = Kind::kNone;
  std::size_t index = 0;  // scope closed or bounded
};

constexpr auto kListEnvs = std::to_array<std::string_view>({"itemize", "enumerate", "description"});
constexpr auto kMatrixEnvs = std::to_array<std::string_view>({"pmatrix", "bmatrix", "vmatrix", "matrix", "cases"});

template <typename C>
bool contains(const C& c, std::string_view v) {
  return std::find(c.begin(), c.end(), v) != c.end();
}

Node list_node(std::vector<Node> items) {
  if (items.empty()) return Node("");
  if (items.size() == 1) return std::move(items[0]);
  return make_node("concat", std::move(items));
}

bool is_blank_leaf(const Node& n) {
  return n.is_leaf() && !n.text().empty() &&
         std::all_of(n.text().begin(), n.text().end(), [](char c) { return c == ' '; });
}

void trim_items(std::vector<Node>& items) {
  while (!items.empty() && is_blank_leaf(items.back())) items.pop_back();
  auto first = std::find_if(items.begin(), items.end(), [](const Node& n) { return !is_blank_leaf(n); });
  items.erase(items.begin(), first);
}

std::string plain_text(const Node& n) {
  if (n.is_leaf()) return n.text();
  std::string out;
  for (const auto& c : n.children()) out += plain_text(c);
  return out;
}

bool is_scope_label(const std::string& l) {
  return l == "document" || l == "math" || l == "equation" || l == "equation*" || is_theorem_like(l) ||
         l == "proof" || l == "itemize" || l == "figure" || l == "around*" || l == "cell" ||
         l.rfind("tex-env:", 0) == 0;
}

class Parser {
 public:
  Parser(ExpandResult ex, std::size_t source_size) : table_(std::move(ex.table)), end_offset_(source_size) {
    for (std::size_t i = 0; i < ex.tokens.size(); ++i) {
      if (ex.tokens[i].kind == TokenKind::kComment) continue;
      tokens_.push_back(std::move(ex.tokens[i]));
      fault_.push_back(ex.fault[i]);
    }
    diags_ = std::move(ex.diagnostics);
    sources_ = std::move(ex.sources);
  }

  Node parse_document() {
    stack_.push_back(Scope{Scope::Kind::kRoot, "", Mode::kText});
    std::vector<Node> blocks;
    parse_blocks(blocks);
    stack_.pop_back();
    return canonicalize(make_node("document", std::move(blocks)), false);
  }

  Node parse_formula() {
    stack_.push_back(Scope{Scope::Kind::kRoot, "", Mode::kMath});
    std::vector<Node> items;
    for (;;) {
      parse_list(items, Mode::kMath);
      if (at_end()) break;
      if (is_paragraph_break(tokens_[pos_])) {
        ++pos_;
        continue;
      }
      items.push_back(stray(Mode::kMath));
    }
    stack_.pop_back();
    return canonicalize(list_node(std::move(items)), true);
  }

  // Points every diagnostic at its error node and returns them in source order.
  std::vector<Diagnostic> finish(const Node& root) {
    std::vector<const Node*> chain;
    std::vector<std::size_t> path;
    locate(root, chain, path);
    std::vector<Diagnostic> out = std::move(diags_);
    std::stable_sort(out.begin(), out.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.span.begin < b.span.begin; });
    return out;
  }

  const std::string& title() const { return title_; }
  const MacroTable& table() const { return table_; }

 private:
  // ---- token access ----

  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t offset() const { return at_end() ? end_offset_ : tokens_[pos_].offset; }
  bool plain_at(std::size_t i) const { return i < tokens_.size() && fault_[i] < 0; }

  bool next_is_char(std::string_view c) const {
    return plain_at(pos_) && tokens_[pos_].kind == TokenKind::kChar && tokens_[pos_].text == c;
  }

  // Whitespace other than a paragraph break.
  void skip_space() {
    while (plain_at(pos_) && tokens_[pos_].is_space() && !is_paragraph_break(tokens_[pos_])) ++pos_;
  }

  // ---- scopes ----

  Classified classify() const {
    using K = Classified::Kind;
    using S = Scope::Kind;
    if (at_end()) return {K::kBoundary, 0};
    if (fault_[pos_] >= 0) return {};
    const Token& t = tokens_[pos_];
    const Mode mode = stack_.back().mode;
    const std::size_t top = stack_.size() - 1;
    auto scan = [&](auto&& visit) -> Classified {
      for (std::size_t i = top + 1; i-- > 0;) {
        if (auto c = visit(stack_[i], i)) return *c;
      }
      return {};
    };
    switch (t.kind) {
      case TokenKind::kGroupClose:
        return scan([](const Scope& s, std::size_t i) -> std::optional<Classified> {
          if (s.kind == S::kGroup) return Classified{K::kClose, i};
          if (s.kind == S::kLeftRight) return std::nullopt;
          return Classified{K::kStray, i};
        });
      case TokenKind::kMathShift:
        if (mode == Mode::kText) return {};
        return close_math(t.text);
      case TokenKind::kControlSymbol: {
        const std::string n = t.name();
        if (n == ")" || n == "]") {
          if (mode == Mode::kText) return {K::kStray, top};
          return close_math(t.text);
        }
        if (n == "\\") return tabular_boundary();
        return {};
      }
      case TokenKind::kAlignment:
        return tabular_boundary();
      case TokenKind::kEnvironmentEnd: {
        const std::string n = t.name();
        if (n == "document") return {K::kBoundary, 0};
        return scan([&n](const Scope& s, std::size_t i) -> std::optional<Classified> {
          if (s.kind == S::kEnv && s.name == n) return Classified{K::kClose, i};
          if (s.kind == S::kRoot) return Classified{K::kStray, i};
          return std::nullopt;
        });
      }
      case TokenKind::kControlWord: {
        const std::string n = t.name();
        if (n == "section" || n == "subsection") return {K::kBoundary, 0};
        if (n == "right") {
          return scan([](const Scope& s, std::size_t i) -> std::optional<Classified> {
            if (s.kind == S::kLeftRight) return Classified{K::kClose, i};
            if (s.kind == S::kGroup) return std::nullopt;
            return Classified{K::kStray, i};
          });
        }
        if (n == "item") {
          return scan([](const Scope& s, std::size_t i) -> std::optional<Classified> {
            if (s.kind == S::kEnv) return contains(kListEnvs, s.name) ? Classified{K::kBoundary, i} : Classified{};
            if (s.kind == S::kMath || s.kind == S::kRoot) return Classified{};
            return std::nullopt;
          });
        }
        return {};
      }
      case TokenKind::kChar:
        if (!is_paragraph_break(t)) return {};
        return scan([](const Scope& s, std::size_t i) -> std::optional<Classified> {
          if (s.kind == S::kEnv || s.kind == S::kRoot) return Classified{K::kBoundary, i};
          return std::nullopt;
        });
      default:
        return {};
    }
  }

  Classified close_math(const std::string& closer) const {
    for (std::size_t i = stack_.size(); i-- > 0;) {
      const Scope& s = stack_[i];
      if (s.kind == Scope::Kind::kMath) {
        return {s.name == closer ? Classified::Kind::kClose : Classified::Kind::kStray, i};
      }
      if (s.kind == Scope::Kind::kEnv || s.kind == Scope::Kind::kRoot || s.mode == Mode::kText) {
        return {Classified::Kind::kStray, i};
      }
    }
    return {Classified::Kind::kStray, 0};
  }

  Classified tabular_boundary() const {
    for (std::size_t i = stack_.size(); i-- > 0;) {
      const Scope& s = stack_[i];
      if (s.kind == Scope::Kind::kEnv) {
        return contains(kMatrixEnvs, s.name) ? Classified{Classified::Kind::kBoundary, i} : Classified{};
      }
      if (s.kind == Scope::Kind::kMath || s.kind == Scope::Kind::kRoot) return {};
    }
    return {};
  }

  // Parses items until the top scope is closed, bounded or interrupted.
  Outcome parse_list(std::vector<Node>& items, Mode mode) {
    for (;;) {
      const Classified c = classify();
      const std::size_t top = stack_.size() - 1;
      switch (c.kind) {
        case Classified::Kind::kClose:
          if (c.index == top) {
            ++pos_;
            return Outcome::kClosed;
          }
          forced_ = pos_;
          return Outcome::kInterrupted;
        case Classified::Kind::kBoundary:
          if (c.index == top) return Outcome::kBoundary;
          forced_ = pos_;
          return Outcome::kInterrupted;
        case Classified::Kind::kStray:
          items.push_back(stray(mode));
          continue;
        case Classified::Kind::kNone:
          break;
      }
      if (mode == Mode::kMath) {
        math_atom(items);
      } else {
        text_atom(items);
      }
    }
  }

  // Block-level loop for the document root and text environments.
  Outcome parse_blocks(std::vector<Node>& blocks) {
    std::vector<Node> para;
    auto flush = [&] {
      trim_items(para);
      if (!para.empty()) blocks.push_back(make_node("concat", std::move(para)));
      para.clear();
    };
    for (;;) {
      const Classified c = classify();
      const std::size_t top = stack_.size() - 1;
      if (c.kind == Classified::Kind::kClose) {
        flush();
        if (c.index == top) {
          ++pos_;
          return Outcome::kClosed;
        }
        forced_ = pos_;
        return Outcome::kInterrupted;
      }
      if (c.kind == Classified::Kind::kBoundary) {
        flush();
        if (c.index != top) {
          forced_ = pos_;
          return Outcome::kInterrupted;
        }
        if (at_end()) return Outcome::kBoundary;
        const Token& t = tokens_[pos_];
        if (t.kind == TokenKind::kEnvironmentEnd) {  // \end{document}
          pos_ = tokens_.size();
          return Outcome::kBoundary;
        }
        if (t.is(TokenKind::kControlWord, "item")) {
          ++pos_;
          skip_space();
          para.push_back(make_node("item"));
        } else if (t.is(TokenKind::kControlWord, "section") || t.is(TokenKind::kControlWord, "subsection")) {
          blocks.push_back(parse_section());
        } else {
          ++pos_;  // paragraph break
        }
        continue;
      }
      if (c.kind == Classified::Kind::kStray) {
        para.push_back(stray(Mode::kText));
        continue;
      }
      const Token& t = tokens_[pos_];
      if (fault_[pos_] < 0) {
        if (t.kind == TokenKind::kEnvironmentBegin) {
          if (t.name() == "document") {
            ++pos_;
            continue;
          }
          flush();
          blocks.push_back(parse_env(Mode::kText));
          continue;
        }
        if ((t.kind == TokenKind::kMathShift && t.text == "$$") || t.is(TokenKind::kControlSymbol, "[")) {
          flush();
          blocks.push_back(parse_math_scope());
          continue;
        }
      }
      text_atom(para);
    }
  }

  // ---- diagnostics ----

  std::size_t diag(FaultKind code, std::size_t begin, std::size_t end, std::string message, std::string recovery) {
    diags_.push_back(Diagnostic{code, Path(), Span{begin, std::max(begin, end)}, std::move(message),
                                std::move(recovery)});
    return diags_.size() - 1;
  }

  Node error_node(std::size_t d, const Node& content, Mode mode) {
    Node n = make_node("error", {Node(std::string(to_string(diags_[d].code))),
                                 canonicalize(content, mode == Mode::kMath)});
    error_of_[n.identity()] = d;
    return n;
  }

  std::string here() const { return "closed it at offset " + std::to_string(offset()); }

  Node stray(Mode mode) {
    const Token& t = tokens_[pos_];
    const std::size_t d = diag(FaultKind::kGenericSyntax, t.offset, t.offset + t.text.size(),
                               "unexpected " + t.text, "ignored it");
    ++pos_;
    (void)mode;
    return error_node(d, Node(t.text), Mode::kText);
  }

  Node fault_atom() {
    const auto d = static_cast<std::size_t>(fault_[pos_]);
    const std::string source = d < sources_.size() ? sources_[d] : tokens_[pos_].text;
    ++pos_;
    return error_node(d, Node(source), Mode::kText);
  }

  // A required argument of `cmd` is missing. Returns true if the caller
  // should fill in "" and go on (the scope holding it was just forced shut,
  // which already produced a diagnostic).
  bool missing_is_silent() const { return pos_ == forced_; }

  Node wrong_usage(const std::string& cmd, std::vector<Node> present, std::size_t start, int expected,
                   Mode mode) {
    const std::size_t d = diag(FaultKind::kWrongCommandUsage, start, offset(),
                               "\\" + cmd + " expects " + std::to_string(expected) + " argument" +
                                   (expected == 1 ? "" : "s") + ", found " + std::to_string(present.size()),
                               "kept the arguments that were present");
    return error_node(d, make_node("tex:" + cmd, std::move(present)), mode);
  }

  // ---- arguments ----

  std::optional<Node> read_arg(Mode mode) {
    if (mode == Mode::kMath) {
      while (plain_at(pos_) && tokens_[pos_].is_space() && classify().kind == Classified::Kind::kNone) ++pos_;
    } else {
      skip_space();
    }
    if (classify().kind != Classified::Kind::kNone) return std::nullopt;
    if (fault_[pos_] >= 0) return fault_atom();
    if (tokens_[pos_].kind == TokenKind::kGroupOpen) return parse_group(mode);
    std::vector<Node> tmp;
    if (mode == Mode::kMath) {
      math_atom(tmp);
    } else {
      text_atom(tmp);
    }
    return list_node(std::move(tmp));
  }

  // Reads `n` arguments; on a missing one returns the error node instead.
  std::variant<std::vector<Node>, Node> read_args(const std::string& cmd, int n, std::size_t start, Mode mode) {
    std::vector<Node> args;
    for (int i = 0; i < n; ++i) {
      if (auto a = read_arg(mode)) {
        args.push_back(std::move(*a));
      } else if (missing_is_silent()) {
        args.emplace_back("");
      } else {
        return wrong_usage(cmd, std::move(args), start, n, mode);
      }
    }
    return args;
  }

  // Raw text of a {key} argument.
  std::optional<std::string> read_key() {
    skip_space();
    if (!plain_at(pos_) || tokens_[pos_].kind != TokenKind::kGroupOpen) return std::nullopt;
    const std::size_t save = pos_;
    ++pos_;
    std::string key;
    int depth = 0;
    while (plain_at(pos_) && !is_paragraph_break(tokens_[pos_])) {
      const Token& t = tokens_[pos_++];
      if (t.kind == TokenKind::kGroupOpen) ++depth;
      if (t.kind == TokenKind::kGroupClose && depth-- == 0) {
        const auto b = key.find_first_not_of(" \t\n");
        const auto e = key.find_last_not_of(" \t\n");
        return b == std::string::npos ? std::string() : key.substr(b, e - b + 1);
      }
      key += t.text;
    }
    pos_ = save;
    return std::nullopt;
  }

  // Optional [..] argument parsed in `mode`.
  std::optional<Node> read_optional(Mode mode) {
    const std::size_t save = pos_;
    skip_space();
    if (!next_is_char("[")) {
      pos_ = save;
      return std::nullopt;
    }
    ++pos_;
    std::vector<Node> items;
    while (!next_is_char("]")) {
      if (classify().kind != Classified::Kind::kNone) {
        pos_ = save;
        return std::nullopt;
      }
      if (mode == Mode::kMath) {
        math_atom(items);
      } else {
        text_atom(items);
      }
    }
    ++pos_;
    return list_node(std::move(items));
  }

  // ---- constructs ----

  Node parse_group(Mode mode) {
    const std::size_t start = offset();
    ++pos_;
    stack_.push_back(Scope{Scope::Kind::kGroup, "", mode});
    std::vector<Node> items;
    const Outcome o = parse_list(items, mode);
    stack_.pop_back();
    Node body = list_node(std::move(items));
    if (o == Outcome::kClosed) return body;
    const std::size_t d = diag(FaultKind::kUnclosedBracket, start, offset(), "{ opened here is never closed", here());
    return error_node(d, body, mode);
  }

  // $..$, $$..$$, \(..\) or \[..\] starting at the current token.
  Node parse_math_scope() {
    const Token open = tokens_[pos_];
    const std::size_t start = open.offset;
    ++pos_;
    std::string closer = open.text;
    std::string label = "math";
    if (open.text == "$$") label = "equation*";
    if (open.kind == TokenKind::kControlSymbol) {
      closer = open.name() == "(" ? "\\)" : "\\]";
      if (open.name() == "[") label = "equation*";
    }
    stack_.push_back(Scope{Scope::Kind::kMath, closer, Mode::kMath});
    std::vector<Node> items;
    const Outcome o = parse_list(items, Mode::kMath);
    stack_.pop_back();
    Node node = make_node(label, {list_node(std::move(items))});
    if (o == Outcome::kClosed) return node;
    const std::size_t d = diag(FaultKind::kUnclosedBracket, start, offset(),
                               "math opened with " + open.text + " is never closed", here());
    return error_node(d, node, Mode::kText);
  }

  void parse_left_right(std::vector<Node>& items, std::size_t start) {
    skip_any_space();
    std::optional<std::string> left;
    if (plain_at(pos_)) left = delimiter_leaf(tokens_[pos_]);
    if (!left) {
      if (missing_is_silent()) return;
      items.push_back(wrong_usage("left", {}, start, 1, Mode::kMath));
      return;
    }
    ++pos_;
    stack_.push_back(Scope{Scope::Kind::kLeftRight, "", Mode::kMath});
    std::vector<Node> body;
    const Outcome o = parse_list(body, Mode::kMath);
    stack_.pop_back();
    if (o != Outcome::kClosed) {
      const std::size_t d = diag(FaultKind::kUnclosedBracket, start, offset(), "\\left has no matching \\right", here());
      items.push_back(error_node(
          d, make_node("around*", {Node(*left), list_node(std::move(body)), Node("<nobracket>")}), Mode::kMath));
      return;
    }
    skip_any_space();
    std::optional<std::string> right;
    if (plain_at(pos_)) right = delimiter_leaf(tokens_[pos_]);
    Node node = make_node("around*", {Node(*left), list_node(std::move(body)), Node(right.value_or("<nobracket>"))});
    if (right) {
      ++pos_;
      items.push_back(node);
      return;
    }
    const std::size_t d = diag(FaultKind::kWrongCommandUsage, start, offset(), "\\right needs a delimiter",
                               "used an invisible delimiter");
    items.push_back(error_node(d, node, Mode::kMath));
  }

  void skip_any_space() {
    while (plain_at(pos_) && tokens_[pos_].is_space() && !is_paragraph_break(tokens_[pos_])) ++pos_;
  }

  void parse_sized(std::vector<Node>& items, const std::string& name) {
    skip_any_space();
    std::optional<std::string> d;
    if (plain_at(pos_) && classify().kind == Classified::Kind::kNone) d = delimiter_leaf(tokens_[pos_]);
    if (!d) {
      items.push_back(make_node("tex:" + name));
      return;
    }
    ++pos_;
    const char suffix = name.back();
    if (*d == "|" && suffix != 'l' && suffix != 'm') {
      items.push_back(make_node("tex:bigvert"));
    } else {
      items.emplace_back(*d);
    }
  }

  Node parse_section() {
    const std::size_t start = offset();
    const std::string name = tokens_[pos_].name();
    ++pos_;
    bool star = false;
    if (next_is_char("*")) {
      star = true;
      ++pos_;
    }
    skip_space();
    std::vector<Node> title;
    if (plain_at(pos_) && tokens_[pos_].kind == TokenKind::kGroupOpen) {
      const std::size_t open = offset();
      ++pos_;
      stack_.push_back(Scope{Scope::Kind::kGroup, "", Mode::kText});
      const Outcome o = parse_list(title, Mode::kText);
      stack_.pop_back();
      if (o != Outcome::kClosed) {
        const std::size_t d = diag(FaultKind::kUnclosedBracket, open, offset(), "{ opened here is never closed", here());
        title = {error_node(d, list_node(std::move(title)), Mode::kText)};
      }
    } else {
      return wrong_usage(name, {}, start, 1, Mode::kText);
    }
    trim_items(title);
    const std::size_t save = pos_;
    skip_space();
    if (plain_at(pos_) && tokens_[pos_].is(TokenKind::kControlWord, "label")) {
      command(title, Mode::kText);
    } else {
      pos_ = save;
    }
    return make_node(star ? "tex:" + name + "*" : name, {list_node(std::move(title))});
  }

  Node parse_env(Mode outer) {
    const Token open = tokens_[pos_];
    const std::string name = open.name();
    const std::size_t start = open.offset;
    ++pos_;
    const std::string target = table_.environment_target(name).value_or(name);

    Node node;
    Outcome o;
    const bool math_env = target == "equation" || target == "equation*" || contains(kMatrixEnvs, target) ||
                          opens_math("tex-env:" + target) || outer == Mode::kMath;
    if (!math_env) {
      stack_.push_back(Scope{Scope::Kind::kEnv, name, Mode::kText});
      std::vector<Node> blocks;
      o = parse_blocks(blocks);
      stack_.pop_back();
      if (is_theorem_like(target) || target == "proof" || target == "itemize") {
        node = make_node(target, {make_node("document", std::move(blocks))});
      } else if (target == "figure") {
        node = make_node("figure", std::move(blocks));
      } else {
        node = make_node("tex-env:" + name, {make_node("document", std::move(blocks))});
      }
    } else if (contains(kMatrixEnvs, target)) {
      stack_.push_back(Scope{Scope::Kind::kEnv, name, Mode::kMath});
      std::vector<Node> rows, cells, cell;
      for (;;) {
        o = parse_list(cell, Mode::kMath);
        if (o != Outcome::kBoundary) break;
        const Token& b = tokens_[pos_++];
        if (b.kind == TokenKind::kChar) continue;  // blank line
        cells.push_back(make_node("cell", {list_node(std::exchange(cell, {}))}));
        if (b.kind == TokenKind::kControlSymbol) {
          rows.push_back(make_node("row", std::exchange(cells, {})));
        }
      }
      stack_.pop_back();
      if (!cell.empty() || !cells.empty()) {
        cells.push_back(make_node("cell", {list_node(std::move(cell))}));
        rows.push_back(make_node("row", std::move(cells)));
      }
      if (target == "cases") {
        node = make_node("cases", std::move(rows));
      } else if (target == "matrix") {
        node = make_node("matrix", std::move(rows));
      } else {
        const std::string l = target == "pmatrix" ? "(" : target == "bmatrix" ? "[" : "|";
        const std::string r = target == "pmatrix" ? ")" : target == "bmatrix" ? "]" : "|";
        node = make_node("around*", {Node(l), make_node("matrix", std::move(rows)), Node(r)});
      }
    } else {
      stack_.push_back(Scope{Scope::Kind::kEnv, name, Mode::kMath});
      std::vector<Node> items;
      for (;;) {
        o = parse_list(items, Mode::kMath);
        if (o != Outcome::kBoundary) break;
        ++pos_;
      }
      stack_.pop_back();
      const bool known = target == "equation" || target == "equation*";
      node = make_node(known ? target : "tex-env:" + name, {list_node(std::move(items))});
    }
    if (o == Outcome::kClosed) return node;
    const std::size_t d = diag(FaultKind::kUnclosedEnvironment, start, offset(),
                               "\\begin{" + name + "} has no matching \\end{" + name + "}", here());
    return error_node(d, node, outer);
  }

  // ---- atoms ----

  void add_space(std::vector<Node>& items) {
    if (!items.empty() && items.back().is_leaf() && items.back().text() == " ") return;
    items.emplace_back(" ");
  }

  static std::string char_leaf(const std::string& c) {
    if (c == "<") return "<less>";
    if (c == ">") return "<gtr>";
    return c;
  }

  void text_atom(std::vector<Node>& items) {
    if (fault_[pos_] >= 0) {
      items.push_back(fault_atom());
      return;
    }
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case TokenKind::kChar:
        ++pos_;
        if (t.is_space() || t.text == "~") {
          add_space(items);
        } else {
          items.emplace_back(char_leaf(t.text));
        }
        return;
      case TokenKind::kGroupOpen:
        items.push_back(parse_group(Mode::kText));
        return;
      case TokenKind::kMathShift:
        items.push_back(parse_math_scope());
        return;
      case TokenKind::kEnvironmentBegin:
        items.push_back(parse_env(Mode::kText));
        return;
      case TokenKind::kControlSymbol:
        if (t.name() == "(" || t.name() == "[") {
          items.push_back(parse_math_scope());
          return;
        }
        control_symbol(items, Mode::kText);
        return;
      case TokenKind::kControlWord:
        command(items, Mode::kText);
        return;
      default:
        items.emplace_back(t.text);
        ++pos_;
        return;
    }
  }

  void math_atom(std::vector<Node>& items) {
    if (fault_[pos_] >= 0) {
      items.push_back(fault_atom());
      return;
    }
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case TokenKind::kChar:
        ++pos_;
        if (!t.is_space() && t.text != "~") items.emplace_back(char_leaf(t.text));
        return;
      case TokenKind::kGroupOpen:
        items.push_back(parse_group(Mode::kMath));
        return;
      case TokenKind::kSuperscript:
      case TokenKind::kSubscript: {
        const std::size_t start = t.offset;
        const bool sup = t.kind == TokenKind::kSuperscript;
        ++pos_;
        if (auto a = read_arg(Mode::kMath)) {
          items.push_back(make_node(sup ? "rsup" : "rsub", {std::move(*a)}));
        } else if (missing_is_silent()) {
          items.push_back(make_node(sup ? "rsup" : "rsub", {Node("")}));
        } else {
          const std::size_t d = diag(FaultKind::kWrongCommandUsage, start, offset(),
                                     std::string(sup ? "superscript" : "subscript") + " without an argument",
                                     "dropped the script");
          items.push_back(error_node(d, Node(sup ? "^" : "_"), Mode::kText));
        }
        return;
      }
      case TokenKind::kEnvironmentBegin:
        items.push_back(parse_env(Mode::kMath));
        return;
      case TokenKind::kControlSymbol:
        control_symbol(items, Mode::kMath);
        return;
      case TokenKind::kControlWord:
        command(items, Mode::kMath);
        return;
      default:
        items.emplace_back(t.text);
        ++pos_;
        return;
    }
  }

  std::vector<Node> adjacent_groups(Mode mode) {
    std::vector<Node> args;
    while (plain_at(pos_) && tokens_[pos_].kind == TokenKind::kGroupOpen) args.push_back(parse_group(mode));
    return args;
  }

  void control_symbol(std::vector<Node>& items, Mode mode) {
    const Token& t = tokens_[pos_];
    const std::string name = t.name();
    if (name.empty()) {
      items.push_back(stray(mode));
      return;
    }
    ++pos_;
    if (name == "\\") {
      items.push_back(make_node("tex:\\"));
      return;
    }
    if (is_spacing_command(name)) {
      if (mode == Mode::kText) add_space(items);
      return;
    }
    if (auto leaf = control_symbol_leaf(name)) {
      items.emplace_back(*leaf);
      return;
    }
    items.push_back(make_node("tex:" + name, adjacent_groups(mode)));
  }

  void command(std::vector<Node>& items, Mode mode) {
    const Token& t = tokens_[pos_];
    const std::string name = t.name();
    const std::size_t start = t.offset;
    ++pos_;
    if (mode == Mode::kText) skip_space();

    auto take = [&](int n, Mode arg_mode, auto&& build) {
      auto r = read_args(name, n, start, arg_mode);
      if (auto* err = std::get_if<Node>(&r)) {
        items.push_back(std::move(*err));
      } else {
        build(std::get<std::vector<Node>>(std::move(r)));
      }
    };

    if (name == "label" || name == "ref" || name == "eqref" || name == "cite") {
      auto key = read_key();
      if (!key) {
        if (!missing_is_silent()) items.push_back(wrong_usage(name, {}, start, 1, mode));
        return;
      }
      const std::string label = name == "label" ? "label" : name == "cite" ? "cite" : "reference";
      items.push_back(make_node(label, {Node(*key)}));
      return;
    }
    if (name == "frac") {
      take(2, mode, [&](std::vector<Node> a) { items.push_back(make_node("frac", std::move(a))); });
      return;
    }
    if (name == "sqrt") {
      auto index = read_optional(mode);
      take(1, mode, [&](std::vector<Node> a) {
        if (index) {
          items.push_back(make_node("tex:sqrt", {std::move(*index), std::move(a[0])}));
        } else {
          items.push_back(make_node("sqrt", std::move(a)));
        }
      });
      return;
    }
    if (name == "over") {
      items.push_back(make_node("tex:over"));
      return;
    }
    if (name == "left") {
      parse_left_right(items, start);
      return;
    }
    if (name == "title") {
      take(1, Mode::kText, [&](std::vector<Node> a) { title_ = plain_text(canonicalize(a[0], false)); });
      return;
    }
    if (name == "documentclass" || name == "usepackage") {
      read_optional(Mode::kText);
      if (!read_key() && !missing_is_silent()) items.push_back(wrong_usage(name, {}, start, 1, Mode::kText));
      return;
    }
    if (name == "author" || name == "date") {
      take(1, Mode::kText, [](std::vector<Node>) {});
      return;
    }
    if (name == "maketitle") return;
    if (name == "item") {
      items.push_back(make_node("item"));
      return;
    }
    if (is_big_operator(name)) {
      items.push_back(make_node("big", {Node(name)}));
      return;
    }
    if (is_size_command(name)) {
      parse_sized(items, name);
      return;
    }
    if (is_spacing_command(name)) {
      if (mode == Mode::kText) add_space(items);
      return;
    }
    if (opens_text("tex:" + name)) {
      items.push_back(make_node("tex:" + name, adjacent_groups(Mode::kText)));
      return;
    }
    if (auto leaf = symbol_leaf(name)) {
      items.emplace_back(*leaf);
      return;
    }
    if (auto delim = delimiter_leaf(t)) {
      items.emplace_back(*delim);
      return;
    }
    items.push_back(make_node("tex:" + name, adjacent_groups(mode)));
  }

  // ---- anchors ----

  void locate(const Node& n, std::vector<const Node*>& chain, std::vector<std::size_t>& path) {
    if (n.is_leaf()) return;
    if (n.has_label("error")) {
      auto it = error_of_.find(n.identity());
      if (it != error_of_.end()) {
        const FaultKind code = diags_[it->second].code;
        const bool scoped = code == FaultKind::kUnclosedBracket || code == FaultKind::kUnclosedEnvironment;
        std::size_t depth = chain.size();
        while (depth > 0) {
          const std::string& l = chain[depth - 1]->label();
          if (scoped ? is_scope_label(l) : l != "concat") break;
          --depth;
        }
        diags_[it->second].anchor = Path(std::vector<std::size_t>(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(
                                                                                   depth == 0 ? 0 : depth - 1)));
      }
    }
    chain.push_back(&n);
    for (std::size_t i = 0; i < n.arity(); ++i) {
      path.push_back(i);
      locate(n.child(i), chain, path);
      path.pop_back();
    }
    chain.pop_back();
  }

  TokenStream tokens_;
  std::vector<int> fault_;
  std::vector<Diagnostic> diags_;
  std::vector<std::string> sources_;
  MacroTable table_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
  std::size_t forced_ = static_cast<std::size_t>(-1);
  std::vector<Scope> stack_;
  std::unordered_map<const void*, std::size_t> error_of_;
  std::string title_;
};

ExpandResult expand_source(std::string_view src, const MacroTable& table, const ImportOptions& options) {
  ExpandOptions eo;
  eo.depth_limit = options.depth_limit;
  return expand_macros(tokenize(src), table, eo);
}

}  // namespace

ImportResult import_latex(std::string_view src, const MacroTable& table, const ImportOptions& options) {
  Parser parser(expand_source(src, table, options), src.size());
  Node root = parser.parse_document();
  std::vector<Diagnostic> diags = parser.finish(root);
  Document doc(std::move(root), parser.title());
  doc.style() = parser.table();
  return ImportResult{std::move(doc), std::move(diags)};
}

FormulaImport import_formula(std::string_view src, const MacroTable& table, const ImportOptions& options) {
  Parser parser(expand_source(src, table, options), src.size());
  Node tree = parser.parse_formula();
  std::vector<Diagnostic> diags = parser.finish(tree);
  return FormulaImport{std::move(tree), std::move(diags)};
}

}  // namespace treedoc::latex
