// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/canonicalize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace treedoc::latex {

namespace {

constexpr auto kDisplayMathEnvs = std::to_array<std::string_view>({
    "align", "align*", "gather", "gather*", "multline", "multline*", "eqnarray", "eqnarray*",
    "flalign", "flalign*", "alignat", "alignat*", "displaymath",
});

constexpr auto kTextCommands = std::to_array<std::string_view>({
    "text", "textrm", "textbf", "textit", "textsf", "texttt", "textnormal", "textup", "textsc",
    "emph", "mbox", "hbox", "section*", "subsection*",
});

// One bracket character: its kind (0..3 for () [] {} ⟨⟩) and direction.
struct Bracket {
  int kind = 0;
  bool open = false;
};

std::optional<Bracket> bracket_of(std::string_view s) {
  if (s == "(") return Bracket{0, true};
  if (s == ")") return Bracket{0, false};
  if (s == "[") return Bracket{1, true};
  if (s == "]") return Bracket{1, false};
  if (s == "{") return Bracket{2, true};
  if (s == "}") return Bracket{2, false};
  if (s == "⟨") return Bracket{3, true};
  if (s == "⟩") return Bracket{3, false};
  return std::nullopt;
}

std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

bool has_bracket(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const std::size_t n = std::min(utf8_length(static_cast<unsigned char>(s[i])), s.size() - i);
    if (bracket_of(s.substr(i, n))) return true;
    i += n;
  }
  return false;
}

Node list_node(std::vector<Node> items) {
  if (items.empty()) return Node("");
  if (items.size() == 1) return std::move(items[0]);
  return make_node("concat", std::move(items));
}

bool is_marker(const Node& n, std::string_view label) { return n.has_label(label) && n.arity() == 0; }

// Flattens nested concats, drops empty leaves and merges adjacent leaves.
std::vector<Node> flatten_merge(const std::vector<Node>& items) {
  std::vector<Node> out;
  auto add = [&out](const Node& n) {
    if (n.is_leaf()) {
      if (n.text().empty()) return;
      if (!out.empty() && out.back().is_leaf()) {
        out.back() = Node(out.back().text() + n.text());
        return;
      }
    }
    out.push_back(n);
  };
  for (const auto& n : items) {
    if (n.has_label("concat")) {
      for (const auto& c : n.children()) add(c);
    } else {
      add(n);
    }
  }
  return out;
}

std::vector<Node> normalize_list(const std::vector<Node>& items, bool math);

// Splits leaves at bracket characters and pairs matching brackets into
// around* nodes. Unpaired brackets stay as text.
std::vector<Node> match_brackets(const std::vector<Node>& items) {
  struct Frame {
    std::string open;
    int kind = -1;
    std::vector<Node> items;
  };
  std::vector<Frame> stack(1);
  auto push_item = [&stack](Node n) { stack.back().items.push_back(std::move(n)); };
  for (const auto& n : items) {
    if (!n.is_leaf() || !has_bracket(n.text())) {
      push_item(n);
      continue;
    }
    const std::string& s = n.text();
    std::string run;
    for (std::size_t i = 0; i < s.size();) {
      const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(s[i])), s.size() - i);
      const std::string piece = s.substr(i, len);
      i += len;
      const auto b = bracket_of(piece);
      if (!b) {
        run += piece;
        continue;
      }
      if (!run.empty()) push_item(Node(std::exchange(run, {})));
      if (b->open) {
        stack.push_back(Frame{piece, b->kind, {}});
      } else if (stack.size() > 1 && stack.back().kind == b->kind) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        push_item(make_node("around*", {Node(f.open), list_node(normalize_list(f.items, true)), Node(piece)}));
      } else {
        push_item(Node(piece));
      }
    }
    if (!run.empty()) push_item(Node(run));
  }
  while (stack.size() > 1) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    push_item(Node(f.open));
    for (auto& n : f.items) push_item(std::move(n));
  }
  return std::move(stack.back().items);
}

std::vector<Node> normalize_list(const std::vector<Node>& items, bool math) {
  const auto overs = std::count_if(items.begin(), items.end(), [](const Node& n) { return is_marker(n, "tex:over"); });
  if (overs == 1) {
    const auto it = std::find_if(items.begin(), items.end(), [](const Node& n) { return is_marker(n, "tex:over"); });
    const std::vector<Node> before(items.begin(), it);
    const std::vector<Node> after(it + 1, items.end());
    return {make_node("frac", {list_node(normalize_list(before, math)), list_node(normalize_list(after, math))})};
  }
  std::vector<Node> out = flatten_merge(items);
  if (math) out = flatten_merge(match_brackets(out));
  if (std::any_of(out.begin(), out.end(), [](const Node& n) { return is_marker(n, "tex:bigvert"); })) {
    std::vector<Node> wrapped;
    for (auto& n : out) {
      if (!is_marker(n, "tex:bigvert")) {
        wrapped.push_back(std::move(n));
        continue;
      }
      Node prev("");
      if (!wrapped.empty()) {
        prev = std::move(wrapped.back());
        wrapped.pop_back();
      }
      wrapped.push_back(make_node("around*", {Node("<nobracket>"), std::move(prev), Node("|")}));
    }
    out = flatten_merge(wrapped);
  }
  return out;
}

Node canon(const Node& n, bool math) {
  if (n.is_leaf()) {
    if (!math || !has_bracket(n.text())) return n;
    Node r = list_node(normalize_list({n}, true));
    return struct_eq(r, n) ? n : r;
  }
  const std::string& l = n.label();
  if (l == "error" || l == "label" || l == "reference" || l == "cite") return n;
  bool inner = math;
  if (opens_math(l)) inner = true;
  else if (opens_text(l)) inner = false;

  std::vector<Node> kids;
  kids.reserve(n.arity());
  bool changed = false;
  for (std::size_t i = 0; i < n.arity(); ++i) {
    const Node& c = n.child(i);
    const bool protect = l == "big" || (l == "around*" && i != 1);
    kids.push_back(protect ? c : canon(c, inner));
    changed = changed || !kids.back().same_object(c);
  }

  Node r = n;
  if (l == "concat") {
    r = list_node(normalize_list(kids, inner));
  } else if (l == "tex:mathrm" && kids.size() == 1 && kids[0].is_leaf() && kids[0].text() == "d") {
    r = Node("<mathd>");
  } else if (l == "tex:mathbb" && kids.size() == 1 && kids[0].is_leaf() && kids[0].text().size() == 1 &&
             std::isupper(static_cast<unsigned char>(kids[0].text()[0]))) {
    r = Node("<bbb" + kids[0].text() + ">");
  } else if (changed) {
    r = make_node(l, std::move(kids));
  }
  if (!r.same_object(n) && struct_eq(r, n)) return n;
  return r;
}

}  // namespace

bool opens_math(std::string_view label) {
  if (label == "math" || label == "equation" || label == "equation*") return true;
  if (label.substr(0, 8) == "tex-env:") {
    return std::find(kDisplayMathEnvs.begin(), kDisplayMathEnvs.end(), label.substr(8)) != kDisplayMathEnvs.end();
  }
  return false;
}

bool opens_text(std::string_view label) {
  if (label.substr(0, 4) != "tex:") return false;
  return std::find(kTextCommands.begin(), kTextCommands.end(), label.substr(4)) != kTextCommands.end();
}

Node canonicalize(const Node& n, bool math) { return canon(n, math); }

Document canonicalize(const Document& d) {
  Document out = d;
  out.set_root(canon(d.root(), false));
  return out;
}

}  // namespace treedoc::latex
