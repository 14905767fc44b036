// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/expander.hpp"

#include <memory>
#include <optional>

#include "treedoc/error.hpp"

namespace treedoc::latex {

namespace {

// Macros whose expansion produced a token, innermost first.
struct Chain {
  std::string name;
  std::shared_ptr<const Chain> parent;
  int depth = 0;
};

using ChainPtr = std::shared_ptr<const Chain>;

bool chain_contains(const ChainPtr& c, const std::string& name) {
  for (const Chain* p = c.get(); p; p = p->parent.get()) {
    if (p->name == name) return true;
  }
  return false;
}

struct Item {
  Token tok;
  ChainPtr chain;
};

class Expander {
 public:
  Expander(const TokenStream& ts, const MacroTable& table, const ExpandOptions& options)
      : options_(options) {
    result_.table = table;
    input_.reserve(ts.size());
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) input_.push_back(Item{*it, nullptr});
  }

  ExpandResult run() {
    while (!input_.empty()) {
      Item item = pop();
      if (stopped_ || item.tok.kind != TokenKind::kControlWord) {
        emit(std::move(item.tok));
        continue;
      }
      const std::string name = item.tok.name();
      if (options_.definitions && (name == "newcommand" || name == "renewcommand" ||
                                   name == "providecommand")) {
        if (!read_command_definition(item, name)) emit(std::move(item.tok));
        continue;
      }
      if (options_.definitions && name == "newtheorem") {
        if (!read_theorem_definition(item)) emit(std::move(item.tok));
        continue;
      }
      const MacroDef* def = result_.table.find(name);
      if (!def) {
        emit(std::move(item.tok));
        continue;
      }
      expand(std::move(item), *def);
    }
    return std::move(result_);
  }

 private:
  Item pop() {
    Item it = std::move(input_.back());
    input_.pop_back();
    return it;
  }

  void push_back_items(std::vector<Item>& taken) {
    for (auto it = taken.rbegin(); it != taken.rend(); ++it) input_.push_back(std::move(*it));
    taken.clear();
  }

  void emit(Token t, int fault = -1) {
    if (!stopped_ && result_.tokens.size() >= options_.max_tokens) {
      stopped_ = true;
      const int d = add_diagnostic(FaultKind::kGenericSyntax, t.offset, t.offset,
                                   "macro expansion exceeded " + std::to_string(options_.max_tokens) +
                                       " tokens",
                                   "stopped expanding; remaining input kept verbatim", t.text);
      result_.tokens.push_back(Token{TokenKind::kChar, "", t.offset});
      result_.fault.push_back(d);
    }
    result_.tokens.push_back(std::move(t));
    result_.fault.push_back(fault);
  }

  int add_diagnostic(FaultKind code, std::size_t begin, std::size_t end, std::string message,
                     std::string recovery, std::string source) {
    result_.diagnostics.push_back(Diagnostic{code, Path(), Span{begin, end}, std::move(message),
                                             std::move(recovery)});
    result_.sources.push_back(std::move(source));
    return static_cast<int>(result_.diagnostics.size() - 1);
  }

  // Skips whitespace and comments, collecting them into `taken`.
  void skip_space(std::vector<Item>& taken) {
    while (!input_.empty() && (input_.back().tok.is_space() || input_.back().tok.kind == TokenKind::kComment)) {
      taken.push_back(pop());
    }
  }

  // Reads a brace group (returning its inner items) or a single token.
  // Returns nullopt at end of input or before a closing token.
  std::optional<std::vector<Item>> read_argument(std::vector<Item>& taken) {
    skip_space(taken);
    if (input_.empty()) return std::nullopt;
    const TokenKind k = input_.back().tok.kind;
    if (k == TokenKind::kGroupClose || k == TokenKind::kEnvironmentEnd || k == TokenKind::kMathShift ||
        k == TokenKind::kAlignment) {
      return std::nullopt;
    }
    if (k != TokenKind::kGroupOpen) {
      taken.push_back(pop());
      return std::vector<Item>{taken.back()};
    }
    taken.push_back(pop());
    std::vector<Item> inner;
    int depth = 1;
    while (!input_.empty()) {
      Item it = pop();
      taken.push_back(it);
      if (it.tok.kind == TokenKind::kGroupOpen) ++depth;
      if (it.tok.kind == TokenKind::kGroupClose && --depth == 0) return inner;
      inner.push_back(std::move(it));
    }
    return std::nullopt;
  }

  // "[...]" directly after optional whitespace; returns the inner text.
  std::optional<std::string> read_bracket(std::vector<Item>& taken) {
    std::vector<Item> local;
    skip_space(local);
    if (input_.empty() || input_.back().tok.kind != TokenKind::kChar || input_.back().tok.text != "[") {
      push_back_items(local);
      return std::nullopt;
    }
    local.push_back(pop());
    std::string text;
    while (!input_.empty()) {
      Item it = pop();
      local.push_back(it);
      if (it.tok.kind == TokenKind::kChar && it.tok.text == "]") {
        for (auto& l : local) taken.push_back(std::move(l));
        return text;
      }
      text += it.tok.text;
    }
    push_back_items(local);
    return std::nullopt;
  }

  static std::string text_of(const std::vector<Item>& items) {
    std::string s;
    for (const auto& i : items) s += i.tok.text;
    return s;
  }

  bool read_command_definition(const Item& head, const std::string& kind) {
    std::vector<Item> taken;
    auto fail = [&] {
      push_back_items(taken);
      return false;
    };
    if (!input_.empty() && input_.back().tok.kind == TokenKind::kChar && input_.back().tok.text == "*") {
      taken.push_back(pop());
    }
    auto target = read_argument(taken);
    if (!target || target->size() != 1 || (*target)[0].tok.kind != TokenKind::kControlWord) return fail();
    const std::string name = (*target)[0].tok.name();
    int params = 0;
    if (auto n = read_bracket(taken)) {
      if (n->size() != 1 || (*n)[0] < '0' || (*n)[0] > '9') return fail();
      params = (*n)[0] - '0';
    }
    read_bracket(taken);  // optional default for #1; not modeled
    auto body = read_argument(taken);
    if (!body) return fail();
    MacroDef def;
    def.name = name;
    def.params = params;
    for (auto& b : *body) def.body.push_back(b.tok);
    def.origin = MacroOrigin{"", head.tok.offset};
    const std::string source = head.tok.text + text_of(taken);
    const std::size_t end = taken.empty() ? head.tok.offset : taken.back().tok.offset + taken.back().tok.text.size();
    if (kind == "renewcommand") {
      result_.table.redefine(std::move(def));
      return true;
    }
    if (kind == "providecommand") {
      if (!result_.table.find(name)) result_.table.define(std::move(def));
      return true;
    }
    if (result_.table.define(std::move(def)) == DefineResult::kConflict) {
      const int d = add_diagnostic(FaultKind::kConflictingDefinition, head.tok.offset, end,
                                   "\\" + name + " is already defined with a different body",
                                   "kept the first definition", source);
      emit(Token{TokenKind::kChar, "", head.tok.offset}, d);
    }
    return true;
  }

  bool read_theorem_definition(const Item& head) {
    std::vector<Item> taken;
    auto fail = [&] {
      push_back_items(taken);
      return false;
    };
    auto env = read_argument(taken);
    if (!env || env->empty()) return fail();
    read_bracket(taken);
    auto title = read_argument(taken);
    if (!title) return fail();
    read_bracket(taken);
    const std::string alias = text_of(*env);
    const auto canonical = theorem_label_for_title(text_of(*title));
    if (!canonical) return true;
    if (result_.table.alias_environment(alias, *canonical) == DefineResult::kConflict) {
      const std::size_t end = taken.back().tok.offset + taken.back().tok.text.size();
      const int d = add_diagnostic(FaultKind::kConflictingDefinition, head.tok.offset, end,
                                   "environment " + alias + " is already defined differently",
                                   "kept the first definition", head.tok.text + text_of(taken));
      emit(Token{TokenKind::kChar, "", head.tok.offset}, d);
    }
    return true;
  }

  void expand(Item call, const MacroDef& def) {
    const std::string& name = def.name;
    const int depth = call.chain ? call.chain->depth : 0;
    if (chain_contains(call.chain, name) || depth >= options_.depth_limit) {
      const int d = add_diagnostic(
          FaultKind::kSelfRecursiveMacro, call.tok.offset, call.tok.offset + call.tok.text.size(),
          chain_contains(call.chain, name) ? "\\" + name + " expands to itself"
                                           : "\\" + name + " exceeds the expansion depth limit of " +
                                                 std::to_string(options_.depth_limit),
          "left \\" + name + " unexpanded", call.tok.text);
      emit(std::move(call.tok), d);
      return;
    }
    std::vector<Item> taken;
    std::vector<std::vector<Item>> args;
    for (int i = 0; i < def.params; ++i) {
      auto a = read_argument(taken);
      if (!a) {
        push_back_items(taken);
        const int d = add_diagnostic(
            FaultKind::kWrongCommandUsage, call.tok.offset, call.tok.offset + call.tok.text.size(),
            "\\" + name + " expects " + std::to_string(def.params) + " arguments, found " + std::to_string(i),
            "skipped the call", call.tok.text);
        emit(std::move(call.tok), d);
        return;
      }
      args.push_back(std::move(*a));
    }
    auto chain = std::make_shared<const Chain>(Chain{name, call.chain, depth + 1});
    std::vector<Item> out;
    const auto& body = def.body;
    for (std::size_t i = 0; i < body.size(); ++i) {
      const Token& t = body[i];
      if (t.kind == TokenKind::kChar && t.text == "#" && i + 1 < body.size()) {
        const Token& n = body[i + 1];
        if (n.kind == TokenKind::kChar && n.text.size() == 1 && n.text[0] >= '1' && n.text[0] <= '9') {
          const auto k = static_cast<std::size_t>(n.text[0] - '1');
          if (k < args.size()) {
            for (const auto& a : args[k]) out.push_back(a);
          }
          ++i;
          continue;
        }
        if (n.kind == TokenKind::kChar && n.text == "#") {
          out.push_back(Item{Token{TokenKind::kChar, "#", call.tok.offset}, chain});
          ++i;
          continue;
        }
      }
      out.push_back(Item{Token{t.kind, t.text, call.tok.offset}, chain});
    }
    push_back_items(out);
  }

  ExpandOptions options_;
  ExpandResult result_;
  std::vector<Item> input_;  // reversed: next token at the back
  bool stopped_ = false;
};

}  // namespace

ExpandResult expand_macros(const TokenStream& ts, const MacroTable& table, int depth_limit) {
  ExpandOptions options;
  options.depth_limit = depth_limit;
  return expand_macros(ts, table, options);
}

ExpandResult expand_macros(const TokenStream& ts, const MacroTable& table, const ExpandOptions& options) {
  if (options.depth_limit < 1) throw Error("depth_limit must be at least 1");
  return Expander(ts, table, options).run();
}

}  // namespace treedoc::latex
