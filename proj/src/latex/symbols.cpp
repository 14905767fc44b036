// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/symbols.hpp"

#include <algorithm>
#include <array>

namespace treedoc::latex {

namespace {

struct Alias {
  std::string_view command;
  std::string_view entity;
};

// Commands whose entity name is the command name itself.
constexpr auto kPlainSymbols = std::to_array<std::string_view>({
    // Greek
    "alpha", "beta", "gamma", "delta", "epsilon", "varepsilon", "zeta", "eta", "theta",
    "vartheta", "iota", "kappa", "lambda", "mu", "nu", "xi", "pi", "varpi", "rho", "sigma",
    "tau", "upsilon", "phi", "varphi", "chi", "psi", "omega", "Gamma", "Delta", "Theta",
    "Lambda", "Xi", "Pi", "Sigma", "Upsilon", "Phi", "Psi", "Omega",
    // operators and relations
    "infty", "partial", "nabla", "cdot", "cdots", "ldots", "times", "div", "pm", "mp", "leq",
    "geq", "neq", "approx", "equiv", "sim", "in", "notin", "subset", "subseteq", "supset",
    "cup", "cap", "forall", "exists", "neg", "land", "lor", "rightarrow", "leftarrow",
    "Rightarrow", "Leftrightarrow", "mapsto", "circ", "emptyset", "mid",
    // function names
    "sin", "cos", "tan", "log", "ln", "exp", "max", "min", "det", "gcd",
});

constexpr std::array kAliases = {
    Alias{"le", "leq"},   Alias{"ge", "geq"},      Alias{"ne", "neq"},
    Alias{"to", "rightarrow"}, Alias{"gets", "leftarrow"}, Alias{"lnot", "neg"},
    Alias{"wedge", "land"}, Alias{"vee", "lor"},
};

constexpr auto kBigOperators = std::to_array<std::string_view>({
    "int", "sum", "prod", "lim", "oint", "coprod", "bigcup", "bigcap", "iint",
});

constexpr auto kSpacing = std::to_array<std::string_view>({
    ",", ";", ":", "!", " ", "quad", "qquad", "enspace",
});

constexpr auto kSizes = std::to_array<std::string_view>({
    "big", "Big", "bigg", "Bigg", "bigl", "Bigl", "biggl", "Biggl",
    "bigr", "Bigr", "biggr", "Biggr", "bigm", "Bigm", "biggm", "Biggm",
});

template <typename C>
bool contains(const C& c, std::string_view v) {
  return std::find(c.begin(), c.end(), v) != c.end();
}

bool is_upper_letter(std::string_view s) { return s.size() == 1 && s[0] >= 'A' && s[0] <= 'Z'; }

}  // namespace

std::optional<std::string> symbol_leaf(std::string_view command) {
  if (contains(kPlainSymbols, command)) return "<" + std::string(command) + ">";
  for (const auto& a : kAliases) {
    if (a.command == command) return "<" + std::string(a.entity) + ">";
  }
  if (command == "textbackslash") return std::string("\\");
  if (command == "textasciicircum") return std::string("^");
  if (command == "textasciitilde") return std::string("~");
  return std::nullopt;
}

std::optional<std::string> entity_source(std::string_view entity) {
  if (contains(kPlainSymbols, entity)) return "\\" + std::string(entity);
  if (entity == "mathd") return std::string("\\mathrm{d}");
  if (entity == "less") return std::string("<");
  if (entity == "gtr") return std::string(">");
  if (entity.size() == 4 && entity.substr(0, 3) == "bbb" && is_upper_letter(entity.substr(3))) {
    return "\\mathbb{" + std::string(entity.substr(3)) + "}";
  }
  return std::nullopt;
}

bool is_big_operator(std::string_view command) { return contains(kBigOperators, command); }

bool is_spacing_command(std::string_view command) { return contains(kSpacing, command); }

bool is_size_command(std::string_view command) { return contains(kSizes, command); }

std::optional<std::string> delimiter_leaf(const Token& t) {
  if (t.kind == TokenKind::kChar) {
    if (t.text == "(" || t.text == ")" || t.text == "[" || t.text == "]" || t.text == "|") return t.text;
    if (t.text == ".") return std::string("<nobracket>");
    return std::nullopt;
  }
  if (t.kind == TokenKind::kControlSymbol) {
    if (t.text == "\\{") return std::string("{");
    if (t.text == "\\}") return std::string("}");
    if (t.text == "\\|") return std::string("‖");
    return std::nullopt;
  }
  if (t.kind == TokenKind::kControlWord) {
    const std::string n = t.name();
    if (n == "langle") return std::string("⟨");
    if (n == "rangle") return std::string("⟩");
    if (n == "lbrace") return std::string("{");
    if (n == "rbrace") return std::string("}");
    if (n == "lbrack") return std::string("[");
    if (n == "rbrack") return std::string("]");
    if (n == "vert" || n == "lvert" || n == "rvert") return std::string("|");
    if (n == "Vert" || n == "lVert" || n == "rVert") return std::string("‖");
  }
  return std::nullopt;
}

std::optional<std::string> delimiter_source(std::string_view leaf) {
  if (leaf == "(" || leaf == ")" || leaf == "[" || leaf == "]" || leaf == "|") return std::string(leaf);
  if (leaf == "{") return std::string("\\{");
  if (leaf == "}") return std::string("\\}");
  if (leaf == "⟨") return std::string("\\langle");
  if (leaf == "⟩") return std::string("\\rangle");
  if (leaf == "‖") return std::string("\\|");
  if (leaf == "<nobracket>") return std::string(".");
  return std::nullopt;
}

std::optional<std::string> control_symbol_leaf(std::string_view name) {
  static constexpr auto kLiteral = std::to_array<std::string_view>({"%", "&", "#", "_", "$", "{", "}", " "});
  if (contains(kLiteral, name)) return std::string(name);
  if (name == "|") return std::string("‖");
  return std::nullopt;
}

}  // namespace treedoc::latex
