// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_SYMBOLS_HPP
#define TREEDOC_LATEX_SYMBOLS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "treedoc/latex/token.hpp"

namespace treedoc::latex {

// Leaf text of a symbol command: `\alpha` -> "<alpha>", `\le` -> "<leq>".
std::optional<std::string> symbol_leaf(std::string_view command);

// LaTeX source of an entity name: "alpha" -> `\alpha`, "mathd" ->
// `\mathrm{d}`, "bbbR" -> `\mathbb{R}`, "less" -> `<`. nullopt for names the
// exporter does not know.
std::optional<std::string> entity_source(std::string_view entity);

// \int, \sum, \prod, \lim and friends; imported as big("name").
bool is_big_operator(std::string_view command);

// \, \; \quad ... : dropped in math, a single space in text.
bool is_spacing_command(std::string_view command);

// \big, \Bigl, \biggr, ...
bool is_size_command(std::string_view command);

// Delimiter named by the token after \left, \right or a size command:
// "(" , "[", "{" for `\{`, "⟨" for `\langle`, "<nobracket>" for ".".
std::optional<std::string> delimiter_leaf(const Token& t);
// Inverse of delimiter_leaf.
std::optional<std::string> delimiter_source(std::string_view leaf);

// Literal produced by a control symbol such as `\%` or `\{`.
std::optional<std::string> control_symbol_leaf(std::string_view name);

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_SYMBOLS_HPP
