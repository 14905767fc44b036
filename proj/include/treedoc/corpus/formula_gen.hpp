// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_CORPUS_FORMULA_GEN_HPP
#define TREEDOC_CORPUS_FORMULA_GEN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "treedoc/doctree/node.hpp"

namespace treedoc::corpus {

enum class FormulaCategory {
  kFraction,
  kRadical,
  kScripts,
  kMatrix,
  kPiecewise,
  kIntegralSummation,
  kLimit,
  kQuantifier,
  kCompositeFunction,
  kNestedParentheses,
};

inline constexpr std::array<FormulaCategory, 10> kAllCategories = {
    FormulaCategory::kFraction,          FormulaCategory::kRadical,
    FormulaCategory::kScripts,           FormulaCategory::kMatrix,
    FormulaCategory::kPiecewise,         FormulaCategory::kIntegralSummation,
    FormulaCategory::kLimit,             FormulaCategory::kQuantifier,
    FormulaCategory::kCompositeFunction, FormulaCategory::kNestedParentheses,
};

// "fraction", "integral-summation", ...
std::string_view to_string(FormulaCategory cat);
std::optional<FormulaCategory> parse_category(std::string_view text);

struct GenParams {
  std::uint64_t seed = 0;
  int max_depth = 6;
  int count = 1000;
};

// Compound nesting depth: 0 for a leaf, 1 + the deepest child otherwise.
int tree_depth(const Node& n);

// Smallest depth at which a formula of `cat` can be built, e.g. 4 for a
// matrix: (around* "(" (matrix (row (cell x))) ")").
int min_depth(FormulaCategory cat);

// A random canonical formula (the content of a math node) whose outermost
// structure belongs to `cat`. Identifiers are latin letters, digits and a
// fixed Greek subset. depth <= max(max_depth, min_depth(cat)). A pure
// function of (seed, max_depth, cat). Throws Error if max_depth < 1.
Node gen_formula(const GenParams& params, FormulaCategory cat);

}  // namespace treedoc::corpus

#endif  // TREEDOC_CORPUS_FORMULA_GEN_HPP
