// SPDX-License-Identifier: Apache-2.0

#include "treedoc/corpus/formula_gen.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "treedoc/corpus/rng.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/canonicalize.hpp"

namespace treedoc::corpus {

namespace {

using Items = std::vector<Node>;

constexpr std::string_view kNames[] = {
    "fraction", "radical",   "scripts",    "matrix",             "piecewise",
    "integral-summation", "limit", "quantifier", "composite-function", "nested-parentheses",
};

constexpr std::string_view kLetters[] = {"a", "b", "c", "k", "m", "n", "p", "q",
                                         "r", "s", "t", "u", "v", "x", "y", "z"};
constexpr std::string_view kDigits[] = {"0", "1", "2", "3", "4", "5", "7", "10"};
constexpr std::string_view kGreek[] = {"<alpha>", "<beta>", "<gamma>", "<theta>",
                                       "<lambda>", "<mu>",   "<pi>",    "<omega>"};
constexpr std::string_view kOps[] = {"+", "-", "+", "-", "=", "<cdot>", "<times>"};
constexpr std::string_view kFunctions[] = {"f", "g", "h", "<sin>", "<cos>", "<log>", "<exp>"};
constexpr std::string_view kRelations[] = {"<less>", "<leq>", "<gtr>", "<geq>", "=", "<neq>"};

// Core structure of a category: the depth its items need and whether it is
// a single node (a lone core needs no concat around it).
struct CoreShape {
  int depth;
  bool single;
};

CoreShape core_shape(FormulaCategory cat) {
  switch (cat) {
    case FormulaCategory::kFraction: return {1, true};
    case FormulaCategory::kRadical: return {1, true};
    case FormulaCategory::kScripts: return {1, false};
    case FormulaCategory::kMatrix: return {4, true};
    case FormulaCategory::kPiecewise: return {3, true};
    case FormulaCategory::kIntegralSummation: return {1, false};
    case FormulaCategory::kLimit: return {1, false};
    case FormulaCategory::kQuantifier: return {0, false};
    case FormulaCategory::kCompositeFunction: return {3, false};
    case FormulaCategory::kNestedParentheses: return {3, true};
  }
  return {1, true};
}

Node seq(Items items) {
  if (items.size() == 1) return std::move(items.front());
  return make_node("concat", std::move(items));
}

void append(Items& out, Items more) {
  for (auto& n : more) out.push_back(std::move(n));
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Node formula(FormulaCategory cat, int depth) {
    const CoreShape shape = core_shape(cat);
    if (depth - 1 < shape.depth) {
      // Only the bare core fits.
      return seq(core(cat, depth));
    }
    const int b = depth - 1;
    Items items;
    if (cat == FormulaCategory::kPiecewise) {
      items.push_back(Node(std::string(pick(kFunctions))));
      items.push_back(make_node("around*", {"(", "x", ")"}));
      items.push_back("=");
    } else if (cat != FormulaCategory::kQuantifier && rng_.chance(1, 3)) {
      append(items, factor(b));
      items.push_back(op());
    }
    append(items, core(cat, b));
    if (cat != FormulaCategory::kPiecewise && cat != FormulaCategory::kIntegralSummation &&
        cat != FormulaCategory::kLimit && rng_.chance(1, 3)) {
      items.push_back(op());
      append(items, factor(b));
    }
    return seq(std::move(items));
  }

 private:
  template <typename T, std::size_t N>
  std::string pick(const T (&items)[N]) {
    return std::string(items[rng_.below(N)]);
  }

  Node atom() {
    const auto r = rng_.below(10);
    if (r < 6) return Node(pick(kLetters));
    if (r < 8) return Node(pick(kDigits));
    return Node(pick(kGreek));
  }

  Node op() { return Node(pick(kOps)); }

  // Compound content becomes rarer with nesting so formulas stay readable.
  bool go_deeper() { return rng_.below(static_cast<std::uint64_t>(nesting_ + 2)) == 0; }

  // A sum/product of 1-3 factors; depth <= d.
  Node expr(int d) {
    if (d <= 0) return atom();
    ++nesting_;
    Items items = factor(d - 1);
    const int extra = static_cast<int>(rng_.below(3));
    for (int i = 0; i < extra; ++i) {
      items.push_back(op());
      append(items, factor(d - 1));
    }
    --nesting_;
    return seq(std::move(items));
  }

  // Items of depth <= d to splice into a concat.
  Items factor(int d) {
    if (d <= 0 || !go_deeper()) return {atom()};
    switch (rng_.below(6)) {
      case 0: return {make_node("frac", {expr(d - 1), expr(d - 1)})};
      case 1: return {make_node("sqrt", {expr(d - 1)})};
      case 2: return scripted(d);
      case 3: return {paren(expr(d - 1))};
      case 4: return {Node(pick(kFunctions)), make_node("around*", {"(", expr(d - 1), ")"})};
      default: return scripted(d);
    }
  }

  Node paren(Node body) {
    const bool square = rng_.chance(1, 4);
    return make_node("around*", {square ? "[" : "(", std::move(body), square ? "]" : ")"});
  }

  // An atom with a subscript, a superscript or both; d >= 1.
  Items scripted(int d) {
    Items items{atom()};
    const auto which = rng_.below(3);
    const int inner = std::min(d - 1, 1);
    if (which != 1) items.push_back(make_node("rsub", {expr(inner)}));
    if (which != 0) items.push_back(make_node("rsup", {expr(inner)}));
    return items;
  }

  Items core(FormulaCategory cat, int b) {
    switch (cat) {
      case FormulaCategory::kFraction:
        return {make_node("frac", {expr(b - 1), expr(b - 1)})};
      case FormulaCategory::kRadical:
        return {make_node("sqrt", {expr(b - 1)})};
      case FormulaCategory::kScripts: {
        Items items = scripted(b);
        if (b >= 2 && rng_.chance(1, 2)) {
          items.push_back(op());
          append(items, scripted(b));
        }
        return items;
      }
      case FormulaCategory::kMatrix: return {matrix(b)};
      case FormulaCategory::kPiecewise: return {cases(b)};
      case FormulaCategory::kIntegralSummation: return big_operator(b);
      case FormulaCategory::kLimit: return limit(b);
      case FormulaCategory::kQuantifier: return quantifier(b);
      case FormulaCategory::kCompositeFunction: return composite(b);
      case FormulaCategory::kNestedParentheses: return {nested(b)};
    }
    return {atom()};
  }

  Node matrix(int b) {
    static constexpr std::string_view kOpen[] = {"(", "[", "|"};
    static constexpr std::string_view kClose[] = {")", "]", "|"};
    const auto kind = rng_.below(3);
    const int rows = rng_.between(2, 3);
    const int cols = rng_.between(2, 3);
    const int cell_depth = std::min(b - 4, 1);
    std::vector<Node> row_nodes;
    for (int r = 0; r < rows; ++r) {
      std::vector<Node> cells;
      for (int c = 0; c < cols; ++c) cells.push_back(make_node("cell", {expr(cell_depth)}));
      row_nodes.push_back(make_node("row", std::move(cells)));
    }
    return make_node("around*", {std::string(kOpen[kind]), make_node("matrix", std::move(row_nodes)),
                                 std::string(kClose[kind])});
  }

  Node cases(int b) {
    const int rows = rng_.between(2, 3);
    const int value_depth = std::min(b - 3, 1);
    std::vector<Node> row_nodes;
    for (int r = 0; r < rows; ++r) {
      Node value = expr(value_depth);
      Node cond(r == 0 ? "x" + pick(kRelations) + "0" : "x" + pick(kRelations) + pick(kDigits));
      row_nodes.push_back(
          make_node("row", {make_node("cell", {std::move(value)}), make_node("cell", {std::move(cond)})}));
    }
    return make_node("cases", std::move(row_nodes));
  }

  Items big_operator(int b) {
    static constexpr std::string_view kBig[] = {"int", "int", "sum", "sum", "prod"};
    const std::string name = pick(kBig);
    Items items{make_node("big", {Node(name)})};
    if (name == "int") {
      static constexpr std::string_view kLower[] = {"0", "a", "-1", "-<infty>"};
      static constexpr std::string_view kUpper[] = {"1", "b", "<pi>", "<infty>"};
      items.push_back(make_node("rsub", {Node(pick(kLower))}));
      items.push_back(make_node("rsup", {Node(pick(kUpper))}));
      append(items, factor(b));
      items.push_back("<mathd>x");
    } else {
      static constexpr std::string_view kLower[] = {"i=1", "k=0", "n=1", "j=0"};
      static constexpr std::string_view kUpper[] = {"n", "<infty>", "N", "10"};
      items.push_back(make_node("rsub", {Node(pick(kLower))}));
      items.push_back(make_node("rsup", {Node(pick(kUpper))}));
      append(items, factor(b));
    }
    return items;
  }

  Items limit(int b) {
    static constexpr std::string_view kTargets[] = {"x<rightarrow>0", "n<rightarrow><infty>",
                                                    "x<rightarrow>a", "h<rightarrow>0"};
    Items items{make_node("big", {"lim"}), make_node("rsub", {Node(pick(kTargets))})};
    append(items, factor(b));
    if (rng_.chance(1, 2)) {
      items.push_back(op());
      append(items, factor(b));
    }
    return items;
  }

  Items quantifier(int b) {
    static constexpr std::string_view kSets[] = {"<bbbR>", "<bbbN>", "<bbbZ>", "<bbbQ>"};
    const bool forall = rng_.chance(1, 2);
    Items items{Node(std::string(forall ? "<forall>" : "<exists>") + "x<in>" + pick(kSets) + ",")};
    if (rng_.chance(1, 2)) {
      items.push_back(Node(std::string(forall ? "<exists>" : "<forall>") + "y<in>" + pick(kSets) + ","));
    }
    append(items, factor(b));
    items.push_back(Node(pick(kRelations)));
    append(items, factor(b));
    return items;
  }

  // f(g(x)) or (f<circ>g)(x); b >= 3.
  Items composite(int b) {
    const std::string outer = pick(kFunctions);
    std::string inner = pick(kFunctions);
    if (inner == outer) inner = outer == "g" ? "f" : "g";
    if (rng_.chance(1, 4)) {
      return {make_node("around*", {"(", Node(outer + "<circ>" + inner), ")"}),
              make_node("around*", {"(", expr(b - 1), ")"})};
    }
    Node arg = make_node("concat", {Node(inner), make_node("around*", {"(", expr(b - 3), ")"})});
    return {Node(outer), make_node("around*", {"(", std::move(arg), ")"})};
  }

  // At least two levels of around* nested directly inside each other's
  // content; b >= 3.
  Node nested(int b) {
    const int max_levels = std::min((b - 1) / 2 + 1, 4);
    return nest(rng_.between(2, std::max(2, max_levels)), b);
  }

  Node nest(int levels, int b) {
    if (levels == 1) return paren(expr(b - 1));
    Items body{atom(), op(), nest(levels - 1, b - 2)};
    if (rng_.chance(1, 2)) {
      body.push_back(op());
      body.push_back(atom());
    }
    return paren(seq(std::move(body)));
  }

  SplitMix64 rng_;
  int nesting_ = 0;
};

}  // namespace

std::string_view to_string(FormulaCategory cat) { return kNames[static_cast<std::size_t>(cat)]; }

std::optional<FormulaCategory> parse_category(std::string_view text) {
  for (auto cat : kAllCategories) {
    if (to_string(cat) == text) return cat;
  }
  return std::nullopt;
}

int tree_depth(const Node& n) {
  if (n.is_leaf()) return 0;
  int deepest = 0;
  for (const auto& c : n.children()) deepest = std::max(deepest, tree_depth(c));
  return deepest + 1;
}

int min_depth(FormulaCategory cat) {
  const CoreShape shape = core_shape(cat);
  return std::max(1, shape.single ? shape.depth : shape.depth + 1);
}

Node gen_formula(const GenParams& params, FormulaCategory cat) {
  if (params.max_depth < 1) throw Error("gen_formula: max_depth must be at least 1");
  const int depth = std::max(params.max_depth, min_depth(cat));
  Generator gen(derive_seed(params.seed, static_cast<std::uint64_t>(cat)));
  return latex::canonicalize(gen.formula(cat, depth), true);
}

}  // namespace treedoc::corpus
