// SPDX-License-Identifier: Apache-2.0

// Hand-written case tables shared by the unit tests and the acceptance run.

#ifndef TREEDOC_TESTS_CASES_HPP
#define TREEDOC_TESTS_CASES_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "treedoc/metrics/scoring.hpp"

namespace treedoc::testing {

// The integral example and its printed S-expression.
inline constexpr std::string_view kIntegralSource =
    R"($\int_{a}^{b} f(x) \mathrm{d}x = \left[ F(x) \right] \big|_{a}^{b}$)";
inline constexpr std::string_view kIntegralSexp =
    R"sx((math (concat (big "int") (rsub "a") (rsup "b") "f" (around* "(" "x" ")") "<mathd>x=" )sx"
    R"sx((around* "<nobracket>" (around* "[" (concat "F" (around* "(" "x" ")")) "]") "|") (rsub "a") (rsup "b"))))sx";

struct EquivalencePair {
  std::string_view left;
  std::string_view right;
};

// Render-equivalent math sources: ten fraction, ten script and ten
// delimiter spellings.
inline constexpr std::array<EquivalencePair, 30> kEquivalencePairs = {{
    {R"(\frac{a}{b})", R"({a \over b})"},
    {R"(\frac{1}{2})", R"({1 \over 2})"},
    {R"(\frac{x+1}{y})", R"({x+1 \over y})"},
    {R"(\frac{\alpha}{\beta})", R"({\alpha \over \beta})"},
    {R"(\frac{a}{b}+c)", R"({a \over b}+c)"},
    {R"(\sqrt{\frac{a}{b}})", R"(\sqrt{{a \over b}})"},
    {R"(\frac{\frac{a}{b}}{c})", R"({{a \over b} \over c})"},
    {R"(x=\frac{n}{2})", R"(x={n \over 2})"},
    {R"(\frac{a^{2}}{b})", R"({a^{2} \over b})"},
    {R"(f(\frac{1}{x}))", R"(f({1 \over x}))"},
    {R"(x^2)", R"(x^{2})"},
    {R"(x_1)", R"(x_{1})"},
    {R"(x_i^2)", R"(x_{i}^{2})"},
    {R"(e^x)", R"(e^{x})"},
    {R"(a^n+b^n)", R"(a^{n}+b^{n})"},
    {R"(\sum_i x_i)", R"(\sum_{i} x_{i})"},
    {R"(\alpha^2)", R"(\alpha^{2})"},
    {R"(x^\alpha)", R"(x^{\alpha})"},
    {R"((a+b)^2)", R"((a+b)^{2})"},
    {R"(\int_0^1 f)", R"(\int_{0}^{1} f)"},
    {R"(\left(x\right))", R"((x))"},
    {R"(\left[x\right])", R"([x])"},
    {R"(\left(a+b\right))", R"((a+b))"},
    {R"(f\left(x\right))", R"(f(x))"},
    {R"(\left(\frac{a}{b}\right))", R"((\frac{a}{b}))"},
    {R"(\left(x\right)^{2})", R"((x)^{2})"},
    {R"(\left(\left(x\right)\right))", R"(((x)))"},
    {R"(\left\{x\right\})", R"(\{x\})"},
    {R"(\left(x, y\right))", R"((x, y))"},
    {R"(\left[0, 1\right])", R"([0, 1])"},
}};

enum class ScoreKind { kItem, kMerge };

struct ScoreCase {
  ScoreKind kind;
  metrics::ScoreInput input;
  int expected;
};

// Computed by hand from the two scoring rules.
inline constexpr std::array<ScoreCase, 12> kScoreCases = {{
    {ScoreKind::kItem, {23000, true, metrics::TryIndex::kFirst, 0, 0}, 3},
    {ScoreKind::kItem, {0, true, metrics::TryIndex::kFirst, 0, 0}, 5},
    {ScoreKind::kItem, {9999, true, metrics::TryIndex::kFirst, 0, 0}, 5},
    {ScoreKind::kItem, {10000, true, metrics::TryIndex::kFirst, 0, 0}, 4},
    {ScoreKind::kItem, {80000, true, metrics::TryIndex::kFirst, 0, 0}, 0},   // clamped at 0
    {ScoreKind::kItem, {1000, false, metrics::TryIndex::kFirst, 0, 0}, 0},   // wrong answer
    {ScoreKind::kMerge, {23000, true, metrics::TryIndex::kFirst, 0, 1}, 17},
    {ScoreKind::kMerge, {5000, true, metrics::TryIndex::kSecond, 1, 0}, 8},
    {ScoreKind::kMerge, {0, false, metrics::TryIndex::kFail, 0, 0}, 0},
    {ScoreKind::kMerge, {250000, true, metrics::TryIndex::kFirst, 0, 0}, 0},  // clamped at 0
    {ScoreKind::kMerge, {0, true, metrics::TryIndex::kSecond, 2, 3}, 3},
    {ScoreKind::kMerge, {99999, true, metrics::TryIndex::kFirst, 3, 2}, 3},
}};

}  // namespace treedoc::testing

#endif  // TREEDOC_TESTS_CASES_HPP
