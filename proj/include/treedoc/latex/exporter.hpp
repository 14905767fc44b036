// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_EXPORTER_HPP
#define TREEDOC_LATEX_EXPORTER_HPP

#include <string>

#include "treedoc/document.hpp"
#include "treedoc/latex/macro_table.hpp"

namespace treedoc::latex {

// Writes LaTeX that imports back to the same canonical tree. The preamble
// holds \title plus one \newtheorem per environment alias and one
// \newcommand per macro of `style`; theorem-like environments are written
// under their alias in `style`. Throws ExportError for error nodes, raw
// labels outside the tex:/tex-env: namespaces, and unknown entities.
std::string export_latex(const Document& doc, const MacroTable& style);
// Uses doc.style().
std::string export_latex(const Document& doc);

// Render-equivalent spellings the formula writer can choose between.
struct ExportOptions {
  bool over_fractions = false;    // {a \over b} instead of \frac{a}{b}
  bool bare_scripts = false;      // x^2 instead of x^{2} for one-token scripts
  bool plain_delimiters = false;  // (x) instead of \left(x\right) for paired brackets
};

// Math-mode source for the content of a math node, without `$`.
std::string export_formula(const Node& x, const ExportOptions& options = {});

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_EXPORTER_HPP
