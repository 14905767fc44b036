// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_IMPORTER_HPP
#define TREEDOC_LATEX_IMPORTER_HPP

#include <string_view>
#include <vector>

#include "treedoc/doctree/diagnostic.hpp"
#include "treedoc/document.hpp"
#include "treedoc/latex/macro_table.hpp"

namespace treedoc::latex {

struct ImportOptions {
  int depth_limit = 64;
};

struct ImportResult {
  Document document;
  std::vector<Diagnostic> diagnostics;
};

// Parses a LaTeX document into its canonical tree. Never throws on bad
// input: every fault becomes one Diagnostic plus an `error` node
//
//   (error "<fault-kind>" <partial content>)
//
// placed where the faulty construct would have been. An unclosed group or
// \left is closed at the first token that closes an enclosing scope; an
// unclosed environment at the next \section/\subsection or end of input.
// Diagnostic anchors point into the returned tree: for unclosed brackets
// and environments the nearest enclosing scope node (document, math,
// equation, theorem-like, itemize, figure, around*, cell), otherwise the
// nearest enclosing compound other than concat.
//
// `table` seeds the macro table; definitions in the source are added to
// it and the result becomes the document's style. \title sets the title;
// \documentclass, \usepackage, \author, \date and \maketitle are ignored.
ImportResult import_latex(std::string_view src, const MacroTable& table = {},
                          const ImportOptions& options = {});

struct FormulaImport {
  Node tree;
  std::vector<Diagnostic> diagnostics;
};

// Parses bare math-mode source (no surrounding `$`) into the canonical
// content of a math node: `\frac{a}{b}` -> (frac "a" "b").
FormulaImport import_formula(std::string_view src, const MacroTable& table = {},
                             const ImportOptions& options = {});

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_IMPORTER_HPP
