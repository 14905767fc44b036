// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_EXPANDER_HPP
#define TREEDOC_LATEX_EXPANDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "treedoc/doctree/diagnostic.hpp"
#include "treedoc/latex/macro_table.hpp"
#include "treedoc/latex/token.hpp"

namespace treedoc::latex {

struct ExpandOptions {
  int depth_limit = 64;
  // Consume \newcommand, \renewcommand and \newtheorem from the stream and
  // record them in the result table.
  bool definitions = true;
  // Expansion stops with a generic-syntax diagnostic past this many tokens.
  std::size_t max_tokens = std::size_t{1} << 22;
};

struct ExpandResult {
  TokenStream tokens;
  std::vector<Diagnostic> diagnostics;
  // Source text of each diagnostic's site, parallel to diagnostics.
  std::vector<std::string> sources;
  // fault[i] is the index of the diagnostic whose site is tokens[i], or -1.
  // A rejected definition leaves a fault token with empty text behind.
  std::vector<int> fault;
  // The input table plus every definition met in the stream.
  MacroTable table;
};

// Expands every macro defined in `table` (and, with options.definitions, in
// the stream itself). A macro that re-enters its own expansion, or nesting
// past depth_limit, is left in the stream with a self-recursive-macro
// diagnostic; a call with missing arguments is left in place with a
// wrong-command-usage diagnostic. Diagnostic anchors are left empty.
// Throws Error if depth_limit < 1.
ExpandResult expand_macros(const TokenStream& ts, const MacroTable& table, int depth_limit = 64);
ExpandResult expand_macros(const TokenStream& ts, const MacroTable& table, const ExpandOptions& options);

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_EXPANDER_HPP
