// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_CORPUS_VARIANTS_HPP
#define TREEDOC_CORPUS_VARIANTS_HPP

#include <string>
#include <vector>

#include "treedoc/corpus/formula_gen.hpp"
#include "treedoc/doctree/node.hpp"

namespace treedoc::corpus {

// Render-equivalent math-mode spellings of the canonical formula `n`: one
// per combination of the exporter's rewrite rules (\frac vs \over, braced
// vs bare one-token scripts, \left..\right vs plain brackets), duplicates
// removed, default spelling first, at most 8. A formula without a
// variant-capable construct yields one string. Every variant imports back
// to `n`. `params` is accepted for interface symmetry; the result does not
// depend on it. Throws ExportError for unexportable nodes.
std::vector<std::string> gen_latex_variants(const Node& n, const GenParams& params = {});

}  // namespace treedoc::corpus

#endif  // TREEDOC_CORPUS_VARIANTS_HPP
