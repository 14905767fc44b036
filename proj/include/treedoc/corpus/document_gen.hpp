// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_CORPUS_DOCUMENT_GEN_HPP
#define TREEDOC_CORPUS_DOCUMENT_GEN_HPP

#include <string>
#include <vector>

#include "treedoc/corpus/formula_gen.hpp"
#include "treedoc/document.hpp"

namespace treedoc::corpus {

// A synthetic benchmark document. Section i (1-based) holds, in order:
//
//   section "Section i" labeled sec:i, a paragraph with an inline formula,
//   subsection labeled sub:i, a theorem-like block labeled thm:i, a numbered
//   equation labeled eq:i, every third section a figure labeled fig:i,
//   and when refs_per_section > 0 a paragraph of refs_per_section
//   references to labels drawn uniformly from the whole document, followed
//   by a proof citing thm:i.
//
// Every reference resolves, and the tree survives export and re-import
// unchanged. Formulas use params.max_depth (capped at 3 to keep blocks
// small). Deterministic in params.seed. Throws Error if sections < 1.
Document gen_document(const GenParams& params, int sections, int refs_per_section);

// Labels gen_document places, in document order.
std::vector<std::string> document_labels(int sections);

// Two LaTeX sources for the merge task. The lead states `theorems`
// theorem-like blocks labeled thm:1..thm:n under its own \newtheorem
// aliases and \newcommand macros; the follower holds one proof per theorem
// in shuffled order (each citing its theorem first) under a different set
// of aliases and macros.
struct TheoremProofPair {
  std::string lead;
  std::string follower;
  std::vector<std::string> theorem_labels;
};
TheoremProofPair gen_theorem_proof_pair(const GenParams& params, int theorems = 10);

}  // namespace treedoc::corpus

#endif  // TREEDOC_CORPUS_DOCUMENT_GEN_HPP
