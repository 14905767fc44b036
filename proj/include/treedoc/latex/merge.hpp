// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_MERGE_HPP
#define TREEDOC_LATEX_MERGE_HPP

#include <vector>

#include "treedoc/doctree/diagnostic.hpp"
#include "treedoc/document.hpp"

namespace treedoc::latex {

struct MergeResult {
  Document document;
  std::vector<Diagnostic> diagnostics;
};

// Combines two documents into the lead's style and title. Each follower
// proof is placed directly after the theorem its first reference points to
// (proofs for the same theorem keep their follower order); other follower
// blocks are appended in order. A follower label that is already defined
// is dropped with a conflicting-definition diagnostic; a proof whose target
// is no theorem is appended with an undefined-cross-reference diagnostic.
// Anchors point into the merged tree.
MergeResult merge_documents(const Document& lead, const Document& follower);

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_MERGE_HPP
