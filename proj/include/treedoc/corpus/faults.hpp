// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_CORPUS_FAULTS_HPP
#define TREEDOC_CORPUS_FAULTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "treedoc/corpus/formula_gen.hpp"
#include "treedoc/doctree/diagnostic.hpp"

namespace treedoc::corpus {

// Where and how a fault was planted. `site` is the byte range of the clean
// source that was rewritten (empty for a pure insertion at site.begin).
struct FaultSpec {
  FaultKind kind = FaultKind::kGenericSyntax;
  Span site;
  std::string description;
};

// Plants one fault of `kind` into a clean LaTeX document. The site is
// chosen by params.seed among the applicable ones:
//
//   unclosed-bracket         drop the `}` of a group in label-free math
//   unclosed-environment     drop the \end of a text environment
//   wrong-command-usage      \frac{A}{B} becomes {\frac{A}}; without a
//                            fraction, {\sqrt} is put at the start of a math span
//   undefined-cross-reference  retarget one \ref to a fresh key
//   conflicting-definition   redefine an existing \newcommand with another
//                            body, or prepend two clashing definitions
//   self-recursive-macro     prepend \newcommand{\X}{\X} and call \X in
//                            place of one letter of label-free math
//
// Throws InapplicableFault when the source has no site for `kind` (for
// example no \ref to retarget) and for generic-syntax, which is not a
// planted fault.
std::pair<std::string, FaultSpec> inject_fault(const std::string& clean, FaultKind kind,
                                               const GenParams& params);

struct FaultSample {
  std::string clean;
  std::string faulty;
  FaultSpec spec;
};

// Per-kind sample counts of the debugging benchmark: 4 unclosed bracket,
// 5 unclosed environment, 4 wrong command usage, 3 undefined
// cross-reference, 2 conflicting definition, 2 self-recursive macro.
inline constexpr std::pair<FaultKind, int> kFaultSuiteCounts[] = {
    {FaultKind::kUnclosedBracket, 4},         {FaultKind::kUnclosedEnvironment, 5},
    {FaultKind::kWrongCommandUsage, 4},       {FaultKind::kUndefinedCrossReference, 3},
    {FaultKind::kConflictingDefinition, 2},   {FaultKind::kSelfRecursiveMacro, 2},
};

// The 20-sample suite in the order above. Clean sources are exported
// gen_document instances (two sections, two references each) seeded per
// sample.
std::vector<FaultSample> fault_suite(const GenParams& params);

}  // namespace treedoc::corpus

#endif  // TREEDOC_CORPUS_FAULTS_HPP
