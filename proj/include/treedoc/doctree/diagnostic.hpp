// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_DOCTREE_DIAGNOSTIC_HPP
#define TREEDOC_DOCTREE_DIAGNOSTIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "treedoc/doctree/edit.hpp"

namespace treedoc {

// Fault taxonomy. The first six mirror the six illness types of the debugging
// benchmark; conflicting package loads are modeled as conflicting definitions.
enum class FaultKind {
  kUnclosedBracket,
  kUnclosedEnvironment,
  kWrongCommandUsage,
  kUndefinedCrossReference,
  kConflictingDefinition,
  kSelfRecursiveMacro,
  kGenericSyntax,
};

inline constexpr FaultKind kAllFaultKinds[] = {
    FaultKind::kUnclosedBracket,         FaultKind::kUnclosedEnvironment,
    FaultKind::kWrongCommandUsage,       FaultKind::kUndefinedCrossReference,
    FaultKind::kConflictingDefinition,   FaultKind::kSelfRecursiveMacro,
    FaultKind::kGenericSyntax,
};

// "unclosed-bracket", "self-recursive-macro", ...
std::string_view to_string(FaultKind kind);
std::optional<FaultKind> parse_fault_kind(std::string_view text);

// Half-open byte range in a source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// A localized fault report. `anchor` names the nearest enclosing compound
// whose subtree contains every effect of the fault.
struct Diagnostic {
  FaultKind code = FaultKind::kGenericSyntax;
  Path anchor;
  Span span;
  std::string message;
  std::string recovery;
};

// One JSON object per diagnostic, no trailing newline.
std::string to_json_line(const Diagnostic& d);
// "offset 12: unclosed-bracket: ... [recovery] (anchor 0.1)"
std::string to_display(const Diagnostic& d);

}  // namespace treedoc

#endif  // TREEDOC_DOCTREE_DIAGNOSTIC_HPP
