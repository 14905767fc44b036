// SPDX-License-Identifier: Apache-2.0

#include "treedoc/doctree/diagnostic.hpp"

#include <array>
#include <utility>

#include <json.hpp>

namespace treedoc {

namespace {

constexpr std::array<std::pair<FaultKind, std::string_view>, 7> kNames = {{
    {FaultKind::kUnclosedBracket, "unclosed-bracket"},
    {FaultKind::kUnclosedEnvironment, "unclosed-environment"},
    {FaultKind::kWrongCommandUsage, "wrong-command-usage"},
    {FaultKind::kUndefinedCrossReference, "undefined-cross-reference"},
    {FaultKind::kConflictingDefinition, "conflicting-definition"},
    {FaultKind::kSelfRecursiveMacro, "self-recursive-macro"},
    {FaultKind::kGenericSyntax, "generic-syntax"},
}};

}  // namespace

std::string_view to_string(FaultKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "generic-syntax";
}

std::optional<FaultKind> parse_fault_kind(std::string_view text) {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string to_json_line(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["code"] = std::string(to_string(d.code));
  j["anchor"] = d.anchor.to_string();
  j["span"] = {d.span.begin, d.span.end};
  j["message"] = d.message;
  j["recovery"] = d.recovery;
  return j.dump();
}

std::string to_display(const Diagnostic& d) {
  std::string out = "offset " + std::to_string(d.span.begin) + ": " +
                    std::string(to_string(d.code)) + ": " + d.message;
  if (!d.recovery.empty()) out += " [" + d.recovery + "]";
  out += " (anchor " + (d.anchor.empty() ? std::string("root") : d.anchor.to_string()) + ")";
  return out;
}

}  // namespace treedoc
