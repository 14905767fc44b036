// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_MACRO_TABLE_HPP
#define TREEDOC_LATEX_MACRO_TABLE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treedoc/latex/token.hpp"

namespace treedoc::latex {

struct MacroOrigin {
  std::string file;
  std::size_t offset = 0;
};

struct MacroDef {
  std::string name;  // without backslash
  int params = 0;    // 0..9
  TokenStream body;
  MacroOrigin origin;

  std::string body_text() const { return detokenize(body); }
  // Same parameter count and body text; origin is ignored.
  bool same_meaning(const MacroDef& other) const;
};

// A recorded redefinition (\renewcommand, or a rejected conflicting
// \newcommand). Entries are never silently merged.
struct Redefinition {
  std::string name;
  std::string previous_body;
  std::string replacement_body;
  bool accepted = false;
};

enum class DefineResult { kNew, kIdentical, kConflict };

// The machine form of a doc-style: macro definitions plus environment
// aliases such as thm -> theorem.
class MacroTable {
 public:
  // \newcommand semantics: a differing existing definition is a conflict and
  // the first binding is kept.
  DefineResult define(MacroDef def);
  // \renewcommand semantics: replaces and records the previous body.
  void redefine(MacroDef def);
  // \newtheorem{alias}{Title}: alias -> canonical label name.
  DefineResult alias_environment(const std::string& alias, const std::string& canonical);

  const MacroDef* find(const std::string& name) const;
  // Canonical label for an environment alias, if one is registered.
  std::optional<std::string> environment_target(const std::string& env) const;
  // Preferred alias for a canonical label: the lexicographically first alias
  // naming it, or nullopt when the style never aliases the label.
  std::optional<std::string> alias_for(const std::string& canonical) const;

  const std::map<std::string, MacroDef>& macros() const { return macros_; }
  const std::map<std::string, std::string>& environments() const { return environments_; }
  const std::vector<Redefinition>& history() const { return history_; }
  bool empty() const { return macros_.empty() && environments_.empty(); }

  // JSON sidecar. Accepts either a flat object {name: {params, body}} or
  // {"macros": {...}, "environments": {alias: canonical}}. Throws Error.
  static MacroTable from_json(const std::string& text, const std::string& file = "<json>");
  std::string to_json() const;

 private:
  std::map<std::string, MacroDef> macros_;
  std::map<std::string, std::string> environments_;
  std::vector<Redefinition> history_;
};

// Maps a \newtheorem display title ("Theorem", "Lemma", ...) to a canonical
// theorem-like label, or nullopt for titles outside the vocabulary.
std::optional<std::string> theorem_label_for_title(const std::string& title);
// Inverse used when emitting \newtheorem lines.
std::string title_for_theorem_label(const std::string& label);

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_MACRO_TABLE_HPP
