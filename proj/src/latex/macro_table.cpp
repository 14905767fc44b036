// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/macro_table.hpp"

#include <array>
#include <cctype>

#include <json.hpp>

#include "treedoc/error.hpp"

namespace treedoc::latex {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 9> kTitles = {{
    {"theorem", "Theorem"},
    {"lemma", "Lemma"},
    {"proposition", "Proposition"},
    {"corollary", "Corollary"},
    {"definition", "Definition"},
    {"remark", "Remark"},
    {"example", "Example"},
    {"conjecture", "Conjecture"},
    {"proof", "Proof"},
}};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string strip_backslash(std::string name) {
  if (!name.empty() && name[0] == '\\') name.erase(0, 1);
  return name;
}

}  // namespace

bool MacroDef::same_meaning(const MacroDef& other) const {
  return params == other.params && body_text() == other.body_text();
}

DefineResult MacroTable::define(MacroDef def) {
  if (def.params < 0 || def.params > 9) {
    throw Error("macro \\" + def.name + " declares " + std::to_string(def.params) +
                " parameters; the limit is 9");
  }
  auto it = macros_.find(def.name);
  if (it == macros_.end()) {
    std::string name = def.name;
    macros_.emplace(std::move(name), std::move(def));
    return DefineResult::kNew;
  }
  if (it->second.same_meaning(def)) return DefineResult::kIdentical;
  history_.push_back(Redefinition{def.name, it->second.body_text(), def.body_text(), false});
  return DefineResult::kConflict;
}

void MacroTable::redefine(MacroDef def) {
  if (def.params < 0 || def.params > 9) {
    throw Error("macro \\" + def.name + " declares " + std::to_string(def.params) +
                " parameters; the limit is 9");
  }
  auto it = macros_.find(def.name);
  history_.push_back(Redefinition{def.name, it == macros_.end() ? std::string() : it->second.body_text(),
                                  def.body_text(), true});
  macros_[def.name] = std::move(def);
}

DefineResult MacroTable::alias_environment(const std::string& alias, const std::string& canonical) {
  auto it = environments_.find(alias);
  if (it == environments_.end()) {
    environments_.emplace(alias, canonical);
    return DefineResult::kNew;
  }
  if (it->second == canonical) return DefineResult::kIdentical;
  history_.push_back(Redefinition{alias, it->second, canonical, false});
  return DefineResult::kConflict;
}

const MacroDef* MacroTable::find(const std::string& name) const {
  auto it = macros_.find(name);
  return it == macros_.end() ? nullptr : &it->second;
}

std::optional<std::string> MacroTable::environment_target(const std::string& env) const {
  auto it = environments_.find(env);
  if (it == environments_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> MacroTable::alias_for(const std::string& canonical) const {
  for (const auto& [alias, target] : environments_) {
    if (target == canonical) return alias;
  }
  return std::nullopt;
}

MacroTable MacroTable::from_json(const std::string& text, const std::string& file) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(file + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw Error(file + ": expected a JSON object");
  MacroTable table;
  const bool structured = j.contains("macros") || j.contains("environments");
  const nlohmann::json macros = structured ? j.value("macros", nlohmann::json::object()) : j;
  if (!macros.is_object()) throw Error(file + ": \"macros\" must be an object");
  for (const auto& [key, value] : macros.items()) {
    MacroDef def;
    def.name = strip_backslash(key);
    def.origin = MacroOrigin{file, 0};
    if (value.is_string()) {
      def.body = tokenize(value.get<std::string>());
    } else if (value.is_object()) {
      if (!value.contains("body") || !value["body"].is_string()) {
        throw Error(file + ": macro " + key + " needs a string \"body\"");
      }
      def.body = tokenize(value["body"].get<std::string>());
      if (value.contains("params")) {
        if (!value["params"].is_number_integer()) throw Error(file + ": macro " + key + ": params must be an integer");
        def.params = value["params"].get<int>();
      }
    } else {
      throw Error(file + ": macro " + key + " must be a string or an object");
    }
    if (table.define(std::move(def)) == DefineResult::kConflict) {
      throw Error(file + ": macro " + key + " is defined twice");
    }
  }
  if (structured && j.contains("environments")) {
    const auto& envs = j["environments"];
    if (!envs.is_object()) throw Error(file + ": \"environments\" must be an object");
    for (const auto& [alias, target] : envs.items()) {
      if (!target.is_string()) throw Error(file + ": environment " + alias + " must map to a string");
      table.alias_environment(alias, target.get<std::string>());
    }
  }
  return table;
}

std::string MacroTable::to_json() const {
  nlohmann::ordered_json macros = nlohmann::ordered_json::object();
  for (const auto& [name, def] : macros_) {
    macros[name] = {{"params", def.params}, {"body", def.body_text()}};
  }
  nlohmann::ordered_json envs = nlohmann::ordered_json::object();
  for (const auto& [alias, target] : environments_) envs[alias] = target;
  nlohmann::ordered_json j;
  j["macros"] = std::move(macros);
  j["environments"] = std::move(envs);
  return j.dump(2);
}

std::optional<std::string> theorem_label_for_title(const std::string& title) {
  const std::string t = lower(title);
  for (const auto& [label, display] : kTitles) {
    if (t == label) return std::string(label);
  }
  return std::nullopt;
}

std::string title_for_theorem_label(const std::string& label) {
  for (const auto& [l, display] : kTitles) {
    if (l == label) return std::string(display);
  }
  return label;
}

}  // namespace treedoc::latex
