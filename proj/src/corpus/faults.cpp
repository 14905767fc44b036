// SPDX-License-Identifier: Apache-2.0

#include "treedoc/corpus/faults.hpp"

#include <algorithm>
#include <optional>

#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/corpus/rng.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/canonicalize.hpp"
#include "treedoc/latex/exporter.hpp"
#include "treedoc/latex/token.hpp"

namespace treedoc::corpus {

namespace {

using latex::Token;
using latex::TokenKind;

bool is_math_env(const std::string& name) {
  return name == "equation" || name == "equation*" || latex::opens_math("tex-env:" + name);
}

bool is_array_env(const std::string& name) {
  return name == "pmatrix" || name == "bmatrix" || name == "vmatrix" || name == "matrix" ||
         name == "cases" || name == "document";
}

bool is_key_command(const std::string& name) {
  return name == "label" || name == "ref" || name == "eqref" || name == "cite";
}

bool is_letter(const Token& t) {
  return t.kind == TokenKind::kChar && t.text.size() == 1 &&
         ((t.text[0] >= 'a' && t.text[0] <= 'z') || (t.text[0] >= 'A' && t.text[0] <= 'Z'));
}

// Per-token facts used to pick injection sites.
struct TokenInfo {
  bool math = false;
  int region = -1;            // math span the token belongs to
  std::size_t match = 0;      // partner of a group open/close; SIZE_MAX when unmatched
  std::size_t owner = 0;      // token before the innermost enclosing `{`; SIZE_MAX at top
  bool in_key = false;        // inside the argument of \label, \ref, ...
};

struct Scan {
  latex::TokenStream tokens;
  std::vector<TokenInfo> info;
  std::vector<bool> region_has_label;
  std::vector<std::size_t> region_open;  // token index opening each math span

  std::size_t prev_solid(std::size_t i) const {
    while (i > 0) {
      --i;
      if (!tokens[i].is_space()) return i;
    }
    return SIZE_MAX;
  }

  std::size_t end_of(std::size_t i) const { return tokens[i].offset + tokens[i].text.size(); }
};

Scan scan(const std::string& src) {
  Scan s;
  s.tokens = latex::tokenize(src);
  const auto& toks = s.tokens;
  s.info.resize(toks.size());
  std::vector<std::size_t> groups;
  std::vector<std::string> math_closers;  // "$", "$$", "]", or an environment name
  int region = -1;
  std::size_t key_depth = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    auto& info = s.info[i];
    info.match = SIZE_MAX;
    info.owner = groups.empty() ? SIZE_MAX : s.prev_solid(groups.back());
    info.in_key = key_depth > 0;

    bool opens = false;
    bool closes = false;
    if (t.kind == TokenKind::kMathShift) {
      if (!math_closers.empty() && math_closers.back() == t.text) {
        closes = true;
      } else if (math_closers.empty()) {
        opens = true;
      }
    } else if (t.kind == TokenKind::kControlSymbol && t.text == "\\[" && math_closers.empty()) {
      opens = true;
    } else if (t.kind == TokenKind::kControlSymbol && t.text == "\\]" && !math_closers.empty() &&
               math_closers.back() == "]") {
      closes = true;
    } else if (t.kind == TokenKind::kEnvironmentBegin && math_closers.empty() && is_math_env(t.name())) {
      opens = true;
    } else if (t.kind == TokenKind::kEnvironmentEnd && !math_closers.empty() && math_closers.back() == t.name()) {
      closes = true;
    }

    if (opens) {
      region = static_cast<int>(s.region_has_label.size());
      s.region_has_label.push_back(false);
      s.region_open.push_back(i);
      math_closers.push_back(t.kind == TokenKind::kMathShift ? t.text
                             : t.kind == TokenKind::kControlSymbol ? "]"
                                                                    : t.name());
      info.math = true;
      info.region = region;
      continue;
    }
    if (!math_closers.empty()) {
      info.math = true;
      info.region = region;
      if (t.kind == TokenKind::kControlWord && t.name() == "label") s.region_has_label[static_cast<std::size_t>(region)] = true;
    }
    if (closes) {
      math_closers.pop_back();
      continue;
    }

    if (t.kind == TokenKind::kGroupOpen) {
      const std::size_t p = s.prev_solid(i);
      if (key_depth > 0 || (p != SIZE_MAX && toks[p].kind == TokenKind::kControlWord && is_key_command(toks[p].name()))) {
        ++key_depth;
      }
      groups.push_back(i);
    } else if (t.kind == TokenKind::kGroupClose && !groups.empty()) {
      const std::size_t open = groups.back();
      groups.pop_back();
      s.info[open].match = i;
      info.match = open;
      if (key_depth > 0) --key_depth;
    }
  }
  return s;
}

// The source with [begin, end) replaced by `text`.
std::string splice(const std::string& src, std::size_t begin, std::size_t end, const std::string& text) {
  return src.substr(0, begin) + text + src.substr(end);
}

// A control-word name (letters only) that does not occur in `src`.
std::string fresh_name(const std::string& src, const std::string& prefix, SplitMix64& rng) {
  for (;;) {
    std::string name = prefix;
    for (int i = 0; i < 4; ++i) name += static_cast<char>('a' + rng.below(26));
    if (src.find(name) == std::string::npos) return name;
  }
}

std::size_t choose(const std::vector<std::size_t>& sites, SplitMix64& rng, FaultKind kind) {
  if (sites.empty()) {
    throw InapplicableFault("cannot inject " + std::string(to_string(kind)) + ": the source has no applicable site");
  }
  return sites[rng.below(sites.size())];
}

// Owners whose group is ordinary math content rather than a raw argument.
bool is_math_group_owner(const Scan& s, std::size_t owner) {
  if (owner == SIZE_MAX) return true;
  const Token& t = s.tokens[owner];
  if (t.kind == TokenKind::kSuperscript || t.kind == TokenKind::kSubscript || t.kind == TokenKind::kGroupClose) return true;
  return t.kind == TokenKind::kControlWord && (t.name() == "frac" || t.name() == "sqrt");
}

std::pair<std::string, FaultSpec> unclosed_bracket(const std::string& src, const Scan& s, SplitMix64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const auto& info = s.info[i];
    if (s.tokens[i].kind != TokenKind::kGroupClose || info.match == SIZE_MAX || !info.math) continue;
    if (s.region_has_label[static_cast<std::size_t>(info.region)] || info.in_key) continue;
    if (s.info[info.match].region != info.region) continue;
    if (!is_math_group_owner(s, s.prev_solid(info.match))) continue;
    sites.push_back(i);
  }
  const std::size_t i = choose(sites, rng, FaultKind::kUnclosedBracket);
  const Token& t = s.tokens[i];
  return {splice(src, t.offset, s.end_of(i), ""),
          FaultSpec{FaultKind::kUnclosedBracket, Span{t.offset, s.end_of(i)},
                    "deleted the closing brace at offset " + std::to_string(t.offset)}};
}

std::pair<std::string, FaultSpec> unclosed_environment(const std::string& src, const Scan& s, SplitMix64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    if (t.kind != TokenKind::kEnvironmentEnd || s.info[i].math) continue;
    if (is_math_env(t.name()) || is_array_env(t.name())) continue;
    sites.push_back(i);
  }
  const std::size_t i = choose(sites, rng, FaultKind::kUnclosedEnvironment);
  const Token& t = s.tokens[i];
  return {splice(src, t.offset, s.end_of(i), ""),
          FaultSpec{FaultKind::kUnclosedEnvironment, Span{t.offset, s.end_of(i)},
                    "deleted \\end{" + t.name() + "}"}};
}

// Index of the first non-space token at or after i.
std::size_t next_solid(const Scan& s, std::size_t i) {
  while (i < s.tokens.size() && s.tokens[i].is_space()) ++i;
  return i;
}

std::pair<std::string, FaultSpec> wrong_usage(const std::string& src, const Scan& s, SplitMix64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (!s.tokens[i].is(TokenKind::kControlWord, "frac") || !s.info[i].math || s.info[i].in_key) continue;
    const std::size_t a = next_solid(s, i + 1);
    if (a >= s.tokens.size() || s.tokens[a].kind != TokenKind::kGroupOpen || s.info[a].match == SIZE_MAX) continue;
    const std::size_t b = next_solid(s, s.info[a].match + 1);
    if (b >= s.tokens.size() || s.tokens[b].kind != TokenKind::kGroupOpen || s.info[b].match == SIZE_MAX) continue;
    sites.push_back(i);
  }
  if (!sites.empty()) {
    const std::size_t i = choose(sites, rng, FaultKind::kWrongCommandUsage);
    const std::size_t a = next_solid(s, i + 1);
    const std::size_t a_end = s.info[a].match;
    const std::size_t b_end = s.info[next_solid(s, a_end + 1)].match;
    const std::size_t begin = s.tokens[i].offset;
    const std::size_t end = s.end_of(b_end);
    const std::string first = src.substr(s.tokens[a].offset, s.end_of(a_end) - s.tokens[a].offset);
    return {splice(src, begin, end, "{\\frac" + first + "}"),
            FaultSpec{FaultKind::kWrongCommandUsage, Span{begin, end}, "dropped the second argument of \\frac"}};
  }
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.info[i].region >= 0 && s.region_open[static_cast<std::size_t>(s.info[i].region)] == i) sites.push_back(i);
  }
  const std::size_t i = choose(sites, rng, FaultKind::kWrongCommandUsage);
  const std::size_t at = s.end_of(i);
  return {splice(src, at, at, "{\\sqrt}"),
          FaultSpec{FaultKind::kWrongCommandUsage, Span{at, at}, "inserted \\sqrt without its argument"}};
}

std::pair<std::string, FaultSpec> undefined_reference(const std::string& src, const Scan& s, SplitMix64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (!s.tokens[i].is(TokenKind::kControlWord, "ref") && !s.tokens[i].is(TokenKind::kControlWord, "eqref")) continue;
    const std::size_t a = next_solid(s, i + 1);
    if (a < s.tokens.size() && s.tokens[a].kind == TokenKind::kGroupOpen && s.info[a].match != SIZE_MAX) {
      sites.push_back(a);
    }
  }
  const std::size_t a = choose(sites, rng, FaultKind::kUndefinedCrossReference);
  const std::size_t begin = s.end_of(a);
  const std::size_t end = s.tokens[s.info[a].match].offset;
  const std::string key = "missing:" + fresh_name(src, "", rng);
  return {splice(src, begin, end, key),
          FaultSpec{FaultKind::kUndefinedCrossReference, Span{begin, end},
                    "retargeted \\ref{" + src.substr(begin, end - begin) + "} to the undefined key " + key}};
}

std::pair<std::string, FaultSpec> conflicting_definition(const std::string& src, const Scan& s, SplitMix64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (!s.tokens[i].is(TokenKind::kControlWord, "newcommand")) continue;
    const std::size_t name = next_solid(s, i + 1);
    if (name >= s.tokens.size() || s.tokens[name].kind != TokenKind::kGroupOpen || s.info[name].match == SIZE_MAX) continue;
    std::size_t body = next_solid(s, s.info[name].match + 1);
    if (body < s.tokens.size() && s.tokens[body].text == "[") {
      while (body < s.tokens.size() && s.tokens[body].text != "]") ++body;
      body = next_solid(s, body + 1);
    }
    if (body >= s.tokens.size() || s.tokens[body].kind != TokenKind::kGroupOpen || s.info[body].match == SIZE_MAX) continue;
    sites.push_back(i);
  }
  if (!sites.empty()) {
    const std::size_t i = choose(sites, rng, FaultKind::kConflictingDefinition);
    std::size_t body = next_solid(s, s.info[next_solid(s, i + 1)].match + 1);
    if (s.tokens[body].text == "[") {
      while (s.tokens[body].text != "]") ++body;
      body = next_solid(s, body + 1);
    }
    const std::size_t close = s.info[body].match;
    const std::size_t begin = s.tokens[i].offset;
    const std::size_t at = s.end_of(close);
    // Same head, body with an extra token.
    std::string copy = src.substr(begin, s.tokens[close].offset - begin) + "0}";
    const std::size_t open = next_solid(s, i + 1);
    const std::string name = src.substr(s.end_of(open), s.tokens[s.info[open].match].offset - s.end_of(open));
    return {splice(src, at, at, copy),
            FaultSpec{FaultKind::kConflictingDefinition, Span{at, at}, "redefined " + name + " with a different body"}};
  }
  const std::string name = fresh_name(src, "dup", rng);
  const std::string text = "\\newcommand{\\" + name + "}{a}\\newcommand{\\" + name + "}{b}\n";
  return {text + src, FaultSpec{FaultKind::kConflictingDefinition, Span{0, 0},
                                "defined \\" + name + " twice with different bodies"}};
}

std::pair<std::string, FaultSpec> self_recursive(const std::string& src, const Scan& s, SplitMix64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (!is_letter(s.tokens[i]) || !s.info[i].math || s.info[i].in_key) continue;
    if (!is_math_group_owner(s, s.info[i].owner)) continue;
    sites.push_back(i);
  }
  const std::size_t i = choose(sites, rng, FaultKind::kSelfRecursiveMacro);
  const std::string name = fresh_name(src, "rec", rng);
  const std::string def = "\\newcommand{\\" + name + "}{\\" + name + "}\n";
  const Token& t = s.tokens[i];
  std::string out = def + splice(src, t.offset, s.end_of(i), "\\" + name + " ");
  return {std::move(out), FaultSpec{FaultKind::kSelfRecursiveMacro, Span{t.offset, s.end_of(i)},
                                    "replaced '" + t.text + "' with a call to \\" + name + ", which expands to itself"}};
}

}  // namespace

std::pair<std::string, FaultSpec> inject_fault(const std::string& clean, FaultKind kind, const GenParams& params) {
  SplitMix64 rng(derive_seed(params.seed, 0x6661756c74ULL + static_cast<std::uint64_t>(kind)));
  const Scan s = scan(clean);
  switch (kind) {
    case FaultKind::kUnclosedBracket: return unclosed_bracket(clean, s, rng);
    case FaultKind::kUnclosedEnvironment: return unclosed_environment(clean, s, rng);
    case FaultKind::kWrongCommandUsage: return wrong_usage(clean, s, rng);
    case FaultKind::kUndefinedCrossReference: return undefined_reference(clean, s, rng);
    case FaultKind::kConflictingDefinition: return conflicting_definition(clean, s, rng);
    case FaultKind::kSelfRecursiveMacro: return self_recursive(clean, s, rng);
    case FaultKind::kGenericSyntax: break;
  }
  throw InapplicableFault("generic-syntax faults are not injected");
}

std::vector<FaultSample> fault_suite(const GenParams& params) {
  std::vector<FaultSample> out;
  std::uint64_t index = 0;
  for (const auto& [kind, count] : kFaultSuiteCounts) {
    for (int k = 0; k < count; ++k, ++index) {
      GenParams p = params;
      p.seed = derive_seed(params.seed, index);
      Document doc = gen_document(p, 2, 2);
      if (index % 2 == 1) doc.style().define(latex::MacroDef{"half", 0, latex::tokenize("\\frac{1}{2}"), {}});
      FaultSample sample;
      sample.clean = latex::export_latex(doc);
      auto [faulty, spec] = inject_fault(sample.clean, kind, p);
      sample.faulty = std::move(faulty);
      sample.spec = std::move(spec);
      out.push_back(std::move(sample));
    }
  }
  return out;
}

}  // namespace treedoc::corpus
