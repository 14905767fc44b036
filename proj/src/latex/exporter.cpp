// SPDX-License-Identifier: Apache-2.0

#include "treedoc/latex/exporter.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "treedoc/error.hpp"
#include "treedoc/latex/canonicalize.hpp"
#include "treedoc/latex/symbols.hpp"

namespace treedoc::latex {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool is_control_word(std::string_view s) {
  return s.size() > 1 && s[0] == '\\' && std::all_of(s.begin() + 1, s.end(), is_letter);
}

std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

bool starts_with_item(const Node& n) {
  if (n.has_label("item")) return true;
  return n.has_label("concat") && n.arity() > 0 && n.child(0).has_label("item");
}

class Writer {
 public:
  explicit Writer(const MacroTable* style, ExportOptions options = {}) : style_(style), options_(options) {}

  std::string take() { return std::move(out_); }

  void set_math(bool m) { math_ = m; }

  // Source text subject to the control-word separator rule.
  void raw(std::string_view s) {
    if (s.empty()) return;
    if (after_word_) {
      if (is_letter(s[0])) {
        out_ += ' ';
      } else if (!math_ && (s[0] == ' ' || s[0] == '\t' || s[0] == '\n')) {
        out_ += '\\';
      }
    }
    after_word_ = false;
    out_ += s;
  }

  void word(std::string_view w) {
    raw(w);
    after_word_ = true;
  }

  // Layout whitespace between blocks; a control word may precede it freely.
  void layout(std::string_view s) {
    after_word_ = false;
    out_ += s;
  }

  void source(std::string_view s) {
    if (is_control_word(s)) {
      word(s);
    } else {
      raw(s);
    }
  }

  void node(const Node& n, const Path& path) {
    if (n.is_leaf()) {
      leaf(n.text(), path);
      return;
    }
    const std::string& l = n.label();
    if (l == "concat") {
      children(n, path);
    } else if (l == "document") {
      blocks(n, path);
    } else if (l == "math") {
      if (!out_.empty() && out_.back() == '$') raw("{}");
      raw("$");
      in_mode(true, [&] { node(n.child(0), path.child(0)); });
      raw("$");
    } else if (l == "equation") {
      raw("\\begin{equation}");
      in_mode(true, [&] { node(n.child(0), path.child(0)); });
      raw("\\end{equation}");
    } else if (l == "equation*") {
      raw("\\[");
      in_mode(true, [&] { node(n.child(0), path.child(0)); });
      raw("\\]");
    } else if (l == "frac" && options_.over_fractions) {
      raw("{");
      node(n.child(0), path.child(0));
      word("\\over");
      node(n.child(1), path.child(1));
      raw("}");
    } else if (l == "frac") {
      word("\\frac");
      brace(n.child(0), path.child(0));
      brace(n.child(1), path.child(1));
    } else if (l == "sqrt") {
      word("\\sqrt");
      brace(n.child(0), path.child(0));
    } else if (l == "rsub" || l == "rsup") {
      raw(l == "rsub" ? "_" : "^");
      if (options_.bare_scripts && single_token(n.child(0))) {
        node(n.child(0), path.child(0));
      } else {
        brace(n.child(0), path.child(0));
      }
    } else if (l == "big") {
      word("\\" + leaf_text(n.child(0), path));
    } else if (l == "around*") {
      around(n, path);
    } else if (l == "matrix" || l == "cases") {
      table(l, n, path);
    } else if (l == "row") {
      for (std::size_t i = 0; i < n.arity(); ++i) {
        if (i > 0) raw("&");
        node(n.child(i), path.child(i));
      }
    } else if (l == "cell") {
      node(n.child(0), path.child(0));
    } else if (l == "label" || l == "reference" || l == "cite") {
      word(l == "label" ? "\\label" : l == "cite" ? "\\cite" : "\\ref");
      raw("{" + leaf_text(n.child(0), path) + "}");
    } else if (l == "section" || l == "subsection") {
      word("\\" + l);
      in_mode(false, [&] { brace(n.child(0), path.child(0)); });
    } else if (is_theorem_like(l) || l == "proof" || l == "itemize") {
      std::string env = l;
      if (style_) env = style_->alias_for(l).value_or(l);
      env_block(env, n.child(0), path.child(0));
    } else if (l == "figure") {
      layout("\\begin{figure}\n");
      for (std::size_t i = 0; i < n.arity(); ++i) {
        if (i > 0) layout("\n\n");
        node(n.child(i), path.child(i));
      }
      layout("\n\\end{figure}");
    } else if (l == "item") {
      word("\\item");
    } else if (l == "error") {
      throw ExportError(l, path.to_string(), "cannot export an error node at " + where(path));
    } else if (l.rfind("tex-env:", 0) == 0) {
      const std::string env = l.substr(8);
      if (n.arity() == 1 && n.child(0).has_label("document")) {
        env_block(env, n.child(0), path.child(0));
      } else {
        raw("\\begin{" + env + "}");
        in_mode(math_ || opens_math(l), [&] { children(n, path); });
        raw("\\end{" + env + "}");
      }
    } else if (l.rfind("tex:", 0) == 0) {
      raw_command(n, path);
    } else {
      throw ExportError(l, path.to_string(), "label '" + l + "' has no LaTeX form (at " + where(path) + ")");
    }
  }

  void blocks(const Node& doc, const Path& path) {
    const bool saved = math_;
    math_ = false;
    for (std::size_t i = 0; i < doc.arity(); ++i) {
      if (i > 0) layout(starts_with_item(doc.child(i)) ? "\n" : "\n\n");
      node(doc.child(i), path.child(i));
    }
    math_ = saved;
  }

  void leaf(const std::string& s, const Path& path) {
    for (std::size_t i = 0; i < s.size();) {
      if (s[i] == '<') {
        const auto close = s.find('>', i);
        if (close == std::string::npos) {
          throw ExportError("", path.to_string(), "bare '<' in leaf at " + where(path));
        }
        const std::string name = s.substr(i + 1, close - i - 1);
        const auto src = entity_source(name);
        if (!src) throw ExportError("", path.to_string(), "unknown entity <" + name + "> at " + where(path));
        source(*src);
        i = close + 1;
        continue;
      }
      const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(s[i])), s.size() - i);
      character(s.substr(i, len));
      i += len;
    }
  }

 private:
  template <typename F>
  void in_mode(bool m, F&& f) {
    const bool saved = math_;
    math_ = m;
    f();
    math_ = saved;
  }

  static std::string where(const Path& path) { return path.empty() ? "the root" : "path " + path.to_string(); }

  std::string leaf_text(const Node& n, const Path& path) {
    if (!n.is_leaf()) throw ExportError(n.label(), path.to_string(), "expected a leaf at " + where(path));
    return n.text();
  }

  void children(const Node& n, const Path& path) {
    for (std::size_t i = 0; i < n.arity(); ++i) node(n.child(i), path.child(i));
  }

  void brace(const Node& n, const Path& path) {
    raw("{");
    node(n, path);
    raw("}");
  }

  void character(const std::string& c) {
    static constexpr std::string_view kEscaped = "%&#_${}";
    if (c.size() == 1 && kEscaped.find(c[0]) != std::string_view::npos) {
      raw("\\" + c);
    } else if (c == "\\") {
      word("\\textbackslash");
    } else if (c == "^") {
      word("\\textasciicircum");
    } else if (c == "~") {
      word("\\textasciitilde");
    } else if (c == "‖") {
      raw("\\|");
    } else if (c == "⟨") {
      word("\\langle");
    } else if (c == "⟩") {
      word("\\rangle");
    } else {
      raw(c);
    }
  }

  void delimiter(const std::string& d, const Path& path) {
    const auto src = delimiter_source(d);
    if (!src) throw ExportError("around*", path.to_string(), "unknown delimiter '" + d + "' at " + where(path));
    source(*src);
  }

  void around(const Node& n, const Path& path) {
    const std::string l = leaf_text(n.child(0), path.child(0));
    const std::string r = leaf_text(n.child(2), path.child(2));
    const Node& body = n.child(1);
    if (body.has_label("matrix") && !options_.plain_delimiters) {
      const char* env = l == "(" && r == ")" ? "pmatrix" : l == "[" && r == "]" ? "bmatrix"
                                                         : l == "|" && r == "|" ? "vmatrix"
                                                                                : nullptr;
      if (env) {
        table(env, body, path.child(1));
        return;
      }
    }
    if (options_.plain_delimiters && paired(l, r)) {
      character(l);
      node(body, path.child(1));
      character(r);
      return;
    }
    word("\\left");
    delimiter(l, path.child(0));
    node(body, path.child(1));
    word("\\right");
    delimiter(r, path.child(2));
  }

  void table(const std::string& env, const Node& n, const Path& path) {
    raw("\\begin{" + env + "}");
    in_mode(true, [&] {
      for (std::size_t i = 0; i < n.arity(); ++i) {
        if (i > 0) raw("\\\\");
        node(n.child(i), path.child(i));
      }
    });
    raw("\\end{" + env + "}");
  }

  void env_block(const std::string& env, const Node& content, const Path& path) {
    layout("\\begin{" + env + "}\n");
    if (content.has_label("document")) {
      blocks(content, path);
    } else {
      in_mode(false, [&] { node(content, path); });
    }
    layout("\n\\end{" + env + "}");
  }

  void raw_command(const Node& n, const Path& path) {
    const std::string name = n.label().substr(4);
    if (name == "sqrt" && n.arity() == 2) {
      word("\\sqrt");
      raw("[");
      node(n.child(0), path.child(0));
      raw("]");
      brace(n.child(1), path.child(1));
      return;
    }
    if (name == "bigvert") {
      raw("\\big|");
      return;
    }
    source("\\" + name);
    const bool text_args = opens_text(n.label());
    in_mode(text_args ? false : math_, [&] {
      for (std::size_t i = 0; i < n.arity(); ++i) brace(n.child(i), path.child(i));
    });
  }

  // A leaf that reads back as one script argument: one ASCII letter or
  // digit, or one entity spelled as a control word.
  static bool single_token(const Node& n) {
    if (!n.is_leaf()) return false;
    const std::string& s = n.text();
    if (s.size() == 1) return std::isalnum(static_cast<unsigned char>(s[0])) != 0;
    if (s.size() < 3 || s.front() != '<' || s.back() != '>' || s.find('>') != s.size() - 1) return false;
    const auto src = entity_source(s.substr(1, s.size() - 2));
    return src && is_control_word(*src);
  }

  static bool paired(const std::string& l, const std::string& r) {
    return (l == "(" && r == ")") || (l == "[" && r == "]") || (l == "{" && r == "}") || (l == "⟨" && r == "⟩");
  }

  const MacroTable* style_;
  ExportOptions options_;
  std::string out_;
  bool after_word_ = false;
  bool math_ = false;
};

}  // namespace

std::string export_latex(const Document& doc, const MacroTable& style) {
  std::string preamble;
  for (const auto& [alias, target] : style.environments()) {
    preamble += "\\newtheorem{" + alias + "}{" + title_for_theorem_label(target) + "}\n";
  }
  for (const auto& [name, def] : style.macros()) {
    preamble += "\\newcommand{\\" + name + "}";
    if (def.params > 0) preamble += "[" + std::to_string(def.params) + "]";
    preamble += "{" + def.body_text() + "}\n";
  }
  if (!doc.title().empty()) {
    Writer title(nullptr);
    title.leaf(doc.title(), Path());
    preamble += "\\title{" + title.take() + "}\n";
  }
  Writer w(&style);
  w.blocks(doc.root(), Path());
  std::string body = w.take();
  if (preamble.empty()) return body + "\n";
  return preamble + "\n" + body + "\n";
}

std::string export_latex(const Document& doc) { return export_latex(doc, doc.style()); }

std::string export_formula(const Node& x, const ExportOptions& options) {
  Writer w(nullptr, options);
  w.set_math(true);
  w.node(x, Path());
  return w.take();
}

}  // namespace treedoc::latex
