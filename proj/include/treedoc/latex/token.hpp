// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_TOKEN_HPP
#define TREEDOC_LATEX_TOKEN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace treedoc::latex {

enum class TokenKind {
  kControlWord,       // \frac
  kControlSymbol,     // \{  \\  \,
  kGroupOpen,         // {
  kGroupClose,        // }
  kChar,              // any other code point; whitespace runs are one kChar token
  kMathShift,         // $ or $$
  kSuperscript,       // ^
  kSubscript,         // _
  kAlignment,         // &
  kComment,           // % ... including the terminating newline
  kEnvironmentBegin,  // \begin{name}
  kEnvironmentEnd,    // \end{name}
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kChar;
  std::string text;         // exact source bytes
  std::size_t offset = 0;   // byte index of text in the source

  // Control word/symbol name without the backslash, or the environment name.
  std::string name() const;
  bool is_space() const;
  bool is(TokenKind k, std::string_view n) const { return kind == k && name() == n; }

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenStream = std::vector<Token>;

// Concatenation of token texts.
std::string detokenize(const TokenStream& tokens);

// Lossless lexer: detokenize(tokenize(src)) == src for every input. Unknown
// bytes become char tokens; a lone trailing backslash is a control symbol
// with an empty name.
TokenStream tokenize(std::string_view src);

// A whitespace token holding two or more newlines.
bool is_paragraph_break(const Token& t);

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_TOKEN_HPP
