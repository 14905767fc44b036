// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "treedoc/latex/token.hpp"

namespace treedoc::latex {

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_white(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Byte length of the UTF-8 sequence starting with c; invalid lead bytes count as one.
std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xe) return 3;
  if ((c >> 3) == 0x1e) return 4;
  return 1;
}

std::size_t code_point_end(std::string_view src, std::size_t i) {
  const std::size_t n = utf8_length(static_cast<unsigned char>(src[i]));
  std::size_t end = i + 1;
  while (end < src.size() && end < i + n && (static_cast<unsigned char>(src[end]) & 0xc0) == 0x80) ++end;
  return end;
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kControlWord: return "control-word";
    case TokenKind::kControlSymbol: return "control-symbol";
    case TokenKind::kGroupOpen: return "group-open";
    case TokenKind::kGroupClose: return "group-close";
    case TokenKind::kChar: return "char";
    case TokenKind::kMathShift: return "math-shift";
    case TokenKind::kSuperscript: return "superscript";
    case TokenKind::kSubscript: return "subscript";
    case TokenKind::kAlignment: return "alignment";
    case TokenKind::kComment: return "comment";
    case TokenKind::kEnvironmentBegin: return "environment-begin";
    case TokenKind::kEnvironmentEnd: return "environment-end";
  }
  return "char";
}

std::string Token::name() const {
  switch (kind) {
    case TokenKind::kControlWord:
    case TokenKind::kControlSymbol:
      return text.substr(1);
    case TokenKind::kEnvironmentBegin:
    case TokenKind::kEnvironmentEnd: {
      const auto open = text.find('{');
      return text.substr(open + 1, text.size() - open - 2);
    }
    default:
      return text;
  }
}

bool Token::is_space() const {
  return kind == TokenKind::kChar && !text.empty() &&
         std::all_of(text.begin(), text.end(), is_white);
}

bool is_paragraph_break(const Token& t) {
  return t.is_space() && std::count(t.text.begin(), t.text.end(), '\n') >= 2;
}

std::string detokenize(const TokenStream& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

TokenStream tokenize(std::string_view src) {
  TokenStream out;
  std::size_t i = 0;
  auto emit = [&](TokenKind kind, std::size_t end) {
    out.push_back(Token{kind, std::string(src.substr(i, end - i)), i});
    i = end;
  };
  while (i < src.size()) {
    const char c = src[i];
    switch (c) {
      case '\\': {
        if (i + 1 >= src.size()) {
          emit(TokenKind::kControlSymbol, i + 1);
          break;
        }
        if (!is_letter(src[i + 1])) {
          emit(TokenKind::kControlSymbol, code_point_end(src, i + 1));
          break;
        }
        std::size_t j = i + 1;
        while (j < src.size() && is_letter(src[j])) ++j;
        const std::string_view word = src.substr(i + 1, j - i - 1);
        if ((word == "begin" || word == "end") && j < src.size() && src[j] == '{') {
          std::size_t k = j + 1;
          while (k < src.size() && src[k] != '}' && src[k] != '{' && src[k] != '\n' && src[k] != '\\') ++k;
          if (k < src.size() && src[k] == '}' && k > j + 1) {
            emit(word == "begin" ? TokenKind::kEnvironmentBegin : TokenKind::kEnvironmentEnd, k + 1);
            break;
          }
        }
        emit(TokenKind::kControlWord, j);
        break;
      }
      case '{': emit(TokenKind::kGroupOpen, i + 1); break;
      case '}': emit(TokenKind::kGroupClose, i + 1); break;
      case '$':
        emit(TokenKind::kMathShift, i + 1 < src.size() && src[i + 1] == '$' ? i + 2 : i + 1);
        break;
      case '^': emit(TokenKind::kSuperscript, i + 1); break;
      case '_': emit(TokenKind::kSubscript, i + 1); break;
      case '&': emit(TokenKind::kAlignment, i + 1); break;
      case '%': {
        const auto nl = src.find('\n', i);
        emit(TokenKind::kComment, nl == std::string_view::npos ? src.size() : nl + 1);
        break;
      }
      default:
        if (is_white(c)) {
          std::size_t j = i;
          while (j < src.size() && is_white(src[j])) ++j;
          emit(TokenKind::kChar, j);
        } else {
          emit(TokenKind::kChar, code_point_end(src, i));
        }
    }
  }
  return out;
}

}  // namespace treedoc::latex
