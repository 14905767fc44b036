// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_SERIALIZER_SEXP_HPP
#define TREEDOC_SERIALIZER_SEXP_HPP

#include <string>
#include <string_view>
#include <vector>

#include "treedoc/doctree/node.hpp"
#include "treedoc/document.hpp"

namespace treedoc {

// Parenthesized form: `(frac "1" "2")`. Leaves are double-quoted with `\"`
// and `\\` escapes, labels are bare symbols (labels containing delimiter
// characters are written as |...| symbols), siblings are separated by one
// space, and there is no trailing whitespace or newline.
std::string write_sexp(const Node& node);

// Inverse of write_sexp; surrounding whitespace is ignored. Throws
// ParseError with the byte offset of the failure.
Node read_sexp(std::string_view text);

// Document-level form. A document whose root holds exactly one compound
// child that is not itself a `document` is written as that child, so a
// single imported formula prints as `(math ...)`. read_sexp_document wraps
// any non-document root back into a `document`, which makes the pair an
// exact round trip.
std::string write_sexp_document(const Document& doc);
Document read_sexp_document(std::string_view text);

// Tokens of write_sexp(node) without the separating spaces: "(label", ")"
// and one quoted token per leaf.
std::vector<std::string> sexp_tokens(const Node& node);

}  // namespace treedoc

#endif  // TREEDOC_SERIALIZER_SEXP_HPP
