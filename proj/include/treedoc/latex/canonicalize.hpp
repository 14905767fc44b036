// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_LATEX_CANONICALIZE_HPP
#define TREEDOC_LATEX_CANONICALIZE_HPP

#include <string_view>

#include "treedoc/doctree/node.hpp"
#include "treedoc/document.hpp"

namespace treedoc::latex {

// Normal form shared by every render-equivalent source:
//
//   - nested concat flattened, empty leaves dropped, adjacent leaves merged,
//     a singleton concat replaced by its child and an empty one by ""
//   - a list holding one (tex:over) becomes (frac before after)
//   - in math, matching ( ) [ ] { } ⟨ ⟩ characters become around* nodes
//   - (tex:mathrm "d") becomes "<mathd>", (tex:mathbb "R") "<bbbR>"
//
// `math` says whether n sits in math mode; math, equation and equation*
// switch it on, tex:text and friends switch it off. Idempotent; subtrees
// that are already canonical are returned as the same objects.
Node canonicalize(const Node& n, bool math = false);
Document canonicalize(const Document& d);

// True for labels whose children are typeset in math mode.
bool opens_math(std::string_view label);
// True for raw labels whose children are typeset in text mode.
bool opens_text(std::string_view label);

}  // namespace treedoc::latex

#endif  // TREEDOC_LATEX_CANONICALIZE_HPP
