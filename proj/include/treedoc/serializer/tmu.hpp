// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_SERIALIZER_TMU_HPP
#define TREEDOC_SERIALIZER_TMU_HPP

#include <string>
#include <string_view>
#include <vector>

#include "treedoc/doctree/node.hpp"
#include "treedoc/document.hpp"

namespace treedoc {

// Angle-bracket dialect.
//
//   compound      <label|child|...|child>      zero children: <label>
//   leaf          literal text; `\`, `|`, `<`, `>` escaped with a backslash
//   entity        <name> inside leaf text, name = [A-Za-z][A-Za-z0-9]*,
//                 written verbatim (a leaf that is exactly one entity is
//                 escaped so it cannot be mistaken for a zero-child compound)
//
// A file is the root tree on the first line followed by one line per aux
// entry, sorted by label:
//
//   <associate|sec:tree-struc-on-mogan|<tuple|5.1|13>>
//
// Every line ends with "\n".
std::string write_tmu_node(const Node& node);
Node read_tmu_node(std::string_view text);

std::string write_tmu(const Document& doc);
// Unknown labels are admitted as raw labels. A file holding only associate
// lines yields an empty document. Throws ParseError with a byte offset.
Document read_tmu(std::string_view text);

// Markup tokens of write_tmu_node(node): "<label", "|", ">" and one token
// per (escaped) leaf. Their concatenation is write_tmu_node(node).
std::vector<std::string> tmu_tokens(const Node& node);

// `<associate|label|<tuple|number|page>>` without the newline.
std::string associate_line(const std::string& label, const RefValue& value);

}  // namespace treedoc

#endif  // TREEDOC_SERIALIZER_TMU_HPP
