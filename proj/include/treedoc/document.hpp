// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_DOCUMENT_HPP
#define TREEDOC_DOCUMENT_HPP

#include <string>

#include "treedoc/doctree/edit.hpp"
#include "treedoc/doctree/node.hpp"
#include "treedoc/latex/macro_table.hpp"
#include "treedoc/resolver/aux_table.hpp"

namespace treedoc {

// A root `document` node plus metadata: the title, the inline table of
// resolved references, and the doc-style the source was written in.
class Document {
 public:
  Document();
  // Throws Error unless root is a `document` compound.
  explicit Document(Node root, std::string title = {});

  const Node& root() const { return root_; }
  void set_root(Node root);

  const std::string& title() const { return title_; }
  void set_title(std::string title) { title_ = std::move(title); }

  const AuxTable& aux() const { return aux_; }
  AuxTable& aux() { return aux_; }

  const latex::MacroTable& style() const { return style_; }
  latex::MacroTable& style() { return style_; }

 private:
  Node root_;
  std::string title_;
  AuxTable aux_;
  latex::MacroTable style_;
};

// Returns a new document whose root is apply_edit(doc.root(), edit). Title,
// style and aux are carried over unchanged (aux is stale until re-resolved).
Document apply_edit(const Document& doc, const EditRecord& edit);

}  // namespace treedoc

#endif  // TREEDOC_DOCUMENT_HPP
