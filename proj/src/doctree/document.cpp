// SPDX-License-Identifier: Apache-2.0

#include "treedoc/document.hpp"

#include "treedoc/error.hpp"

namespace treedoc {

Document::Document() : root_(make_node("document")) {}

Document::Document(Node root, std::string title) : title_(std::move(title)) {
  set_root(std::move(root));
}

void Document::set_root(Node root) {
  if (!root.has_label("document")) {
    throw Error("document root must be a `document` compound, got '" +
                (root.is_leaf() ? std::string("leaf") : root.label()) + "'");
  }
  root_ = std::move(root);
}

Document apply_edit(const Document& doc, const EditRecord& edit) {
  Document out = doc;
  out.set_root(apply_edit(doc.root(), edit));
  return out;
}

}  // namespace treedoc
