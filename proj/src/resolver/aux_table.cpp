// SPDX-License-Identifier: Apache-2.0

#include "treedoc/resolver/aux_table.hpp"

namespace treedoc {

std::string_view to_string(RefKind kind) {
  switch (kind) {
    case RefKind::kSection: return "section";
    case RefKind::kEquation: return "equation";
    case RefKind::kTheorem: return "theorem";
    case RefKind::kFigure: return "figure";
  }
  return "section";
}

AuxTable::AuxTable() : entries_(std::make_shared<Entries>()) {}

std::optional<RefValue> AuxTable::lookup(std::string_view label) const {
  auto it = entries_->find(label);
  if (it == entries_->end()) return std::nullopt;
  return it->second;
}

AuxTable::Entries& AuxTable::mutable_entries() {
  if (entries_.use_count() != 1) entries_ = std::make_shared<Entries>(*entries_);
  return *entries_;
}

void AuxTable::set(const std::string& label, RefValue value) {
  mutable_entries()[label] = std::move(value);
}

void AuxTable::erase(std::string_view label) {
  auto it = entries_->find(label);
  if (it == entries_->end()) return;
  mutable_entries().erase(std::string(label));
}

std::optional<RefValue> lookup(const AuxTable& aux, std::string_view label) {
  return aux.lookup(label);
}

}  // namespace treedoc
