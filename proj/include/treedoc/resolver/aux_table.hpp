// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_RESOLVER_AUX_TABLE_HPP
#define TREEDOC_RESOLVER_AUX_TABLE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace treedoc {

enum class RefKind { kSection, kEquation, kTheorem, kFigure };

std::string_view to_string(RefKind kind);

// Display number and page of one label, e.g. ("5.1", 13).
struct RefValue {
  std::string number;
  int page = 1;
  RefKind kind = RefKind::kSection;
  friend bool operator==(const RefValue&, const RefValue&) = default;
};

namespace detail {
struct ResolveIndex;
}

// Label -> RefValue map stored inline with a document. Values are immutable
// snapshots: copies share storage and writes copy on demand, so handing a
// table to another thread is safe.
//
// A table produced by the resolver also carries a private index that lets the
// incremental resolver skip unchanged regions. Equality ignores the index.
class AuxTable {
 public:
  using Entries = std::map<std::string, RefValue, std::less<>>;

  AuxTable();

  const Entries& entries() const { return *entries_; }
  std::size_t size() const { return entries_->size(); }
  bool empty() const { return entries_->empty(); }
  std::optional<RefValue> lookup(std::string_view label) const;

  void set(const std::string& label, RefValue value);
  void erase(std::string_view label);

  const std::shared_ptr<const detail::ResolveIndex>& index() const { return index_; }
  void set_index(std::shared_ptr<const detail::ResolveIndex> index) { index_ = std::move(index); }

  friend bool operator==(const AuxTable& a, const AuxTable& b) {
    return a.entries_ == b.entries_ || *a.entries_ == *b.entries_;
  }

 private:
  Entries& mutable_entries();

  std::shared_ptr<Entries> entries_;
  std::shared_ptr<const detail::ResolveIndex> index_;
};

// Exact-match lookup; nullopt signals an undefined cross-reference.
std::optional<RefValue> lookup(const AuxTable& aux, std::string_view label);

}  // namespace treedoc

#endif  // TREEDOC_RESOLVER_AUX_TABLE_HPP
