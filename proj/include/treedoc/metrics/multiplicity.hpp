// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_METRICS_MULTIPLICITY_HPP
#define TREEDOC_METRICS_MULTIPLICITY_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "treedoc/corpus/records.hpp"

namespace treedoc::metrics {

// Distinct source forms per equivalence class (one class per canonical
// tree).
struct MultiplicityReport {
  std::size_t classes = 0;
  double mean_forms_per_class = 0.0;
  std::size_t max_forms = 0;
};

struct MultiplicityReports {
  MultiplicityReport tex;
  MultiplicityReport tmu;
  MultiplicityReport sexp;
};

// Records with the same canonical_sexp form one class. The tex forms of a
// class are its distinct LaTeX variants. The tmu and sexp forms are the
// distinct serializations of every variant after import, together with
// the recorded tmu/sexp, so a variant that fails to canonicalize to the
// class tree shows up as an extra form. Throws Error naming the record id
// when a variant does not import cleanly.
MultiplicityReports class_multiplicity(const std::vector<corpus::CorpusRecord>& records);
// Parses JSON-lines first; malformed lines throw Error naming the record.
MultiplicityReports class_multiplicity(std::string_view jsonl);

}  // namespace treedoc::metrics

#endif  // TREEDOC_METRICS_MULTIPLICITY_HPP
