// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_CORPUS_RECORDS_HPP
#define TREEDOC_CORPUS_RECORDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treedoc/corpus/formula_gen.hpp"
#include "treedoc/doctree/node.hpp"

namespace treedoc::corpus {

// Prefix/suffix cut of a record's tmu token sequence for completion tasks.
// The cut point is a convention: half of the tokens, rounded down.
struct TokenSplit {
  std::string prefix;
  std::string suffix;
  std::size_t cut = 0;  // tokens in the prefix
};

// One corpus entry. `tree` is the math node holding the formula; both
// serializations are of that node.
struct CorpusRecord {
  std::string id;
  FormulaCategory category = FormulaCategory::kFraction;
  Node tree;
  std::string canonical_sexp;
  std::string tmu;
  std::vector<std::string> latex_variants;
  std::optional<TokenSplit> split;
};

// Record `index` of the corpus seeded with params.seed: category
// index % 10, formula seed derive_seed(seed, index), id "f0042".
CorpusRecord make_record(const GenParams& params, std::size_t index, bool with_split = false);

// params.count records. `threads` > 1 fans out over (seed, index); the
// output does not depend on it.
std::vector<CorpusRecord> gen_corpus(const GenParams& params, bool with_split = false, unsigned threads = 1);

// One JSON object per record, no trailing newline:
// {"id", "category", "canonical_sexp", "tmu", "latex_variants", "split"?}
std::string to_json_line(const CorpusRecord& r);
// Parses one line and rebuilds `tree` from canonical_sexp. Throws Error
// naming the record id (or "line N" when there is none) on malformed input.
CorpusRecord parse_record(std::string_view line, std::size_t line_number = 0);
std::vector<CorpusRecord> read_jsonl(std::string_view text);
std::string write_jsonl(const std::vector<CorpusRecord>& records);

}  // namespace treedoc::corpus

#endif  // TREEDOC_CORPUS_RECORDS_HPP
