// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_METRICS_ENTROPY_HPP
#define TREEDOC_METRICS_ENTROPY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treedoc/corpus/records.hpp"

namespace treedoc::metrics {

// One formula's tokens.
using TokenStream = std::vector<std::string>;

enum class Format { kTex, kTmu, kSexp };
std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view text);

struct EntropyReport {
  Format format = Format::kTex;
  int order = 1;
  double bits_per_token = 0.0;
  std::size_t vocab_size = 0;
  std::size_t token_count = 0;
};

// Empirical conditional entropy H(X_i | X_{i-order+1} .. X_{i-1}) in bits
// per token over all streams. Order 1 is the unigram entropy. Contexts
// reaching before the start of a stream see a boundary marker that is
// never itself predicted, so streams do not leak into each other.
// vocab_size and token_count exclude the marker. `format` is copied into
// the report. Throws Error when order is not 1 or 2 or there are no tokens.
EntropyReport token_entropy(const std::vector<TokenStream>& streams, int order, Format format = Format::kTex);

// Token streams of a corpus in one format. Each LaTeX variant is one
// stream (latex tokenizer, whitespace tokens included); tmu and sexp emit
// the record's canonical serialization once per variant, so every format
// covers the same formula instances. tmu splits at `<`, `|`, `>` with each
// leaf one token; sexp splits at parentheses with each quoted leaf one token.
std::vector<TokenStream> corpus_streams(const std::vector<corpus::CorpusRecord>& records, Format format);

// {"format":"tex","order":2,"bits_per_token":...,"vocab":...,"tokens":...}
std::string to_json(const EntropyReport& r);
// Header line plus one row per report: format,order,bits_per_token,vocab,tokens
std::string to_csv(const std::vector<EntropyReport>& reports);

}  // namespace treedoc::metrics

#endif  // TREEDOC_METRICS_ENTROPY_HPP
