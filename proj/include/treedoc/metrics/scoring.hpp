// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_METRICS_SCORING_HPP
#define TREEDOC_METRICS_SCORING_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace treedoc::metrics {

enum class TryIndex { kFirst, kSecond, kFail };
std::optional<TryIndex> parse_try_index(std::string_view text);  // "1", "2", "fail"

struct ScoreInput {
  std::int64_t tokens = 0;  // T: input, thinking, output and tool tokens
  bool correct = false;
  TryIndex try_index = TryIndex::kFirst;
  int ref_errors = 0;    // E_ref
  int style_errors = 0;  // E_sty
};

// Per-item score of the lookup and debugging tasks:
// max(0, correct ? 5 - floor(T / 10^4) : 0). In [0, 5].
int score_item(const ScoreInput& s);

// Merge-task score: max(0, base - 2 E_ref - floor(T / 10^4) - E_sty) with
// base 20 on the first try, 10 on the second and 0 on failure. In [0, 20].
int score_merge(const ScoreInput& s);

}  // namespace treedoc::metrics

#endif  // TREEDOC_METRICS_SCORING_HPP
