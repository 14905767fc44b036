// SPDX-License-Identifier: Apache-2.0

#include "treedoc/metrics/scoring.hpp"

#include <algorithm>

namespace treedoc::metrics {

namespace {

std::int64_t token_penalty(std::int64_t tokens) { return std::max<std::int64_t>(tokens, 0) / 10000; }

}  // namespace

std::optional<TryIndex> parse_try_index(std::string_view text) {
  if (text == "1" || text == "first") return TryIndex::kFirst;
  if (text == "2" || text == "second") return TryIndex::kSecond;
  if (text == "fail") return TryIndex::kFail;
  return std::nullopt;
}

int score_item(const ScoreInput& s) {
  if (!s.correct) return 0;
  return static_cast<int>(std::max<std::int64_t>(0, 5 - token_penalty(s.tokens)));
}

int score_merge(const ScoreInput& s) {
  const std::int64_t base = s.try_index == TryIndex::kFirst ? 20 : s.try_index == TryIndex::kSecond ? 10 : 0;
  const std::int64_t score = base - 2 * std::int64_t{std::max(s.ref_errors, 0)} - token_penalty(s.tokens) -
                             std::max(s.style_errors, 0);
  return static_cast<int>(std::clamp<std::int64_t>(score, 0, 20));
}

}  // namespace treedoc::metrics
