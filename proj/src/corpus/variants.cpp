// SPDX-License-Identifier: Apache-2.0

#include "treedoc/corpus/variants.hpp"

#include <algorithm>

#include "treedoc/latex/exporter.hpp"

namespace treedoc::corpus {

std::vector<std::string> gen_latex_variants(const Node& n, const GenParams& /*params*/) {
  constexpr std::size_t kMaxVariants = 8;
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < 8; ++mask) {
    latex::ExportOptions options;
    options.over_fractions = (mask & 1U) != 0;
    options.bare_scripts = (mask & 2U) != 0;
    options.plain_delimiters = (mask & 4U) != 0;
    std::string text = latex::export_formula(n, options);
    if (std::find(out.begin(), out.end(), text) == out.end()) out.push_back(std::move(text));
    if (out.size() == kMaxVariants) break;
  }
  return out;
}

}  // namespace treedoc::corpus
