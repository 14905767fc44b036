// SPDX-License-Identifier: Apache-2.0

#include "treedoc/metrics/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "treedoc/error.hpp"
#include "treedoc/latex/token.hpp"
#include "treedoc/serializer/sexp.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc::metrics {

namespace {

constexpr std::string_view kFormatNames[] = {"tex", "tmu", "sexp"};

// Joins context tokens with a separator no token contains.
std::string context_key(const std::vector<const std::string*>& window) {
  std::string key;
  for (const auto* t : window) {
    key += t ? *t : std::string("\x01<s>");
    key += '\x00';
  }
  return key;
}

}  // namespace

std::string_view to_string(Format f) { return kFormatNames[static_cast<std::size_t>(f)]; }

std::optional<Format> parse_format(std::string_view text) {
  for (std::size_t i = 0; i < std::size(kFormatNames); ++i) {
    if (kFormatNames[i] == text) return static_cast<Format>(i);
  }
  return std::nullopt;
}

EntropyReport token_entropy(const std::vector<TokenStream>& streams, int order, Format format) {
  if (order != 1 && order != 2) throw Error("token_entropy: order must be 1 or 2");
  // counts[context][token]
  std::unordered_map<std::string, std::unordered_map<std::string, std::size_t>> counts;
  std::set<std::string> vocab;
  std::size_t total = 0;
  for (const auto& stream : streams) {
    std::vector<const std::string*> window(static_cast<std::size_t>(order - 1), nullptr);
    for (const auto& tok : stream) {
      ++counts[context_key(window)][tok];
      vocab.insert(tok);
      ++total;
      if (!window.empty()) {
        window.erase(window.begin());
        window.push_back(&tok);
      }
    }
  }
  if (total == 0) throw Error("token_entropy: the corpus has no tokens");
  // H = -sum_{c,x} n(c,x)/N log2(n(c,x)/n(c))
  double bits = 0.0;
  for (const auto& [ctx, next] : counts) {
    std::size_t ctx_total = 0;
    for (const auto& [tok, n] : next) ctx_total += n;
    for (const auto& [tok, n] : next) {
      bits -= static_cast<double>(n) * std::log2(static_cast<double>(n) / static_cast<double>(ctx_total));
    }
  }
  EntropyReport r;
  r.format = format;
  r.order = order;
  r.bits_per_token = std::max(0.0, bits / static_cast<double>(total));
  r.vocab_size = vocab.size();
  r.token_count = total;
  return r;
}

std::vector<TokenStream> corpus_streams(const std::vector<corpus::CorpusRecord>& records, Format format) {
  std::vector<TokenStream> out;
  for (const auto& r : records) {
    if (format == Format::kTex) {
      for (const auto& v : r.latex_variants) {
        TokenStream s;
        for (const auto& t : latex::tokenize(v)) s.push_back(t.text);
        out.push_back(std::move(s));
      }
      continue;
    }
    const TokenStream s = format == Format::kTmu ? tmu_tokens(r.tree) : sexp_tokens(r.tree);
    for (std::size_t i = 0; i < r.latex_variants.size(); ++i) out.push_back(s);
  }
  return out;
}

std::string to_json(const EntropyReport& r) {
  nlohmann::ordered_json j;
  j["format"] = std::string(to_string(r.format));
  j["order"] = r.order;
  j["bits_per_token"] = r.bits_per_token;
  j["vocab"] = r.vocab_size;
  j["tokens"] = r.token_count;
  return j.dump();
}

std::string to_csv(const std::vector<EntropyReport>& reports) {
  std::string out = "format,order,bits_per_token,vocab,tokens\n";
  for (const auto& r : reports) {
    char bits[64];
    std::snprintf(bits, sizeof bits, "%.6f", r.bits_per_token);
    out += std::string(to_string(r.format)) + "," + std::to_string(r.order) + "," + bits + "," +
           std::to_string(r.vocab_size) + "," + std::to_string(r.token_count) + "\n";
  }
  return out;
}

}  // namespace treedoc::metrics
