// SPDX-License-Identifier: Apache-2.0

#include "treedoc/corpus/records.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "treedoc/corpus/rng.hpp"
#include "treedoc/corpus/variants.hpp"
#include "treedoc/error.hpp"
#include "treedoc/serializer/sexp.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc::corpus {

namespace {

using nlohmann::json;

std::string record_id(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "f%04zu", index);
  return buf;
}

TokenSplit split_tokens(const Node& tree) {
  const auto tokens = tmu_tokens(tree);
  TokenSplit s;
  s.cut = tokens.size() / 2;
  for (std::size_t i = 0; i < tokens.size(); ++i) (i < s.cut ? s.prefix : s.suffix) += tokens[i];
  return s;
}

}  // namespace

CorpusRecord make_record(const GenParams& params, std::size_t index, bool with_split) {
  CorpusRecord r;
  r.id = record_id(index);
  r.category = kAllCategories[index % kAllCategories.size()];
  GenParams p = params;
  p.seed = derive_seed(params.seed, index);
  const Node formula = gen_formula(p, r.category);
  r.tree = make_node("math", {formula});
  r.canonical_sexp = write_sexp(r.tree);
  r.tmu = write_tmu_node(r.tree);
  r.latex_variants = gen_latex_variants(formula, p);
  if (with_split) r.split = split_tokens(r.tree);
  return r;
}

std::vector<CorpusRecord> gen_corpus(const GenParams& params, bool with_split, unsigned threads) {
  const auto count = static_cast<std::size_t>(std::max(params.count, 0));
  std::vector<CorpusRecord> out(count);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = make_record(params, i, with_split);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) out[i] = make_record(params, i, with_split);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::string to_json_line(const CorpusRecord& r) {
  json j;
  j["id"] = r.id;
  j["category"] = std::string(to_string(r.category));
  j["canonical_sexp"] = r.canonical_sexp;
  j["tmu"] = r.tmu;
  j["latex_variants"] = r.latex_variants;
  if (r.split) {
    j["split"] = {{"prefix", r.split->prefix}, {"suffix", r.split->suffix}, {"cut", r.split->cut},
                  {"convention", "first half of the tmu tokens"}};
  }
  return j.dump();
}

CorpusRecord parse_record(std::string_view line, std::size_t line_number) {
  std::string who = "line " + std::to_string(line_number);
  auto fail = [&](const std::string& what) -> Error { return Error("malformed record " + who + ": " + what); };
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw fail("not a JSON object");
  if (j.contains("id") && j["id"].is_string()) who = j["id"].get<std::string>();
  CorpusRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    const auto cat = parse_category(j.at("category").get<std::string>());
    if (!cat) throw fail("unknown category");
    r.category = *cat;
    r.canonical_sexp = j.at("canonical_sexp").get<std::string>();
    r.tmu = j.at("tmu").get<std::string>();
    r.latex_variants = j.at("latex_variants").get<std::vector<std::string>>();
    if (j.contains("split")) {
      const auto& s = j["split"];
      r.split = TokenSplit{s.at("prefix").get<std::string>(), s.at("suffix").get<std::string>(),
                           s.at("cut").get<std::size_t>()};
    }
  } catch (const json::exception& e) {
    throw fail(e.what());
  }
  if (r.latex_variants.empty()) throw fail("no latex_variants");
  try {
    r.tree = read_sexp(r.canonical_sexp);
  } catch (const ParseError& e) {
    throw fail(std::string("canonical_sexp: ") + e.what());
  }
  return r;
}

std::vector<CorpusRecord> read_jsonl(std::string_view text) {
  std::vector<CorpusRecord> out;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    ++line_number;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_record(line, line_number));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::string write_jsonl(const std::vector<CorpusRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_json_line(r) + "\n";
  return out;
}

}  // namespace treedoc::corpus
