// SPDX-License-Identifier: Apache-2.0

#include "treedoc/corpus/document_gen.hpp"

#include <algorithm>
#include <numeric>

#include "treedoc/corpus/rng.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/canonicalize.hpp"
#include "treedoc/latex/exporter.hpp"

namespace treedoc::corpus {

namespace {

constexpr std::string_view kTheoremKinds[] = {"theorem", "lemma", "proposition", "corollary"};

Node formula_for(const GenParams& params, std::uint64_t stream, int index) {
  GenParams p = params;
  p.seed = derive_seed(params.seed, stream);
  p.max_depth = std::clamp(params.max_depth, 1, 3);
  return gen_formula(p, kAllCategories[static_cast<std::size_t>(index) % kAllCategories.size()]);
}

std::string theorem_kind(int i) {
  return std::string(kTheoremKinds[static_cast<std::size_t>(i - 1) % std::size(kTheoremKinds)]);
}

Node labeled(std::string_view label, std::string text, const std::string& key) {
  return make_node(label, {make_node("concat", {Node(std::move(text)), make_node("label", {Node(key)})})});
}

}  // namespace

std::vector<std::string> document_labels(int sections) {
  std::vector<std::string> out;
  for (int i = 1; i <= sections; ++i) {
    const std::string n = std::to_string(i);
    out.push_back("sec:" + n);
    out.push_back("sub:" + n);
    out.push_back("thm:" + n);
    out.push_back("eq:" + n);
    if (i % 3 == 0) out.push_back("fig:" + n);
  }
  return out;
}

Document gen_document(const GenParams& params, int sections, int refs_per_section) {
  if (sections < 1) throw Error("gen_document: at least one section is required");
  const std::vector<std::string> targets = document_labels(sections);
  SplitMix64 rng(derive_seed(params.seed, 0x646f63ULL));

  std::vector<Node> blocks;
  for (int i = 1; i <= sections; ++i) {
    const std::string n = std::to_string(i);
    const auto stream = static_cast<std::uint64_t>(i) * 4;
    blocks.push_back(labeled("section", "Section " + n, "sec:" + n));
    blocks.push_back(make_node("concat", {Node("We study "), make_node("math", {formula_for(params, stream, i)}),
                                          Node(" in this part.")}));
    blocks.push_back(labeled("subsection", "Details " + n, "sub:" + n));
    blocks.push_back(make_node(
        theorem_kind(i),
        {make_node("document", {make_node("concat", {make_node("label", {Node("thm:" + n)}),
                                                     Node(" Statement " + n + " holds for "),
                                                     make_node("math", {formula_for(params, stream + 1, i + 3)}),
                                                     Node(".")})})}));
    blocks.push_back(make_node(
        "equation", {make_node("concat", {formula_for(params, stream + 2, i + 7), make_node("label", {Node("eq:" + n)})})}));
    if (i % 3 == 0) blocks.push_back(make_node("figure", {make_node("label", {Node("fig:" + n)})}));
    if (refs_per_section > 0) {
      std::vector<Node> parts{Node("See ")};
      for (int r = 0; r < refs_per_section; ++r) {
        if (r > 0) parts.push_back(Node(r + 1 == refs_per_section ? " and " : ", "));
        parts.push_back(make_node("reference", {Node(targets[rng.below(targets.size())])}));
      }
      parts.push_back(Node("."));
      blocks.push_back(make_node("concat", std::move(parts)));
      blocks.push_back(make_node(
          "proof", {make_node("document", {make_node("concat", {Node("By "), make_node("reference", {Node("thm:" + n)}),
                                                                Node(" and the definitions.")})})}));
    }
  }
  return latex::canonicalize(
      Document(make_node("document", std::move(blocks)), "Synthetic document " + std::to_string(params.seed)));
}

TheoremProofPair gen_theorem_proof_pair(const GenParams& params, int theorems) {
  if (theorems < 1) throw Error("gen_theorem_proof_pair: at least one theorem is required");
  TheoremProofPair out;
  std::vector<Node> lead_blocks{labeled("section", "Results", "sec:results")};
  std::vector<Node> proofs;
  for (int i = 1; i <= theorems; ++i) {
    const std::string key = "thm:" + std::to_string(i);
    out.theorem_labels.push_back(key);
    lead_blocks.push_back(make_node(
        i % 3 == 0 ? "lemma" : "theorem",
        {make_node("document", {make_node("concat", {make_node("label", {Node(key)}), Node(" For all inputs, "),
                                                     make_node("math", {formula_for(params, 2ULL * i, i)}),
                                                     Node(".")})})}));
    proofs.push_back(make_node(
        "proof", {make_node("document", {make_node("concat", {Node("By "), make_node("reference", {Node(key)}),
                                                              Node(" and "),
                                                              make_node("math", {formula_for(params, 2ULL * i + 1, i + 5)}),
                                                              Node(".")})})}));
  }
  SplitMix64 rng(derive_seed(params.seed, 0x70726fULL));
  rng.shuffle(std::span<Node>(proofs));

  Document lead(make_node("document", std::move(lead_blocks)), "Lead");
  lead.style().alias_environment("thm", "theorem");
  lead.style().alias_environment("lem", "lemma");
  lead.style().define(latex::MacroDef{"R", 0, latex::tokenize("\\mathbb{R}"), {"lead", 0}});
  Document follower(make_node("document", std::move(proofs)), "Follower");
  follower.style().alias_environment("theo", "theorem");
  follower.style().alias_environment("lemm", "lemma");
  follower.style().define(latex::MacroDef{"reals", 0, latex::tokenize("\\mathbb{R}"), {"follower", 0}});

  out.lead = latex::export_latex(lead);
  out.follower = latex::export_latex(follower);
  return out;
}

}  // namespace treedoc::corpus
