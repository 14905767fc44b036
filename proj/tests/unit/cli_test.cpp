// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "../../tools/cli.hpp"
#include "../common/cases.hpp"
#include "test_util.hpp"
#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/corpus/records.hpp"
#include "treedoc/latex/exporter.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/latex/merge.hpp"
#include "treedoc/metrics/entropy.hpp"
#include "treedoc/resolver/resolver.hpp"
#include "treedoc/serializer/sexp.hpp"

namespace treedoc::cli {
namespace {

using treedoc::testing::fixture_path;
using treedoc::testing::read_fixture;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("treedoc_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

TEST(CliTest, ImportPrintsTheSexp) {
  const CliRun r = run_cli({"import", fixture_path("eq1.tex")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, std::string(testing::kIntegralSexp) + "\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, StdinInput) {
  const CliRun r = run_cli({"import", "-"}, std::string(testing::kIntegralSource));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, std::string(testing::kIntegralSexp) + "\n");
}

TEST(CliTest, LintReportsJsonDiagnostics) {
  const CliRun r = run_cli({"lint", fixture_path("broken.tex"), "--json"});
  EXPECT_EQ(r.code, kFaults);
  const auto direct = latex::import_latex(read_fixture("broken.tex"));
  EXPECT_EQ(r.out, write_sexp_document(direct.document) + "\n");
  std::istringstream lines(r.err);
  std::string line;
  std::vector<nlohmann::json> diags;
  while (std::getline(lines, line)) diags.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(diags.size(), 1U);
  EXPECT_EQ(diags[0]["code"], "unclosed-bracket");
  EXPECT_EQ(diags[0]["anchor"], direct.diagnostics[0].anchor.to_string());
}

TEST(CliTest, CleanLintExitsZero) {
  const CliRun r = run_cli({"lint", fixture_path("small.tex")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, Score) {
  EXPECT_EQ(run_cli({"score", "--kind", "item", "--correct", "--tokens", "23000"}).out, "3\n");
  EXPECT_EQ(run_cli({"score", "--kind", "merge", "--try", "1", "--tokens", "23000", "--style-errors", "1"}).out, "17\n");
  EXPECT_EQ(run_cli({"score", "--kind", "merge", "--try", "2", "--tokens", "5000", "--ref-errors", "1"}).out, "8\n");
  EXPECT_EQ(run_cli({"score", "--kind", "merge", "--try", "3", "--tokens", "1"}).code, kUsage);
}

TEST(CliTest, ResolveMatchesLibrary) {
  const CliRun r = run_cli({"resolve", fixture_path("small.tex")});
  EXPECT_EQ(r.code, kOk);
  const auto doc = latex::import_latex(read_fixture("small.tex")).document;
  EXPECT_EQ(r.out, aux_to_json(resolve_full(doc).table) + "\n");
}

TEST(CliTest, ConversionsRoundTrip) {
  const CliRun sexp = run_cli({"sexp", fixture_path("small.tex")});
  ASSERT_EQ(sexp.code, kOk);
  const std::string sexp_path = temp_file("small.sexp", sexp.out);
  const CliRun tmu = run_cli({"tmu", sexp_path});
  ASSERT_EQ(tmu.code, kOk);
  EXPECT_NE(tmu.out.find("<associate|thm:main|<tuple|1.1|1>>"), std::string::npos);
  const std::string tmu_path = temp_file("small.tmu", tmu.out);
  const CliRun tex = run_cli({"export", tmu_path});
  ASSERT_EQ(tex.code, kOk);
  const auto back = latex::import_latex(tex.out);
  EXPECT_TRUE(back.diagnostics.empty());
  EXPECT_TRUE(struct_eq(back.document.root(), latex::import_latex(read_fixture("small.tex")).document.root()));
}

TEST(CliTest, EditUpdatesReferences) {
  const std::string src = temp_file("edit.tex", "\\section{A\\label{a}}\n\nSee \\ref{a}.\n");
  const CliRun r = run_cli({"edit", src, "--insert", "0", "--node", R"((section "Intro"))", "--to", "tmu"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("<associate|a|<tuple|2|1>>"), std::string::npos);
  EXPECT_EQ(run_cli({"edit", src, "--delete", "9"}).code, kUsage);
  EXPECT_EQ(run_cli({"edit", src, "--replace", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"edit", src, "--insert", "0", "--node", "(frac"}).code, kUsage);
}

TEST(CliTest, MergeMatchesLibrary) {
  const auto pair = corpus::gen_theorem_proof_pair(corpus::GenParams{2}, 10);
  const std::string lead = temp_file("lead.tex", pair.lead);
  const std::string follower = temp_file("follower.tex", pair.follower);
  const CliRun r = run_cli({"merge", lead, follower});
  EXPECT_EQ(r.code, kOk) << r.err;
  const auto merged = latex::merge_documents(latex::import_latex(pair.lead).document,
                                             latex::import_latex(pair.follower).document);
  EXPECT_EQ(r.out, latex::export_latex(merged.document));
}

TEST(CliTest, CorpusAndEntropyMatchLibrary) {
  const CliRun c = run_cli({"corpus", "--seed", "5", "--count", "40", "--split"});
  ASSERT_EQ(c.code, kOk);
  corpus::GenParams p;
  p.seed = 5;
  p.count = 40;
  const auto records = corpus::gen_corpus(p, true);
  EXPECT_EQ(c.out, corpus::write_jsonl(records));

  const std::string path = temp_file("corpus.jsonl", c.out);
  const CliRun e = run_cli({"entropy", path, "--order", "2", "--format", "tmu", "--json"});
  ASSERT_EQ(e.code, kOk);
  const auto report = metrics::token_entropy(metrics::corpus_streams(records, metrics::Format::kTmu), 2,
                                             metrics::Format::kTmu);
  EXPECT_EQ(e.out, metrics::to_json(report) + "\n");
  const CliRun csv = run_cli({"entropy", path});
  EXPECT_EQ(csv.out.rfind("format,order,bits_per_token,vocab,tokens\n", 0), 0U);
  const CliRun m = run_cli({"entropy", path, "--multiplicity"});
  ASSERT_EQ(m.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(m.out)["tmu"]["mean_forms_per_class"], 1.0);
  const std::string bad = temp_file("bad.jsonl", "{\"id\":\"f0001\"}\n");
  EXPECT_EQ(run_cli({"entropy", bad}).code, kUsage);
}

TEST(CliTest, BenchWritesCsv) {
  const CliRun r = run_cli({"bench", "--sections", "5", "--steps", "2", "--trials", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("doc_id,mode,trial,t_compiling,t_rendering,t_io,touched,total\n", 0), 0U);
  EXPECT_NE(r.out.find("/step1,incremental,"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"import", "/nonexistent/file.tex"}).code, kUsage);
  EXPECT_EQ(run_cli({"score"}).code, kUsage);
  EXPECT_EQ(run_cli({"export", "-"}, "(frac \"1\"").code, kUsage);
  const CliRun help = run_cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("import"), std::string::npos);
}

}  // namespace
}  // namespace treedoc::cli
