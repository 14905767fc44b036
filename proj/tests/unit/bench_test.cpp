// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "treedoc/bench/bench.hpp"
#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/error.hpp"
#include "treedoc/resolver/resolver.hpp"

namespace treedoc::bench {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(EditScriptTest, DeterministicAndCoversKinds) {
  const auto a = gen_edit_script(5, 200);
  const auto b = gen_edit_script(5, 200);
  ASSERT_EQ(a.steps.size(), 200U);
  std::set<EditStep::Kind> kinds;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].kind, b.steps[i].kind);
    EXPECT_EQ(a.steps[i].a, b.steps[i].a);
    kinds.insert(a.steps[i].kind);
  }
  EXPECT_EQ(kinds.size(), 5U);
  EXPECT_EQ(to_string(EditStep::Kind::kAddSection), "add-section");
  EXPECT_EQ(to_string(EditStep::Kind::kEditText), "edit-text");
  EXPECT_TRUE(gen_edit_script(1, 0).steps.empty());
}

TEST(MaterializeTest, EachKind) {
  const Document d = corpus::gen_document(corpus::GenParams{1}, 4, 2);
  const Node& root = d.root();
  EditStep s;
  s.tag = "t1";

  s.kind = EditStep::Kind::kAddSection;
  auto e = materialize(s, root);
  ASSERT_EQ(e.size(), 1U);
  EXPECT_EQ(e[0].kind, EditKind::kInsert);
  EXPECT_TRUE(resolve_full(Document(apply_edit(root, e[0]))).table.lookup("new:t1").has_value());

  s.kind = EditStep::Kind::kAddFigure;
  e = materialize(s, root);
  ASSERT_EQ(e.size(), 1U);
  EXPECT_TRUE(e[0].new_node->has_label("figure"));

  s.kind = EditStep::Kind::kMove;
  s.a = 2;
  s.b = 9;
  e = materialize(s, root);
  ASSERT_EQ(e.size(), 2U);
  EXPECT_EQ(e[0].kind, EditKind::kDelete);
  EXPECT_EQ(e[1].kind, EditKind::kInsert);
  const Node moved = apply_edit(apply_edit(root, e[0]), e[1]);
  EXPECT_EQ(moved.size(), root.size());

  s.kind = EditStep::Kind::kRelabel;
  e = materialize(s, root);
  ASSERT_EQ(e.size(), 1U);
  EXPECT_TRUE(e[0].new_node->has_label("reference"));

  s.kind = EditStep::Kind::kEditText;
  e = materialize(s, root);
  ASSERT_EQ(e.size(), 1U);
  EXPECT_TRUE(e[0].new_node->is_leaf());
  EXPECT_NE(e[0].new_node->text().find("Revised."), std::string::npos);
}

TEST(MaterializeTest, MissingTargetThrows) {
  const Document d = corpus::gen_document(corpus::GenParams{1}, 2, 0);
  EditStep s;
  s.kind = EditStep::Kind::kRelabel;
  EXPECT_THROW(materialize(s, d.root()), Error);
}

TEST(RunFullTest, ReportsTimesAndCounts) {
  const Document d = corpus::gen_document(corpus::GenParams{0}, 50, 2);
  const BenchReport r = run_full(d, 2, {}, "d50");
  EXPECT_EQ(r.mode, "full");
  EXPECT_EQ(r.doc_id, "d50");
  EXPECT_EQ(r.samples.size(), 2U);
  EXPECT_GT(r.t_compiling, 0.0);
  EXPECT_GT(r.t_rendering, 0.0);
  EXPECT_GT(r.t_io, 0.0);
  EXPECT_EQ(r.touched.total_nodes, d.root().size());
  EXPECT_EQ(r.touched.touched_nodes, d.root().size());
  EXPECT_THROW(run_full(d, 0), Error);
}

TEST(RunFullTest, EmptyDocument) {
  const Document empty(make_node("document"));
  const BenchReport r = run_full(empty, 1);
  EXPECT_EQ(r.touched.total_nodes, 1U);
  EXPECT_GE(r.t_rendering, 0.0);
}

TEST(RunIncrementalTest, StepsAreVerifiedAndDeterministic) {
  const Document d = corpus::gen_document(corpus::GenParams{3}, 20, 2);
  const auto script = gen_edit_script(3, 6);
  const auto a = run_incremental(d, script, 2, {}, "d");
  const auto b = run_incremental(d, script, 2, {}, "d");
  ASSERT_EQ(a.size(), 6U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mode, "incremental");
    EXPECT_EQ(a[i].step, static_cast<int>(i));
    EXPECT_EQ(a[i].touched.touched_nodes, b[i].touched.touched_nodes);
    EXPECT_EQ(a[i].t_io, 0.0);
  }
  EXPECT_TRUE(run_incremental(d, EditScript{}, 1).empty());
  BenchOptions par;
  par.parallel = true;
  const auto c = run_incremental(d, script, 1, par, "d");
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].touched.touched_nodes, c[i].touched.touched_nodes);
}

TEST(RunIncrementalTest, InapplicableStepNamesItsIndex) {
  const Document d = corpus::gen_document(corpus::GenParams{1}, 3, 0);
  EditScript script;
  script.steps.push_back(EditStep{EditStep::Kind::kEditText, 0, 0, "a"});
  script.steps.push_back(EditStep{EditStep::Kind::kRelabel, 0, 0, "b"});
  try {
    run_incremental(d, script, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos) << e.what();
  }
}

TEST(RunIncrementalTest, TextEditIsLocal) {
  const Document d = corpus::gen_document(corpus::GenParams{0}, 300, 2);
  EditScript script;
  script.steps.push_back(EditStep{EditStep::Kind::kEditText, 11, 0, "x"});
  const auto r = run_incremental(d, script, 3);
  ASSERT_EQ(r.size(), 1U);
  EXPECT_LT(r[0].touched.touched_nodes * 100, r[0].touched.total_nodes);
}

TEST(CsvTest, HeaderAndRows) {
  const Document d = corpus::gen_document(corpus::GenParams{0}, 5, 1);
  std::vector<BenchReport> reports{run_full(d, 2, {}, "doc")};
  const auto inc = run_incremental(d, gen_edit_script(0, 2), 2, {}, "doc");
  reports.insert(reports.end(), inc.begin(), inc.end());
  const auto lines = lines_of(to_csv(reports));
  ASSERT_EQ(lines.size(), 1U + 2U + 2U * 2U);
  EXPECT_EQ(lines[0], "doc_id,mode,trial,t_compiling,t_rendering,t_io,touched,total");
  EXPECT_EQ(lines[1].rfind("doc,full,1,", 0), 0U);
  EXPECT_EQ(lines[3].rfind("doc/step0,incremental,1,", 0), 0U);
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 7);
}

TEST(CsvTest, MedianRendering) {
  BenchReport r;
  r.samples = {{0, 3.0, 0}, {0, 1.0, 0}, {0, 2.0, 0}};
  EXPECT_DOUBLE_EQ(median_rendering(r), 2.0);
}

}  // namespace
}  // namespace treedoc::bench
