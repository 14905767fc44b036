// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <json.hpp>

#include "../common/scenarios.hpp"
#include "test_util.hpp"
#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/resolver/resolver.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc {
namespace {

Document parse(std::string_view src) {
  auto r = latex::import_latex(src);
  EXPECT_TRUE(r.diagnostics.empty()) << src;
  return r.document;
}

std::string number_of(const AuxTable& t, std::string_view label) {
  const auto v = t.lookup(label);
  return v ? v->number : "<undefined>";
}

TEST(ResolverTest, Numbering) {
  const Document d = parse(R"(\section{A\label{s1}}
\begin{theorem}\label{t1}X\end{theorem}
\begin{equation}x\label{e1}\end{equation}
\subsection{B\label{ss1}}
\begin{lemma}\label{t2}Y\end{lemma}
\section{C\label{s2}}
\begin{equation}y\label{e2}\end{equation}
\begin{figure}\label{f1}\end{figure}
)");
  const auto r = resolve_full(d);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(number_of(r.table, "s1"), "1");
  EXPECT_EQ(number_of(r.table, "t1"), "1.1");
  EXPECT_EQ(number_of(r.table, "e1"), "1.1");
  EXPECT_EQ(number_of(r.table, "ss1"), "1.1");
  EXPECT_EQ(number_of(r.table, "t2"), "1.2");  // theorem-like blocks share one counter
  EXPECT_EQ(number_of(r.table, "s2"), "2");
  EXPECT_EQ(number_of(r.table, "e2"), "2.1");
  EXPECT_EQ(number_of(r.table, "f1"), "2.1");
  EXPECT_EQ(r.table.lookup("t1")->kind, RefKind::kTheorem);
  EXPECT_EQ(r.table.lookup("e2")->kind, RefKind::kEquation);
  EXPECT_EQ(r.table.lookup("f1")->kind, RefKind::kFigure);
  EXPECT_EQ(r.table.lookup("ss1")->kind, RefKind::kSection);
}

TEST(ResolverTest, Pages) {
  std::vector<Node> blocks;
  blocks.push_back(make_node("section", {make_node("concat", {"A", make_node("label", {"a"})})}));
  for (int i = 0; i < 39; ++i) blocks.push_back(Node("line"));
  blocks.push_back(make_node("section", {make_node("concat", {"B", make_node("label", {"b"})})}));
  blocks.push_back(make_node("figure", {make_node("label", {"f"})}));
  blocks.push_back(make_node("section", {make_node("concat", {"C", make_node("label", {"c"})})}));
  const Document d(make_node("document", std::move(blocks)));
  const auto r = resolve_full(d);
  EXPECT_EQ(r.table.lookup("a")->page, 1);
  EXPECT_EQ(r.table.lookup("b")->page, 2);   // line 40
  EXPECT_EQ(r.table.lookup("f")->page, 2);
  EXPECT_EQ(r.table.lookup("c")->page, 2);   // line 51: the figure took ten
  LayoutParams small;
  small.lines_per_page = 10;
  EXPECT_EQ(resolve_full(d, small).table.lookup("c")->page, 6);
  LayoutParams bad;
  bad.lines_per_page = 0;
  EXPECT_THROW(resolve_full(d, bad), Error);
}

TEST(ResolverTest, AssociateLineForSubsectionOnPageThirteen) {
  Document d = testing::associate_document();
  const auto r = resolve_full(d);
  EXPECT_EQ(r.table.lookup("sec:tree-struc-on-mogan"), (RefValue{"5.1", 13, RefKind::kSection}));
  d.aux() = r.table;
  const std::string tmu = write_tmu(d);
  EXPECT_NE(tmu.find("\n<associate|sec:tree-struc-on-mogan|<tuple|5.1|13>>\n"), std::string::npos);
}

TEST(ResolverTest, UndefinedAndDuplicateLabels) {
  const Document d = parse(R"(\section{A\label{x}}\section{B\label{x}}See \ref{y} and \ref{x}.)");
  const auto r = resolve_full(d);
  ASSERT_EQ(r.diagnostics.size(), 2U);
  EXPECT_EQ(r.diagnostics[0].code, FaultKind::kConflictingDefinition);
  EXPECT_EQ(r.diagnostics[1].code, FaultKind::kUndefinedCrossReference);
  EXPECT_TRUE(subtree_at(d.root(), r.diagnostics[1].anchor).has_label("reference"));
  EXPECT_TRUE(subtree_at(d.root(), r.diagnostics[0].anchor).has_label("label"));
  EXPECT_EQ(number_of(r.table, "x"), "1");  // first binding wins
  EXPECT_NE(render_plain(d, r.table).find("See ?? and 1."), std::string::npos);
}

TEST(ResolverTest, LookupIsExact) {
  const Document d = parse(R"(\section{A\label{sec:a}})");
  const auto t = resolve_full(d).table;
  EXPECT_TRUE(lookup(t, "sec:a").has_value());
  EXPECT_FALSE(lookup(t, "sec:A").has_value());
  EXPECT_FALSE(lookup(t, "sec:").has_value());
}

TEST(ResolverTest, ParallelMatchesSequential) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Document d = corpus::gen_document(corpus::GenParams{seed}, 60, 2);
    ResolveOptions par;
    par.parallel = true;
    par.threads = 4;
    const auto a = resolve_full(d);
    const auto b = resolve_full(d, {}, par);
    EXPECT_EQ(a.table, b.table);
    EXPECT_EQ(a.diagnostics.size(), b.diagnostics.size());
  }
}

TEST(ResolverTest, GeneratedDocumentsResolveCompletely) {
  const Document d = corpus::gen_document(corpus::GenParams{1}, 12, 3);
  const auto r = resolve_full(d);
  EXPECT_TRUE(r.diagnostics.empty());
  for (const auto& l : corpus::document_labels(12)) EXPECT_TRUE(r.table.lookup(l).has_value()) << l;
  EXPECT_EQ(r.table.size(), corpus::document_labels(12).size());
  EXPECT_EQ(render_plain(d, r.table).find("??"), std::string::npos);
  const auto kinds = label_kinds(d.root());
  EXPECT_EQ(kinds.at("sec:1"), RefKind::kSection);
  EXPECT_EQ(kinds.at("eq:3"), RefKind::kEquation);
  EXPECT_EQ(kinds.at("thm:2"), RefKind::kTheorem);
  EXPECT_EQ(kinds.at("fig:3"), RefKind::kFigure);
}

// Property: after every edit of random scripts, the incremental table
// equals a full recompute.
TEST(IncrementalTest, MatchesFullRecompute) {
  std::size_t steps = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Document d = corpus::gen_document(corpus::GenParams{seed}, 8, 2);
    const auto check = testing::check_script(d, bench::gen_edit_script(seed, 6));
    EXPECT_EQ(check.mismatches, 0U) << "seed " << seed;
    steps += check.steps;
  }
  EXPECT_GE(steps, 240U);
}

TEST(IncrementalTest, SmallPagesToo) {
  LayoutParams layout;
  layout.lines_per_page = 3;
  layout.figure_lines = 2;
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const Document d = corpus::gen_document(corpus::GenParams{seed}, 6, 1);
    EXPECT_EQ(testing::check_script(d, bench::gen_edit_script(seed, 8), layout).mismatches, 0U);
  }
}

TEST(IncrementalTest, TextEditTouchesLittle) {
  const Document d = corpus::gen_document(corpus::GenParams{2}, 200, 2);
  const auto full = resolve_full(d);
  bench::EditStep step;
  step.kind = bench::EditStep::Kind::kEditText;
  step.a = 7;
  const auto edits = bench::materialize(step, d.root());
  ASSERT_EQ(edits.size(), 1U);
  const Document e = apply_edit(d, edits[0]);
  const auto inc = resolve_incremental(e, full.table, edits[0]);
  EXPECT_EQ(inc.table, resolve_full(e).table);
  EXPECT_EQ(inc.stats.total_nodes, e.root().size());
  EXPECT_LT(inc.stats.touched_nodes * 100, inc.stats.total_nodes);
  EXPECT_EQ(inc.stats.recomputed_refs, 0U);
}

TEST(IncrementalTest, RelabelRecomputesOneReference) {
  const Document d = parse(R"(\section{A\label{a}}\section{B\label{b}}See \ref{a}.)");
  const auto full = resolve_full(d);
  const Path ref_path = [&] {
    const Node& para = d.root().child(2);
    for (std::size_t i = 0; i < para.arity(); ++i)
      if (para.child(i).has_label("reference")) return Path{2, i};
    return Path{};
  }();
  ASSERT_FALSE(ref_path.empty());
  const auto edit = EditRecord::replace(ref_path, subtree_at(d.root(), ref_path), make_node("reference", {"b"}));
  const Document e = apply_edit(d, edit);
  const auto inc = resolve_incremental(e, full.table, edit);
  EXPECT_EQ(inc.table, resolve_full(e).table);
  EXPECT_LE(inc.stats.touched_nodes, 3U);
  EXPECT_NE(render_plain(e, inc.table).find("See 2."), std::string::npos);
}

TEST(IncrementalTest, FallsBackWithoutIndex) {
  const Document d = corpus::gen_document(corpus::GenParams{4}, 5, 1);
  AuxTable plain;
  const AuxTable indexed = resolve_full(d).table;
  for (const auto& [k, v] : indexed.entries()) plain.set(k, v);
  ASSERT_EQ(plain.index(), nullptr);
  const auto edit = EditRecord::insert(Path{0}, make_node("section", {make_node("concat", {"New", make_node("label", {"n"})})}));
  const Document e = apply_edit(d, edit);
  const auto inc = resolve_incremental(e, plain, edit);
  EXPECT_EQ(inc.table, resolve_full(e).table);
  EXPECT_EQ(number_of(inc.table, "sec:1"), "2");
}

TEST(ResolverTest, AuxJson) {
  const Document d = parse(R"(\section{A\label{a}})");
  const auto j = nlohmann::json::parse(aux_to_json(resolve_full(d).table));
  EXPECT_EQ(j["a"]["number"], "1");
  EXPECT_EQ(j["a"]["page"], 1);
  EXPECT_EQ(j["a"]["kind"], "section");
}

}  // namespace
}  // namespace treedoc
