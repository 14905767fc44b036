// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "../common/cases.hpp"
#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/corpus/formula_gen.hpp"
#include "treedoc/corpus/rng.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/serializer/sexp.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc {
namespace {

// Random trees over a small vocabulary, with leaves that need escaping.
Node random_tree(corpus::SplitMix64& rng, int depth) {
  static const char* const kLeaves[] = {"a", "x\"y", "back\\slash", "p|q", "<alpha>", "a<b", "x>y", "",
                                        " ", "<mathd>x", "<", "(", ")", "é"};
  if (depth == 0 || rng.chance(1, 3)) return Node(kLeaves[rng.below(std::size(kLeaves))]);
  switch (rng.below(6)) {
    case 0: return make_node("frac", {random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 1: return make_node("sqrt", {random_tree(rng, depth - 1)});
    case 2: return make_node("around*", {"(", random_tree(rng, depth - 1), ")"});
    case 3: return make_node("tex:raw label", {random_tree(rng, depth - 1)});
    default: {
      std::vector<Node> kids;
      const auto n = rng.below(4);
      for (std::uint64_t i = 0; i < n; ++i) kids.push_back(random_tree(rng, depth - 1));
      return make_node("concat", std::move(kids));
    }
  }
}

TEST(SexpTest, IntegralGolden) {
  const auto r = latex::import_latex(testing::kIntegralSource);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(write_sexp_document(r.document), testing::kIntegralSexp);
  EXPECT_TRUE(struct_eq(read_sexp_document(testing::kIntegralSexp).root(), r.document.root()));
}

TEST(SexpTest, Format) {
  EXPECT_EQ(write_sexp(make_node("frac", {"1", "2"})), R"((frac "1" "2"))");
  EXPECT_EQ(write_sexp(Node("say \"hi\" \\")), R"("say \"hi\" \\")");
  EXPECT_EQ(write_sexp(make_node("concat")), "(concat)");
  EXPECT_EQ(write_sexp(make_node("tex:a b", {"x"})), R"((|tex:a b| "x"))");
}

TEST(SexpTest, RoundTripRandomTrees) {
  corpus::SplitMix64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const Node t = random_tree(rng, 5);
    const std::string s = write_sexp(t);
    ASSERT_TRUE(struct_eq(read_sexp(s), t)) << s;
    // Tokens drop only the one space before every token but the first and ")".
    std::string joined;
    for (const auto& tok : sexp_tokens(t)) {
      if (!joined.empty() && tok != ")") joined += ' ';
      joined += tok;
    }
    ASSERT_EQ(joined, s);
  }
}

TEST(SexpTest, DistinctTreesPrintDistinctly) {
  corpus::SplitMix64 rng(2);
  std::map<std::string, Node> seen;
  for (int i = 0; i < 3000; ++i) {
    const Node t = random_tree(rng, 4);
    const auto [it, fresh] = seen.emplace(write_sexp(t), t);
    if (!fresh) {
      ASSERT_TRUE(struct_eq(it->second, t)) << it->first;
    }
  }
}

TEST(SexpTest, ParseErrorsCarryOffsets) {
  try {
    read_sexp(R"((frac "1")");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9U);  // end of input
  }
  EXPECT_THROW(read_sexp(R"((frac "1" "2") extra)"), ParseError);
  EXPECT_THROW(read_sexp(R"("unterminated)"), ParseError);
  EXPECT_THROW(read_sexp(R"((frac "1"))"), ParseError);  // arity is checked while reading
  EXPECT_THROW(read_sexp(""), ParseError);
}

TEST(SexpTest, DocumentUnwrapIsExact) {
  const Document one(make_node("document", {make_node("math", {"x"})}));
  EXPECT_EQ(write_sexp_document(one), R"((math "x"))");
  EXPECT_TRUE(struct_eq(read_sexp_document(write_sexp_document(one)).root(), one.root()));
  const Document two(make_node("document", {"text", make_node("math", {"x"})}));
  EXPECT_TRUE(struct_eq(read_sexp_document(write_sexp_document(two)).root(), two.root()));
  const Document nested(make_node("document", {make_node("document", {"x"})}));
  EXPECT_TRUE(struct_eq(read_sexp_document(write_sexp_document(nested)).root(), nested.root()));
}

TEST(TmuTest, Format) {
  EXPECT_EQ(write_tmu_node(make_node("frac", {"1", "2"})), "<frac|1|2>");
  EXPECT_EQ(write_tmu_node(make_node("concat")), "<concat>");
  EXPECT_EQ(write_tmu_node(make_node("math", {"a|b<c"})), "<math|a\\|b\\<c>");
  EXPECT_EQ(write_tmu_node(make_node("math", {"<alpha>+1"})), "<math|<alpha>+1>");
  EXPECT_EQ(write_tmu_node(make_node("math", {"<alpha>"})), "<math|\\<alpha\\>>");
}

TEST(TmuTest, RoundTripRandomTrees) {
  corpus::SplitMix64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const Node t = make_node("math", {random_tree(rng, 5)});
    const std::string s = write_tmu_node(t);
    ASSERT_TRUE(struct_eq(read_tmu_node(s), t)) << s;
    std::string joined;
    for (const auto& tok : tmu_tokens(t)) joined += tok;
    ASSERT_EQ(joined, s);
  }
}

TEST(TmuTest, SexpTokensConcatenateToTheCompactForm) {
  const Node t = make_node("frac", {"a b", make_node("sqrt", {"x"})});
  const auto toks = sexp_tokens(t);
  EXPECT_EQ(toks, (std::vector<std::string>{"(frac", R"("a b")", "(sqrt", R"("x")", ")", ")"}));
}

TEST(TmuTest, DistinctTreesPrintDistinctly) {
  corpus::SplitMix64 rng(4);
  std::map<std::string, Node> seen;
  for (int i = 0; i < 3000; ++i) {
    const Node t = make_node("math", {random_tree(rng, 4)});
    const auto [it, fresh] = seen.emplace(write_tmu_node(t), t);
    if (!fresh) {
      ASSERT_TRUE(struct_eq(it->second, t)) << it->first;
    }
  }
}

TEST(TmuTest, AssociateLine) {
  EXPECT_EQ(associate_line("sec:tree-struc-on-mogan", RefValue{"5.1", 13, RefKind::kSection}),
            "<associate|sec:tree-struc-on-mogan|<tuple|5.1|13>>");
}

TEST(TmuTest, DocumentWithAuxRoundTrips) {
  Document d = corpus::gen_document(corpus::GenParams{}, 3, 1);
  d.aux().set("sec:1", RefValue{"1", 1, RefKind::kSection});
  d.aux().set("eq:1", RefValue{"1.1", 2, RefKind::kEquation});
  const std::string text = write_tmu(d);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text.find("\n<associate|eq:1|<tuple|1.1|2>>\n<associate|sec:1|<tuple|1|1>>\n"), std::string::npos);
  const Document back = read_tmu(text);
  EXPECT_TRUE(struct_eq(back.root(), d.root()));
  EXPECT_EQ(back.aux(), d.aux());
  EXPECT_EQ(write_tmu(back), text);
}

TEST(TmuTest, ParseErrors) {
  EXPECT_THROW(read_tmu_node("<frac|1"), ParseError);
  EXPECT_THROW(read_tmu_node("<frac|1|2>>"), ParseError);
  EXPECT_THROW(read_tmu("<document|x>\n<associate|a|<tuple|1>>\n"), ParseError);
  try {
    read_tmu_node("<math|x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7U);
  }
}

TEST(TmuTest, UnknownLabelsSurvive) {
  const Node t = read_tmu_node("<tex:foo|a|<tex:bar>>");
  EXPECT_TRUE(t.has_label("tex:foo"));
  EXPECT_EQ(write_tmu_node(t), "<tex:foo|a|<tex:bar>>");
}

TEST(SerializerTest, GeneratedFormulasRoundTripInBothForms) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (auto cat : corpus::kAllCategories) {
      corpus::GenParams p;
      p.seed = seed;
      const Node t = make_node("math", {corpus::gen_formula(p, cat)});
      ASSERT_TRUE(struct_eq(read_sexp(write_sexp(t)), t));
      ASSERT_TRUE(struct_eq(read_tmu_node(write_tmu_node(t)), t));
    }
  }
}

}  // namespace
}  // namespace treedoc
