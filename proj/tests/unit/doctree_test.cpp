// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>
#include <json.hpp>

#include "treedoc/corpus/formula_gen.hpp"
#include "treedoc/corpus/rng.hpp"
#include "treedoc/doctree/diagnostic.hpp"
#include "treedoc/doctree/edit.hpp"
#include "treedoc/doctree/node.hpp"
#include "treedoc/document.hpp"
#include "treedoc/error.hpp"

namespace treedoc {
namespace {

std::vector<Node> sample_trees(int n) {
  std::vector<Node> out;
  for (int i = 0; i < n; ++i) {
    corpus::GenParams p;
    p.seed = static_cast<std::uint64_t>(i);
    out.push_back(corpus::gen_formula(p, corpus::kAllCategories[static_cast<std::size_t>(i) % 10]));
  }
  return out;
}

// Every path in a tree, pre-order.
void all_paths(const Node& n, Path at, std::vector<Path>& out) {
  out.push_back(at);
  for (std::size_t i = 0; i < n.arity(); ++i) all_paths(n.child(i), at.child(i), out);
}

// Reference edit: rebuilds the whole tree without sharing.
Node rebuild_with(const Node& n, const Path& path, std::size_t depth, const std::function<Node(const Node&)>& f) {
  if (depth == path.depth()) return f(n);
  std::vector<Node> kids;
  for (std::size_t i = 0; i < n.arity(); ++i) {
    kids.push_back(i == path[depth] ? rebuild_with(n.child(i), path, depth + 1, f) : n.child(i));
  }
  return make_node(n.label(), std::move(kids));
}

TEST(NodeTest, LeavesAndCompounds) {
  const Node leaf("x");
  EXPECT_TRUE(leaf.is_leaf());
  EXPECT_EQ(leaf.text(), "x");
  EXPECT_EQ(leaf.size(), 1U);

  const Node f = make_node("frac", {"1", "2"});
  EXPECT_TRUE(f.is_compound());
  EXPECT_TRUE(f.has_label("frac"));
  EXPECT_EQ(f.arity(), 2U);
  EXPECT_EQ(f.size(), 3U);
  EXPECT_EQ(f.child(1).text(), "2");
}

TEST(NodeTest, ArityIsEnforced) {
  try {
    make_node("frac", {"1"});
    FAIL() << "expected ArityError";
  } catch (const ArityError& e) {
    EXPECT_EQ(e.label(), "frac");
    EXPECT_EQ(e.expected(), 2U);
    EXPECT_EQ(e.actual(), 1U);
  }
  EXPECT_THROW(make_node("around*", {"(", "x"}), ArityError);
  EXPECT_THROW(make_node("cell", {}), ArityError);
  EXPECT_NO_THROW(make_node("concat", {}));
  EXPECT_NO_THROW(make_node("item", {}));
}

TEST(NodeTest, UnknownLabelsAreRawAndVariadic) {
  EXPECT_FALSE(is_registered_label("tex:foo"));
  const NodeLabel l = label_of("tex:foo");
  EXPECT_TRUE(l.raw);
  EXPECT_TRUE(l.arity.is_variadic());
  EXPECT_NO_THROW(make_node("tex:foo", {"a", "b", "c"}));
  EXPECT_FALSE(label_of("frac").raw);
}

TEST(NodeTest, TheoremLikeLabels) {
  for (const char* l : {"theorem", "lemma", "proposition", "corollary", "definition", "remark", "example", "conjecture"}) {
    EXPECT_TRUE(is_theorem_like(l)) << l;
  }
  EXPECT_FALSE(is_theorem_like("proof"));
  EXPECT_FALSE(is_theorem_like("section"));
}

TEST(NodeTest, StructuralEqualityIgnoresIdentity) {
  const Node a = make_node("sqrt", {make_node("frac", {"a", "b"})});
  const Node b = make_node("sqrt", {make_node("frac", {"a", "b"})});
  EXPECT_FALSE(a.same_object(b));
  EXPECT_TRUE(struct_eq(a, b));
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_FALSE(struct_eq(a, make_node("sqrt", {make_node("frac", {"a", "c"})})));
  // A leaf never equals a compound with the same text.
  EXPECT_FALSE(struct_eq(Node("concat"), make_node("concat", {})));
}

TEST(NodeTest, CompareIsATotalOrderConsistentWithEquality) {
  const auto trees = sample_trees(60);
  for (const auto& a : trees) {
    EXPECT_EQ(struct_compare(a, a), 0);
    for (const auto& b : trees) {
      const int ab = struct_compare(a, b);
      EXPECT_EQ(ab == 0, struct_eq(a, b));
      EXPECT_EQ(ab, -struct_compare(b, a));
    }
  }
}

TEST(NodeTest, ArityWalkFindsViolations) {
  for (const auto& t : sample_trees(100)) EXPECT_FALSE(find_arity_violation(t).has_value());
}

TEST(PathTest, TextRoundTrip) {
  const Path p{0, 12, 3};
  EXPECT_EQ(p.to_string(), "0.12.3");
  EXPECT_EQ(Path::parse("0.12.3"), p);
  EXPECT_EQ(Path::parse(""), Path());
  EXPECT_EQ(Path::parse("4/5"), (Path{4, 5}));
  EXPECT_THROW(Path::parse("1..2"), Error);
  EXPECT_THROW(Path::parse("1."), Error);
  EXPECT_THROW(Path::parse("a"), Error);
  EXPECT_TRUE((Path{1, 2, 3}).starts_with(Path{1, 2}));
  EXPECT_FALSE((Path{1, 3}).starts_with(Path{1, 2}));
  EXPECT_EQ((Path{1, 2}).parent(), Path{1});
}

TEST(EditTest, ReplaceInsertDelete) {
  const Node root = make_node("concat", {"a", make_node("frac", {"b", "c"}), "d"});
  const Node r = apply_edit(root, EditRecord::replace(Path{1, 0}, Node("b"), Node("z")));
  EXPECT_TRUE(struct_eq(r, make_node("concat", {"a", make_node("frac", {"z", "c"}), "d"})));

  const Node i = apply_edit(root, EditRecord::insert(Path{3}, Node("e")));
  EXPECT_EQ(i.arity(), 4U);
  EXPECT_EQ(i.child(3).text(), "e");

  const Node d = apply_edit(root, EditRecord::remove(Path{0}, Node("a")));
  EXPECT_EQ(d.arity(), 2U);
  EXPECT_TRUE(d.child(0).has_label("frac"));
}

TEST(EditTest, SharesSubtreesOffTheSpine) {
  const Node left = make_node("sqrt", {"x"});
  const Node root = make_node("concat", {left, make_node("frac", {"b", "c"})});
  const Node r = apply_edit(root, EditRecord::replace(Path{1, 1}, Node("c"), Node("y")));
  EXPECT_TRUE(r.child(0).same_object(left));
  EXPECT_TRUE(root.child(1).child(1).text() == "c");  // the input is untouched
}

TEST(EditTest, Errors) {
  const Node root = make_node("concat", {"a", make_node("frac", {"b", "c"})});
  try {
    apply_edit(root, EditRecord::replace(Path{1, 5}, Node("b"), Node("z")));
    FAIL() << "expected PathError";
  } catch (const PathError& e) {
    EXPECT_EQ(e.depth(), 1U);
  }
  EXPECT_THROW(apply_edit(root, EditRecord::replace(Path{0}, Node("stale"), Node("z"))), ConflictError);
  EXPECT_THROW(apply_edit(root, EditRecord::remove(Path{1, 0}, Node("b"))), ArityError);
  EXPECT_THROW(subtree_at(root, Path{0, 0}), PathError);
  EXPECT_FALSE(path_valid(root, Path{2}));
  EXPECT_TRUE(path_valid(root, Path{1, 1}));
}

// Property: apply_edit agrees with a naive rebuild for every replace and
// delete site of every sample tree.
TEST(EditTest, MatchesNaiveRebuild) {
  corpus::SplitMix64 rng(7);
  std::size_t checked = 0;
  for (const auto& t : sample_trees(200)) {
    std::vector<Path> paths;
    all_paths(t, Path(), paths);
    for (const auto& p : paths) {
      if (p.empty()) continue;
      const Node old = subtree_at(t, p);
      const Node fresh("n" + std::to_string(rng.below(100)));
      const Node got = apply_edit(t, EditRecord::replace(p, old, fresh));
      const Node want = rebuild_with(t, p, 0, [&](const Node&) { return fresh; });
      ASSERT_TRUE(struct_eq(got, want)) << p.to_string();
      ++checked;
      const Node parent = subtree_at(t, p.parent());
      if (label_of(parent.label()).arity.is_variadic()) {
        const Node del = apply_edit(t, EditRecord::remove(p, old));
        EXPECT_EQ(del.size(), t.size() - old.size());
        const Node back = apply_edit(del, EditRecord::insert(p, old));
        EXPECT_TRUE(struct_eq(back, t));
      }
    }
  }
  EXPECT_GT(checked, 1000U);
}

TEST(DocumentTest, RootMustBeADocument) {
  EXPECT_THROW(Document(make_node("concat", {"x"})), Error);
  Document d(make_node("document", {"hello"}), "Title");
  EXPECT_EQ(d.title(), "Title");
  const Document e = apply_edit(d, EditRecord::insert(Path{1}, Node("world")));
  EXPECT_EQ(e.root().arity(), 2U);
  EXPECT_EQ(e.title(), "Title");
}

TEST(DiagnosticTest, KindNamesRoundTrip) {
  for (auto k : kAllFaultKinds) EXPECT_EQ(parse_fault_kind(to_string(k)), k);
  EXPECT_EQ(to_string(FaultKind::kUnclosedBracket), "unclosed-bracket");
  EXPECT_EQ(to_string(FaultKind::kSelfRecursiveMacro), "self-recursive-macro");
  EXPECT_FALSE(parse_fault_kind("nope").has_value());
}

TEST(DiagnosticTest, JsonLine) {
  const Diagnostic d{FaultKind::kUnclosedBracket, Path{0, 1}, Span{3, 9}, "never closed", "closed at 9"};
  const auto j = nlohmann::json::parse(to_json_line(d));
  EXPECT_EQ(j["code"], "unclosed-bracket");
  EXPECT_EQ(j["anchor"], "0.1");
  EXPECT_EQ(j["span"][0], 3);
  EXPECT_EQ(j["span"][1], 9);
  EXPECT_EQ(j["message"], "never closed");
  EXPECT_EQ(to_display(d), "offset 3: unclosed-bracket: never closed [closed at 9] (anchor 0.1)");
}

}  // namespace
}  // namespace treedoc
