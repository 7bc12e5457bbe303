#include <doctest.h>

#include "gapord/gap_tree.hpp"
#include "gapord/harness.hpp"
#include "gapord/literal.hpp"

using namespace gapord;

namespace {
LabTree<Unit> T(const std::string& s) { return parse_tree(s); }
}  // namespace

TEST_CASE("mk_node validates the ascending conditions") {
  LabTree<Unit> low = mk_node(fin(0), mk_leaf(Unit{}), mk_leaf(Unit{}));
  CHECK_THROWS_AS((void)mk_node(fin(1), low, mk_leaf(Unit{})), AscendingViolation);
  CHECK_THROWS_AS((void)mk_node(fin(1), mk_leaf(Unit{}), low), AscendingViolation);
  CHECK_NOTHROW((void)mk_node(fin(0), mk_leaf(Unit{}), mk_leaf(Unit{})));
  CHECK_NOTHROW((void)mk_node(fin(0), low, low));
  // the left-strict refinement needs a strict increase on the left only
  CHECK_THROWS_AS((void)mk_node(fin(0), low, mk_leaf(Unit{}), true), AscendingViolation);
  CHECK_NOTHROW((void)mk_node(fin(0), mk_leaf(Unit{}), low, true));
}

TEST_CASE("embeddability rules") {
  CHECK(leq_tree(T("."), T(".")));
  for (const auto& t : enum_trees(3, 7, false)) {
    CHECK(leq_tree(t, t));          // reflexivity is derivable
    CHECK(leq_tree(T("."), t));     // a unit leaf descends into anything
  }
  // descending into the left subtree
  CHECK(leq_tree(T("(1 . .)"), T("(0 (1 . .) .)")));
  // componentwise with a weakly smaller root
  CHECK(leq_tree(T("(0 (1 . .) .)"), T("(0 (1 (2 . .) .) (0 . .))")));
  // label increase blocks the root rule and there is nowhere to descend
  CHECK(!leq_tree(T("(1 . .)"), T("(0 . .)")));
  CHECK(!leq_tree(T("(0 (1 . .) (1 . .))"), T("(0 (1 . .) .)")));
}

TEST_CASE("left-strict trees form a suborder") {
  // the relation is the same procedure; the predicate is closed under subtrees
  auto strict = enum_trees(3, 7, true);
  for (const auto& t : strict) {
    CHECK(is_left_strict(t));
    CHECK(is_ascending(t));
    if (!t.is_leaf()) {
      CHECK(is_left_strict(t.left()));
      CHECK(is_left_strict(t.right()));
    }
  }
  // and every left-strict tree appears among the plain ascending ones
  auto all = enum_trees(3, 7, false);
  std::size_t strict_in_all = 0;
  for (const auto& t : all)
    if (is_left_strict(t)) ++strict_in_all;
  CHECK(strict_in_all == strict.size());
}

TEST_CASE("labeled leaves compare through their alphabet") {
  auto leaf_le = [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); };
  LabTree<OrdTerm> a = mk_leaf(fin(1));
  LabTree<OrdTerm> b = mk_leaf(fin(2));
  CHECK(leq_tree(a, b, leaf_le));
  CHECK(!leq_tree(b, a, leaf_le));
  LabTree<OrdTerm> n = mk_node(fin(0), mk_leaf(fin(2)), mk_leaf(fin(0)));
  CHECK(leq_tree(b, n, leaf_le));   // reaches the label-2 leaf
  CHECK(!leq_tree(n, b, leaf_le));
}

TEST_CASE("max inner label") {
  CHECK(max_inner_label(T(".")).is_zero());
  CHECK(max_inner_label(T("(0 (2 . .) (1 . .))")) == fin(2));
}

namespace {

// Unmemoized transcription of the derivation rules, as an independent
// reference for the memoized procedure.
bool naive_tree_leq(const LabTree<Unit>& s, const LabTree<Unit>& t) {
  if (t.is_leaf()) return s.is_leaf();
  if (naive_tree_leq(s, t.left()) || naive_tree_leq(s, t.right())) return true;
  if (s.is_leaf()) return false;
  return ord_le(s.inner_label(), t.inner_label()) &&
         naive_tree_leq(s.left(), t.left()) && naive_tree_leq(s.right(), t.right());
}

}  // namespace

TEST_CASE("memoized embeddability agrees with the rule search") {
  auto pool = enum_trees(2, 7, false);
  for (const auto& s : pool)
    for (const auto& t : pool) CHECK(leq_tree(s, t) == naive_tree_leq(s, t));
}
