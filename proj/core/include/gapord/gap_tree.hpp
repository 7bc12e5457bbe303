#ifndef GAPORD_GAP_TREE_HPP
#define GAPORD_GAP_TREE_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>

#include "gapord/errors.hpp"
#include "gapord/ordinal.hpp"

namespace gapord {

// Leaf alphabet with a single element.
struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};
inline bool leaf_leq(Unit, Unit) { return true; }
inline bool leaf_leq(const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); }

// A binary tree with inner labels from an ordinal and leaf labels from an
// arbitrary ordered alphabet.  Inner labels ascend weakly towards the leaves,
// so the root label of a valid subtree is the minimum of its inner labels.
// Values are immutable and share structure; copies are cheap.
template <typename Leaf>
class LabTree {
 public:
  struct Node;
  using Ptr = std::shared_ptr<const Node>;

  struct Node {
    bool leaf;
    Leaf label{};     // meaningful when leaf
    OrdTerm inner;    // meaningful when !leaf
    Ptr left, right;  // non-null when !leaf
  };

  LabTree() : root_(make_leaf_node(Leaf{})) {}
  explicit LabTree(Ptr root) : root_(std::move(root)) {}

  bool is_leaf() const { return root_->leaf; }
  const Leaf& leaf_label() const { return root_->label; }
  const OrdTerm& inner_label() const { return root_->inner; }
  LabTree left() const { return LabTree(root_->left); }
  LabTree right() const { return LabTree(root_->right); }
  const Node* id() const { return root_.get(); }
  const Ptr& ptr() const { return root_; }

  std::size_t node_count() const {
    if (is_leaf()) return 1;
    return 1 + left().node_count() + right().node_count();
  }

  static Ptr make_leaf_node(Leaf l) {
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->label = std::move(l);
    return n;
  }

 private:
  Ptr root_;
};

template <typename Leaf>
LabTree<Leaf> mk_leaf(Leaf label) {
  return LabTree<Leaf>(LabTree<Leaf>::make_leaf_node(std::move(label)));
}

// Validating constructor.  Children are assumed valid, so the ascending
// condition only needs the root labels of the subtrees; with left_strict the
// label must lie strictly below every inner label of the left subtree.
template <typename Leaf>
LabTree<Leaf> mk_node(const OrdTerm& b, const LabTree<Leaf>& l, const LabTree<Leaf>& r,
                      bool left_strict = false) {
  if (!l.is_leaf()) {
    Ordering3 c = cmp_ord(b, l.inner_label());
    if (c == Ordering3::GT || (left_strict && c == Ordering3::EQ))
      throw AscendingViolation(left_strict
                                   ? "node label not strictly below left subtree label"
                                   : "node label not below left subtree label");
  }
  if (!r.is_leaf() && cmp_ord(b, r.inner_label()) == Ordering3::GT)
    throw AscendingViolation("node label not below right subtree label");
  auto n = std::make_shared<typename LabTree<Leaf>::Node>();
  n->leaf = false;
  n->inner = b;
  n->left = l.ptr();
  n->right = r.ptr();
  return LabTree<Leaf>(std::move(n));
}

namespace detail {
struct PtrPairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    auto h1 = std::hash<const void*>{}(p.first);
    auto h2 = std::hash<const void*>{}(p.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
}  // namespace detail

// Embeddability: leaves compare by label, a tree embeds into a node by
// descending into either subtree, and nodes embed componentwise with weakly
// smaller label.  Memoized per query on node identities.
template <typename Leaf, typename LeafLeq>
bool leq_tree(const LabTree<Leaf>& s, const LabTree<Leaf>& t, LeafLeq&& leaf_le) {
  std::unordered_map<std::pair<const void*, const void*>, bool, detail::PtrPairHash> memo;
  auto rec = [&](auto&& self, const LabTree<Leaf>& x, const LabTree<Leaf>& y) -> bool {
    auto key = std::make_pair<const void*, const void*>(x.id(), y.id());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool res;
    if (y.is_leaf()) {
      res = x.is_leaf() && leaf_le(x.leaf_label(), y.leaf_label());
    } else if (self(self, x, y.left()) || self(self, x, y.right())) {
      res = true;
    } else if (!x.is_leaf()) {
      res = ord_le(x.inner_label(), y.inner_label()) &&
            self(self, x.left(), y.left()) && self(self, x.right(), y.right());
    } else {
      res = false;
    }
    memo.emplace(key, res);
    return res;
  };
  return rec(rec, s, t);
}

inline bool leq_tree(const LabTree<Unit>& s, const LabTree<Unit>& t) {
  return leq_tree(s, t, [](Unit, Unit) { return true; });
}

// Full validity checks, used at parse boundaries and in tests.  Trees built
// through mk_node from valid children never fail these.
template <typename Leaf>
bool is_ascending(const LabTree<Leaf>& t) {
  if (t.is_leaf()) return true;
  if (!t.left().is_leaf() && ord_lt(t.left().inner_label(), t.inner_label())) return false;
  if (!t.right().is_leaf() && ord_lt(t.right().inner_label(), t.inner_label())) return false;
  return is_ascending(t.left()) && is_ascending(t.right());
}

template <typename Leaf>
bool is_left_strict(const LabTree<Leaf>& t) {
  if (t.is_leaf()) return true;
  if (!t.left().is_leaf() && ord_le(t.left().inner_label(), t.inner_label())) return false;
  return is_left_strict(t.left()) && is_left_strict(t.right());
}

// Largest inner label, or 0 for a leaf.
template <typename Leaf>
OrdTerm max_inner_label(const LabTree<Leaf>& t) {
  if (t.is_leaf()) return OrdTerm{};
  OrdTerm m = t.inner_label();
  OrdTerm ml = max_inner_label(t.left());
  OrdTerm mr = max_inner_label(t.right());
  if (ord_lt(m, ml)) m = ml;
  if (ord_lt(m, mr)) m = mr;
  return m;
}

}  // namespace gapord

#endif
