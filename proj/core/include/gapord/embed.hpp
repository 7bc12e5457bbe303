#ifndef GAPORD_EMBED_HPP
#define GAPORD_EMBED_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gapord/gap_seq.hpp"
#include "gapord/gap_tree.hpp"
#include "gapord/ordinal.hpp"

namespace gapord {

// A quasi-embedding packaged for the reflection harness: apply together with
// the two comparison procedures.  Order reflection -- target_leq(apply(x),
// apply(y)) implies source_leq(x, y) -- is the property every construction in
// this header promises on its described domain.
template <class X, class Y>
struct EmbedFn {
  std::string name;
  std::function<Y(const X&)> apply;
  std::function<bool(const X&, const X&)> source_leq;
  std::function<bool(const Y&, const Y&)> target_leq;
};

// Greedy Higman subsequence embedding; complete for any reflexive element
// relation (first-match exchange argument).
template <class T, class Leq>
bool higman_leq(const std::vector<T>& s, const std::vector<T>& t, Leq&& le) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < t.size() && i < s.size(); ++j)
    if (le(s[i], t[j])) ++i;
  return i == s.size();
}

// --- sequences into trees ---------------------------------------------------

// Splits at the first occurrence of the minimum: the minimum becomes the root,
// the prefix before it the left subtree, the rest the right subtree.  The
// output always satisfies the left-strict ascending condition.
LabTree<Unit> seq_to_tree(const GapSeq& s);

// --- Veblen terms into weak gap sequences -------------------------------------

// phi(alpha, 0) into weak gap sequences below omega^alpha: zero becomes <0>,
// sums recurse around a 0 separator, and phi(beta, y) left-adds omega^beta to
// the image of y.  Every index occurring in x must be below alpha.
GapSeq phi_to_gapseq(const OrdTerm& x, const OrdTerm& alpha);

// --- weak vs strong -----------------------------------------------------------

GapSeq weak_to_strong(const GapSeq& s);                     // identity
GapSeq strong_to_weak(const GapSeq& s);                     // prepend the top element of bound+1

// --- the bullet order ----------------------------------------------------------

// Sequences over an ordinal alphabet under the Higman order extended by one
// rule: a prefix whose members lie strictly below the matched head may be
// discarded.
struct BulletSeq {
  std::vector<OrdTerm> members;
  OrdTerm alphabet;

  BulletSeq() = default;
  BulletSeq(std::vector<OrdTerm> m, OrdTerm a);
  bool empty() const { return members.empty(); }
};

bool bullet_leq(const BulletSeq& s, const BulletSeq& t);

BulletSeq nat_to_bullet(std::uint64_t n);  // length-n sequence over alphabet 1

// A quasi-embedding of an ordinal segment into bullet sequences, closed under
// the stage construction below.
struct BulletEmbed {
  OrdTerm domain;    // inputs range over [0, domain)
  OrdTerm alphabet;  // output alphabet bound
  std::function<BulletSeq(const OrdTerm&)> apply;
};

BulletEmbed nat_to_bullet_embed();

// Stage n: from g : beta -> alphabet^bullet builds beta^n -> (alphabet+1)^bullet,
// separating base-beta digits with the new top letter.
BulletEmbed bullet_stage(const BulletEmbed& g, std::uint64_t n);

// An ordinal-domain quasi-embedding into gap sequences, with enough metadata
// to compose further constructions on top of it.
struct SeqEmbed {
  OrdTerm domain;
  OrdTerm target_bound;
  std::function<GapSeq(const OrdTerm&)> apply;
};

// From f : alphabet -> S^w_bound builds alphabet^bullet -> S^w_{1+bound}:
// each member maps to 1 + f(member) followed by a 0 separator.
GapSeq bullet_to_weak_apply(const BulletSeq& s, const SeqEmbed& f);
EmbedFn<BulletSeq, GapSeq> bullet_to_weak(const SeqEmbed& f);

// --- lower bounds for the strong order -------------------------------------------

// From f : alpha -> S^w_{w^gamma + delta} builds alpha^(w^gamma) into strong
// sequences over the same bound; images are empty or begin strictly below
// w^gamma.  Digits are read off the base-alpha expansion of the input.
SeqEmbed strong_lower_base(const SeqEmbed& f, const OrdTerm& gamma, const OrdTerm& delta);

// Combines the base map with g : beta -> S^s_delta into alpha * beta ->
// S^s_{w^gamma + delta} via (w^gamma + g(q)) * f(r) on the division input =
// alpha*q + r.  Throws RangePropertyViolated if an f-image starts at or above
// w^gamma.
SeqEmbed strong_lower_combine(const SeqEmbed& f_base, const OrdTerm& alpha,
                              const SeqEmbed& g, const OrdTerm& gamma);

// --- Veblen lower bounds -----------------------------------------------------------

// From f : beta -> S^w_rho avoiding the empty sequence builds
// phi_alpha(beta) -> S^w_{w^alpha + rho}.
GapSeq veblen_lower_seq(const OrdTerm& sigma, const OrdTerm& alpha, const OrdTerm& beta,
                        const OrdTerm& rho, const std::function<GapSeq(const OrdTerm&)>& f);

// From f : beta -> B_{rho,1} avoiding the bare leaf builds
// phi_{1+alpha}(beta) -> B_{w^alpha + rho, 1}.
LabTree<Unit> veblen_lower_tree(const OrdTerm& sigma, const OrdTerm& alpha,
                                const OrdTerm& beta, const std::function<LabTree<Unit>(const OrdTerm&)>& f);

// --- left-set embeddings and label splitting ----------------------------------------

enum class LeftSetVariant { Leaf, Root, Shift };

// Image alphabet of the Root variant: a leaf label, or a label paired with the
// untouched left (tag 1) or right (tag 2) subtree.
template <class Leaf>
struct LeftSetItem {
  int tag = 0;
  Leaf leaf{};
  OrdTerm label;
  LabTree<Leaf> tree;
};

// Root variant: the excluded tree is a node with label 0; trees it does not
// embed into unravel along the spine decided by whether its left subtree
// embeds.
template <class Leaf, class LeafLeq>
std::vector<LeftSetItem<Leaf>> left_set_root(const LabTree<Leaf>& excluded,
                                             const LabTree<Leaf>& u, LeafLeq&& leaf_le) {
  if (excluded.is_leaf() || !excluded.inner_label().is_zero())
    throw PreconditionViolated("left_set_root: excluded tree must be a node labeled 0");
  std::vector<LeftSetItem<Leaf>> out;
  LabTree<Leaf> cur = u;
  const LabTree<Leaf> tl = excluded.left();
  for (;;) {
    if (cur.is_leaf()) {
      LeftSetItem<Leaf> item;
      item.tag = 0;
      item.leaf = cur.leaf_label();
      out.push_back(std::move(item));
      return out;
    }
    LeftSetItem<Leaf> item;
    item.label = cur.inner_label();
    if (!leq_tree(tl, cur.left(), leaf_le)) {
      item.tag = 1;
      item.tree = cur.left();
      out.push_back(std::move(item));
      cur = cur.right();
    } else {
      item.tag = 2;
      item.tree = cur.right();
      out.push_back(std::move(item));
      cur = cur.left();
    }
  }
}

template <class Leaf, class LeafLeq>
bool left_set_item_leq(const LeftSetItem<Leaf>& a, const LeftSetItem<Leaf>& b,
                       LeafLeq&& leaf_le) {
  if (a.tag != b.tag) return false;
  if (a.tag == 0) return leaf_le(a.leaf, b.leaf);
  return ord_le(a.label, b.label) && leq_tree(a.tree, b.tree, leaf_le);
}

// Cuts a tree at the first inner label below `threshold`: nodes below the cut
// keep their labels, maximal subtrees with all labels >= threshold become
// leaves carrying their shifted selves.
template <class Leaf>
LabTree<LabTree<Leaf>> cut_below(const LabTree<Leaf>& t, const OrdTerm& threshold);

template <class Leaf>
LabTree<Leaf> shift_tree_sub(const OrdTerm& beta, const LabTree<Leaf>& t) {
  if (t.is_leaf()) return t;
  return mk_node(lsub(beta, t.inner_label()), shift_tree_sub(beta, t.left()),
                 shift_tree_sub(beta, t.right()));
}

template <class Leaf>
LabTree<Leaf> shift_tree_add(const OrdTerm& beta, const LabTree<Leaf>& t) {
  if (t.is_leaf()) return t;
  return mk_node(add(beta, t.inner_label()), shift_tree_add(beta, t.left()),
                 shift_tree_add(beta, t.right()));
}

template <class Leaf>
LabTree<LabTree<Leaf>> cut_below(const LabTree<Leaf>& t, const OrdTerm& threshold) {
  if (!t.is_leaf() && ord_lt(t.inner_label(), threshold))
    return mk_node(t.inner_label(), cut_below(t.left(), threshold),
                   cut_below(t.right(), threshold));
  // leaf, or all inner labels >= threshold
  return mk_leaf(shift_tree_sub(threshold, t));
}

// Shift variant: threshold w^{gamma_0} comes from the leading Cantor piece of
// the largest inner label of the excluded tree, which must exceed every label
// of a 1-bounded tree.
template <class Leaf>
LabTree<LabTree<Leaf>> left_set_shift(const LabTree<Leaf>& excluded, const LabTree<Leaf>& u) {
  OrdTerm top = max_inner_label(excluded);
  if (top.is_zero())
    throw PreconditionViolated("left_set_shift: excluded tree has no positive inner label");
  OrdTerm gamma0 = cnf_head(top).first;
  return cut_below(u, omega_pow(gamma0));
}

// Splits trees over a decomposable bound w^gamma + delta into trees over
// w^gamma whose leaves are trees over delta.
LabTree<LabTree<Unit>> tree_label_split(const LabTree<Unit>& t, const OrdTerm& alpha);

// --- strong gap decompositions ----------------------------------------------------

// S^s over a finite bound n+1 splits as the shifted all-positive prefix paired
// with the remainder (empty or starting with 0).
struct StrongSplitFin {
  GapSeq low;   // over n
  GapSeq rest;  // over n+1, compared with the weak order
};
StrongSplitFin strong_decompose_fin(const GapSeq& s);

// Tagged letter of the infinite decomposition: a weak-order sequence or an
// ordinal below -1 + gamma.
struct SplitTag {
  bool is_seq = true;
  GapSeq seq;
  OrdTerm ord;
};

struct StrongSplitInf {
  GapSeq high;                // over delta
  std::vector<SplitTag> tail; // Higman over the tagged alphabet
};
StrongSplitInf strong_decompose_inf(const GapSeq& s);

bool split_tag_leq(const SplitTag& a, const SplitTag& b);

}  // namespace gapord

#endif
