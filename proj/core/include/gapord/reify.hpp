#ifndef GAPORD_REIFY_HPP
#define GAPORD_REIFY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gapord/gap_tree.hpp"
#include "gapord/ordinal.hpp"

namespace gapord {

// Type expressions naming the partial orders traversed by the reification:
// the empty order, an ordinal segment, label-bounded trees over a leaf type,
// disjoint sums, products, and finite sequences.  Shared immutable DAG.
class RType {
 public:
  enum class Kind { Empty, Labels, Tree, Sum, Prod, Star };
  struct Rep;
  using Ptr = std::shared_ptr<const Rep>;

  struct Rep {
    Kind kind;
    OrdTerm bound;  // Labels, Tree
    Ptr a, b;       // Tree: leaf type in a; Sum/Prod: a and b; Star: a
  };

  RType() : rep_(empty().rep_) {}
  explicit RType(Ptr p) : rep_(std::move(p)) {}

  static RType empty();
  static RType labels(const OrdTerm& bound);
  static RType tree(const OrdTerm& bound, const RType& leaf);
  static RType sum(const RType& a, const RType& b);
  static RType prod(const RType& a, const RType& b);
  static RType star(const RType& a);

  Kind kind() const { return rep_->kind; }
  const OrdTerm& bound() const { return rep_->bound; }
  RType a() const { return RType(rep_->a); }
  RType b() const { return RType(rep_->b); }
  const Rep* id() const { return rep_.get(); }

 private:
  Ptr rep_;
};

std::string print_rtype(const RType& t);

// Terms inhabiting the types above, each carrying its height.
class RTerm {
 public:
  enum class Kind { OrdElem, Tree, Inj0, Inj1, Pair, Seq };
  struct Rep;
  using Ptr = std::shared_ptr<const Rep>;

  RTerm();  // the empty sequence, for convenience
  explicit RTerm(Ptr p) : rep_(std::move(p)) {}

  static RTerm ord_elem(const OrdTerm& v);
  static RTerm tree(const LabTree<RTerm>& t);
  static RTerm inj0(const RTerm& a);
  static RTerm inj1(const RTerm& a);
  static RTerm pair(const RTerm& a, const RTerm& b);
  static RTerm seq(std::vector<RTerm> elems);

  Kind kind() const;
  const OrdTerm& ord() const;
  const LabTree<RTerm>& tree_value() const;
  const RTerm& child(std::size_t i) const;       // Inj: 0; Pair: 0, 1
  const std::vector<RTerm>& elems() const;       // Seq
  std::uint64_t height() const;
  const Rep* id() const { return rep_.get(); }

 private:
  Ptr rep_;
};

std::string print_rterm(const RTerm& t);

// Order on terms of a common type: ordinal comparison, tree embeddability,
// tag-respecting injections, componentwise pairs, Higman sequences.
bool leq_rterm(const RTerm& a, const RTerm& b);

// The simplified type A(a): every term of A that does not dominate a embeds
// into it, and its order type drops strictly.
RType simplify_type(const RType& A, const RTerm& a);

// The quasi-embedding witness: for a not below-or-equal b, e(A, a, b) lives in
// A(a), and e(A,a,b) <= e(A,a,c) forces b <= c.
RTerm e(const RType& A, const RTerm& a, const RTerm& b);

// Ordinal measure of a type.
OrdTerm otype(const RType& A);

// A[s] for a finite bad sequence s of terms of A.
RType iterate_type(const RType& A, const std::vector<RTerm>& s);

// Reification of tree bad sequences: r(s) strictly decreases under every
// proper bad extension.  Throws NotBad on empty or non-bad input.
OrdTerm reify_tree_badseq(const std::vector<LabTree<Unit>>& s, const OrdTerm& alpha);

// Incremental form of the reification, one extension at a time; push returns
// the value of the extended prefix and throws NotBad if the extension is not.
class TreeBadSeqReifier {
 public:
  explicit TreeBadSeqReifier(const OrdTerm& alpha);
  OrdTerm push(const LabTree<Unit>& t);
  std::size_t size() const { return original_.size(); }

 private:
  std::vector<LabTree<Unit>> original_;
  std::vector<RType> types_;                 // types_[k] after k simplifications
  std::vector<std::optional<RTerm>> firsts_; // first element seen at each level
};

// Lift of a unit-leaf tree into the tree type over sequences of the empty
// type (the unique leaf label becomes the empty sequence).
RTerm lift_unit_tree(const LabTree<Unit>& t);

// Badness of a finite sequence under a comparison: x_i <= x_j never holds for
// i < j.
template <class T, class Leq>
bool is_bad_sequence(const std::vector<T>& xs, Leq&& le) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (le(xs[i], xs[j])) return false;
  return true;
}

}  // namespace gapord

#endif
