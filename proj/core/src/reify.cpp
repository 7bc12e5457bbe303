#include "gapord/reify.hpp"

#include <cassert>
#include <functional>
#include <unordered_map>

#include "gapord/literal.hpp"

namespace gapord {

// --- RType ------------------------------------------------------------------

RType RType::empty() {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Empty;
  return RType(std::move(r));
}

RType RType::labels(const OrdTerm& bound) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Labels;
  r->bound = bound;
  return RType(std::move(r));
}

RType RType::tree(const OrdTerm& bound, const RType& leaf) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Tree;
  r->bound = bound;
  r->a = leaf.rep_;
  return RType(std::move(r));
}

RType RType::sum(const RType& a, const RType& b) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Sum;
  r->a = a.rep_;
  r->b = b.rep_;
  return RType(std::move(r));
}

RType RType::prod(const RType& a, const RType& b) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Prod;
  r->a = a.rep_;
  r->b = b.rep_;
  return RType(std::move(r));
}

RType RType::star(const RType& a) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Star;
  r->a = a.rep_;
  return RType(std::move(r));
}

std::string print_rtype(const RType& t) {
  switch (t.kind()) {
    case RType::Kind::Empty: return "E";
    case RType::Kind::Labels: return "L(" + print_ord(t.bound()) + ")";
    case RType::Kind::Tree:
      return "B(" + print_ord(t.bound()) + "," + print_rtype(t.a()) + ")";
    case RType::Kind::Sum: return "(" + print_rtype(t.a()) + "+" + print_rtype(t.b()) + ")";
    case RType::Kind::Prod: return "(" + print_rtype(t.a()) + "x" + print_rtype(t.b()) + ")";
    case RType::Kind::Star: return print_rtype(t.a()) + "*";
  }
  return "?";
}

// --- RTerm ------------------------------------------------------------------

struct RTerm::Rep {
  Kind kind;
  OrdTerm ord;                         // OrdElem
  std::optional<LabTree<RTerm>> tree;  // Tree
  std::vector<RTerm> kids;             // Inj: 1, Pair: 2, Seq: n
  std::uint64_t height = 0;
};

RTerm::RTerm() : rep_(seq({}).rep_) {}

RTerm RTerm::ord_elem(const OrdTerm& v) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::OrdElem;
  r->ord = v;
  r->height = 0;
  return RTerm(std::move(r));
}

namespace {
std::uint64_t rtree_height(const LabTree<RTerm>& t) {
  if (t.is_leaf()) return t.leaf_label().height() + 1;
  return rtree_height(t.left()) + rtree_height(t.right()) + 1;
}
}  // namespace

RTerm RTerm::tree(const LabTree<RTerm>& t) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Tree;
  r->tree = t;
  r->height = rtree_height(t);
  return RTerm(std::move(r));
}

RTerm RTerm::inj0(const RTerm& a) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Inj0;
  r->kids = {a};
  r->height = a.height() + 1;
  return RTerm(std::move(r));
}

RTerm RTerm::inj1(const RTerm& a) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Inj1;
  r->kids = {a};
  r->height = a.height() + 1;
  return RTerm(std::move(r));
}

RTerm RTerm::pair(const RTerm& a, const RTerm& b) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Pair;
  r->kids = {a, b};
  r->height = a.height() + b.height() + 1;
  return RTerm(std::move(r));
}

RTerm RTerm::seq(std::vector<RTerm> elems) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Seq;
  std::uint64_t h = 0;
  for (const RTerm& x : elems)
    if (x.height() > h) h = x.height();
  r->height = h + 1;
  r->kids = std::move(elems);
  return RTerm(std::move(r));
}

RTerm::Kind RTerm::kind() const { return rep_->kind; }
const OrdTerm& RTerm::ord() const { return rep_->ord; }
const LabTree<RTerm>& RTerm::tree_value() const { return *rep_->tree; }
const RTerm& RTerm::child(std::size_t i) const { return rep_->kids[i]; }
const std::vector<RTerm>& RTerm::elems() const { return rep_->kids; }
std::uint64_t RTerm::height() const { return rep_->height; }

std::string print_rterm(const RTerm& t) {
  switch (t.kind()) {
    case RTerm::Kind::OrdElem: return print_ord(t.ord());
    case RTerm::Kind::Inj0: return "i0(" + print_rterm(t.child(0)) + ")";
    case RTerm::Kind::Inj1: return "i1(" + print_rterm(t.child(0)) + ")";
    case RTerm::Kind::Pair:
      return "<" + print_rterm(t.child(0)) + "," + print_rterm(t.child(1)) + ">";
    case RTerm::Kind::Seq: {
      std::string out = "[";
      for (std::size_t i = 0; i < t.elems().size(); ++i) {
        if (i) out += ',';
        out += print_rterm(t.elems()[i]);
      }
      return out + "]";
    }
    case RTerm::Kind::Tree: {
      const LabTree<RTerm>& tr = t.tree_value();
      if (tr.is_leaf()) return "leaf(" + print_rterm(tr.leaf_label()) + ")";
      return "(" + print_ord(tr.inner_label()) + " " + print_rterm(RTerm::tree(tr.left())) +
             " " + print_rterm(RTerm::tree(tr.right())) + ")";
    }
  }
  return "?";
}

bool leq_rterm(const RTerm& a, const RTerm& b) {
  RTerm::Kind ka = a.kind(), kb = b.kind();
  if ((ka == RTerm::Kind::Inj0 || ka == RTerm::Kind::Inj1) &&
      (kb == RTerm::Kind::Inj0 || kb == RTerm::Kind::Inj1)) {
    if (ka != kb) return false;
    return leq_rterm(a.child(0), b.child(0));
  }
  if (ka != kb) throw TypeMismatch("leq_rterm: terms of different shapes");
  switch (ka) {
    case RTerm::Kind::OrdElem: return ord_le(a.ord(), b.ord());
    case RTerm::Kind::Tree:
      return leq_tree(a.tree_value(), b.tree_value(),
                      [](const RTerm& x, const RTerm& y) { return leq_rterm(x, y); });
    case RTerm::Kind::Pair:
      return leq_rterm(a.child(0), b.child(0)) && leq_rterm(a.child(1), b.child(1));
    case RTerm::Kind::Seq: {
      // greedy subsequence matching, complete for Higman's order
      const auto& s = a.elems();
      const auto& t = b.elems();
      std::size_t i = 0;
      for (std::size_t j = 0; j < t.size() && i < s.size(); ++j)
        if (leq_rterm(s[i], t[j])) ++i;
      return i == s.size();
    }
    default: return false;  // unreachable
  }
}

// --- simplification -----------------------------------------------------------

RType simplify_type(const RType& A, const RTerm& a) {
  switch (A.kind()) {
    case RType::Kind::Empty:
      throw TypeMismatch("simplify_type: the empty type has no terms");
    case RType::Kind::Labels:
      if (a.kind() != RTerm::Kind::OrdElem) throw TypeMismatch("expected an ordinal element");
      return RType::labels(a.ord());
    case RType::Kind::Tree: {
      if (a.kind() != RTerm::Kind::Tree) throw TypeMismatch("expected a tree term");
      const LabTree<RTerm>& t = a.tree_value();
      if (t.is_leaf()) return RType::tree(A.bound(), simplify_type(A.a(), t.leaf_label()));
      RType labels = RType::labels(A.bound());
      RType left = simplify_type(A, RTerm::tree(t.left()));
      RType right = simplify_type(A, RTerm::tree(t.right()));
      RType letter = RType::sum(
          A.a(), RType::sum(RType::prod(labels, left), RType::prod(labels, right)));
      return RType::tree(t.inner_label(), RType::star(letter));
    }
    case RType::Kind::Sum:
      if (a.kind() == RTerm::Kind::Inj0)
        return RType::sum(simplify_type(A.a(), a.child(0)), A.b());
      if (a.kind() == RTerm::Kind::Inj1)
        return RType::sum(A.a(), simplify_type(A.b(), a.child(0)));
      throw TypeMismatch("expected an injection");
    case RType::Kind::Prod:
      if (a.kind() != RTerm::Kind::Pair) throw TypeMismatch("expected a pair");
      return RType::sum(RType::prod(simplify_type(A.a(), a.child(0)), A.b()),
                        RType::prod(A.a(), simplify_type(A.b(), a.child(1))));
    case RType::Kind::Star: {
      if (a.kind() != RTerm::Kind::Seq) throw TypeMismatch("expected a sequence");
      const auto& xs = a.elems();
      if (xs.empty()) return RType::empty();
      RType head = simplify_type(A.a(), xs[0]);
      RType tail = simplify_type(A, RTerm::seq({xs.begin() + 1, xs.end()}));
      return RType::sum(RType::star(head),
                        RType::prod(RType::star(head), RType::prod(A.a(), tail)));
    }
  }
  throw TypeMismatch("unreachable");
}

// --- the embedding family e -----------------------------------------------------

namespace {

RTerm iota1(const RTerm& x) { return RTerm::inj1(RTerm::inj0(x)); }
RTerm iota2(const RTerm& x) { return RTerm::inj1(RTerm::inj1(x)); }

// Spine encoding for trees rejected at a node s = gamma*[sl, sr]: every inner
// label of t is >= gamma, and s does not embed into t.
RTerm tree_spine(const RType& tree_type, const LabTree<RTerm>& sl, const LabTree<RTerm>& sr,
                 const LabTree<RTerm>& t) {
  std::vector<RTerm> items;
  LabTree<RTerm> cur = t;
  auto rleq = [](const RTerm& x, const RTerm& y) { return leq_rterm(x, y); };
  for (;;) {
    if (cur.is_leaf()) {
      items.push_back(RTerm::inj0(cur.leaf_label()));
      return RTerm::seq(std::move(items));
    }
    RTerm label = RTerm::ord_elem(cur.inner_label());
    if (!leq_tree(sl, cur.left(), rleq)) {
      items.push_back(iota1(
          RTerm::pair(label, e(tree_type, RTerm::tree(sl), RTerm::tree(cur.left())))));
      cur = cur.right();
    } else {
      items.push_back(iota2(
          RTerm::pair(label, e(tree_type, RTerm::tree(sr), RTerm::tree(cur.right())))));
      cur = cur.left();
    }
  }
}

LabTree<RTerm> e_tree(const RType& A, const LabTree<RTerm>& s, const LabTree<RTerm>& t);

// e over the tree type with the excluded tree s; A is the whole tree type.
LabTree<RTerm> e_tree(const RType& A, const LabTree<RTerm>& s, const LabTree<RTerm>& t) {
  if (s.is_leaf()) {
    if (t.is_leaf())
      return mk_leaf(e(A.a(), s.leaf_label(), t.leaf_label()));
    return mk_node(t.inner_label(), e_tree(A, s, t.left()), e_tree(A, s, t.right()));
  }
  const OrdTerm& gamma = s.inner_label();
  if (!t.is_leaf() && ord_lt(t.inner_label(), gamma))
    return mk_node(t.inner_label(), e_tree(A, s, t.left()), e_tree(A, s, t.right()));
  return mk_leaf(tree_spine(A, s.left(), s.right(), t));
}

}  // namespace

RTerm e(const RType& A, const RTerm& a, const RTerm& b) {
  if (leq_rterm(a, b))
    throw DominancePreconditionViolated("e: excluded term embeds into the argument");
  switch (A.kind()) {
    case RType::Kind::Labels:
      return b;  // b < a here
    case RType::Kind::Tree: {
      LabTree<RTerm> img = e_tree(A, a.tree_value(), b.tree_value());
      return RTerm::tree(img);
    }
    case RType::Kind::Sum: {
      bool a0 = a.kind() == RTerm::Kind::Inj0;
      bool b0 = b.kind() == RTerm::Kind::Inj0;
      if (a0 && b0) return RTerm::inj0(e(A.a(), a.child(0), b.child(0)));
      if (!a0 && !b0) return RTerm::inj1(e(A.b(), a.child(0), b.child(0)));
      // the other summand is untouched
      return b0 ? RTerm::inj0(b.child(0)) : RTerm::inj1(b.child(0));
    }
    case RType::Kind::Prod: {
      const RTerm& a1 = a.child(0);
      const RTerm& a2 = a.child(1);
      const RTerm& b1 = b.child(0);
      const RTerm& b2 = b.child(1);
      if (!leq_rterm(a1, b1))
        return RTerm::inj0(RTerm::pair(e(A.a(), a1, b1), b2));
      return RTerm::inj1(RTerm::pair(b1, e(A.b(), a2, b2)));
    }
    case RType::Kind::Star: {
      const auto& xs = a.elems();
      const auto& ys = b.elems();
      assert(!xs.empty());
      const RTerm& head = xs[0];
      std::size_t k = ys.size();
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (leq_rterm(head, ys[j])) {
          k = j;
          break;
        }
      }
      if (k == ys.size()) {
        std::vector<RTerm> mapped;
        mapped.reserve(ys.size());
        for (const RTerm& y : ys) mapped.push_back(e(A.a(), head, y));
        return RTerm::inj0(RTerm::seq(std::move(mapped)));
      }
      std::vector<RTerm> prefix;
      prefix.reserve(k);
      for (std::size_t j = 0; j < k; ++j) prefix.push_back(e(A.a(), head, ys[j]));
      RTerm tail = e(A, RTerm::seq({xs.begin() + 1, xs.end()}),
                     RTerm::seq({ys.begin() + k + 1, ys.end()}));
      return RTerm::inj1(
          RTerm::pair(RTerm::seq(std::move(prefix)), RTerm::pair(ys[k], tail)));
    }
    default:
      throw TypeMismatch("e: term does not match its type");
  }
}

// --- ordinal measure --------------------------------------------------------------

namespace {

OrdTerm otype_memo(const RType& A, std::unordered_map<const RType::Rep*, OrdTerm>& memo) {
  auto it = memo.find(A.id());
  if (it != memo.end()) return it->second;
  OrdTerm res;
  switch (A.kind()) {
    case RType::Kind::Empty: res = OrdTerm{}; break;
    case RType::Kind::Labels: res = mk_phi(add(fin(2), A.bound()), OrdTerm{}); break;
    case RType::Kind::Tree:
      res = mk_phi(add(fin(2), A.bound()), add(otype_memo(A.a(), memo), one()));
      break;
    case RType::Kind::Sum:
      res = hessenberg(otype_memo(A.a(), memo), otype_memo(A.b(), memo));
      break;
    case RType::Kind::Prod:
      res = omega_pow(hessenberg(otype_memo(A.a(), memo), otype_memo(A.b(), memo)));
      break;
    case RType::Kind::Star:
      res = mk_phi(one(), add(otype_memo(A.a(), memo), one()));
      break;
  }
  memo.emplace(A.id(), res);
  return res;
}

}  // namespace

OrdTerm otype(const RType& A) {
  std::unordered_map<const RType::Rep*, OrdTerm> memo;
  return otype_memo(A, memo);
}

// --- iterated simplification ----------------------------------------------------

RType iterate_type(const RType& A, const std::vector<RTerm>& s) {
  if (!is_bad_sequence(s, [](const RTerm& x, const RTerm& y) { return leq_rterm(x, y); }))
    throw NotBad("iterate_type: sequence is not bad");
  RType cur = A;
  std::vector<RTerm> todo = s;
  while (!todo.empty()) {
    RTerm head = todo[0];
    std::vector<RTerm> next;
    next.reserve(todo.size() - 1);
    for (std::size_t i = 1; i < todo.size(); ++i) next.push_back(e(cur, head, todo[i]));
    cur = simplify_type(cur, head);
    todo = std::move(next);
  }
  return cur;
}

// --- reification of tree bad sequences --------------------------------------------

RTerm lift_unit_tree(const LabTree<Unit>& t) {
  std::function<LabTree<RTerm>(const LabTree<Unit>&)> go =
      [&](const LabTree<Unit>& u) -> LabTree<RTerm> {
    if (u.is_leaf()) return mk_leaf(RTerm::seq({}));
    return mk_node(u.inner_label(), go(u.left()), go(u.right()));
  };
  return RTerm::tree(go(t));
}

OrdTerm reify_tree_badseq(const std::vector<LabTree<Unit>>& s, const OrdTerm& alpha) {
  if (s.empty()) throw NotBad("reify_tree_badseq: sequence must be nonempty");
  if (!is_bad_sequence(
          s, [](const LabTree<Unit>& x, const LabTree<Unit>& y) { return leq_tree(x, y); }))
    throw NotBad("reify_tree_badseq: sequence is not bad");
  for (const auto& t : s) {
    OrdTerm top = max_inner_label(t);
    if (!t.is_leaf() && !ord_lt(top, alpha))
      throw BoundViolation("reify_tree_badseq: inner label not below alpha");
  }
  RType base = RType::tree(alpha, RType::star(RType::empty()));
  std::vector<RTerm> lifted;
  lifted.reserve(s.size());
  for (const auto& t : s) lifted.push_back(lift_unit_tree(t));
  return otype(iterate_type(base, lifted));
}

TreeBadSeqReifier::TreeBadSeqReifier(const OrdTerm& alpha) {
  types_.push_back(RType::tree(alpha, RType::star(RType::empty())));
}

OrdTerm TreeBadSeqReifier::push(const LabTree<Unit>& t) {
  for (const auto& prev : original_)
    if (leq_tree(prev, t)) throw NotBad("push: an earlier tree embeds into the extension");
  original_.push_back(t);
  RTerm x = lift_unit_tree(t);
  for (std::size_t k = 0;; ++k) {
    if (k == firsts_.size()) {
      firsts_.emplace_back(x);
      types_.push_back(simplify_type(types_[k], x));
      break;
    }
    x = e(types_[k], *firsts_[k], x);
  }
  return otype(types_.back());
}

}  // namespace gapord
