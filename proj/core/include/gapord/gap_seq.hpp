#ifndef GAPORD_GAP_SEQ_HPP
#define GAPORD_GAP_SEQ_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gapord/errors.hpp"
#include "gapord/ordinal.hpp"

namespace gapord {

// Finite sequence of ordinals, every member strictly below `bound`.
struct GapSeq {
  std::vector<OrdTerm> members;
  OrdTerm bound;

  GapSeq() = default;
  GapSeq(std::vector<OrdTerm> m, OrdTerm b);

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

// A strictly increasing index map witnessing an embedding; produced by the
// brute-force oracle search.
struct Realizer {
  std::vector<std::size_t> map;  // one target index per source index
};

enum class GapVariant { Weak, Gordeev, StrongRealizer, StrongRecursive };

// Exhaustive search for a realizer of the given variant's clauses (the
// recursive variant searches for its realizer-based equivalent).
std::optional<Realizer> find_realizer(const GapSeq& s, const GapSeq& t, GapVariant variant);

// Strong gap condition via its recursive characterization, memoized over
// suffix pairs: the empty sequence embeds anywhere, and <b>*s embeds into
// <g>*t when b <= g and either the tails embed or the whole of <b>*s embeds
// into t.  Note b <= g is required in both disjuncts.
bool leq_r(const GapSeq& s, const GapSeq& t);

bool leq_s(const GapSeq& s, const GapSeq& t);  // delegates to leq_r
bool leq_w(const GapSeq& s, const GapSeq& t);  // <0>-prefix reduction to leq_s
bool leq_g(const GapSeq& s, const GapSeq& t);  // identical to leq_w

// Ground truth: enumerate all strictly increasing maps and check member
// dominance plus the variant's gap clauses.  Exponential; for small inputs.
bool oracle_leq(const GapSeq& s, const GapSeq& t, GapVariant variant);

// Witness for the splitting lemma: given s <=w t_l * t_r, produces s_l, s_r
// with s = s_l * s_r, s_l <=w t_l and s_r <=w t_r; when s_l is nonempty the
// second part even satisfies s_r <=s t_r.  Deterministic (consumes t_l
// greedily).  Throws NotDominated when the precondition fails.
std::pair<GapSeq, GapSeq> split_weak(const GapSeq& s, const GapSeq& t_l, const GapSeq& t_r);

// Helpers shared with the embedding layer.
GapSeq concat(const GapSeq& a, const GapSeq& b);
GapSeq cons(const OrdTerm& head, const GapSeq& s);
GapSeq shift_left_add(const OrdTerm& beta, const GapSeq& s);   // beta + each member
GapSeq shift_left_sub(const OrdTerm& beta, const GapSeq& s);   // -beta + each member

}  // namespace gapord

#endif
