#include "gapord/gap_seq.hpp"

#include <algorithm>
#include <cassert>

namespace gapord {

GapSeq::GapSeq(std::vector<OrdTerm> m, OrdTerm b) : members(std::move(m)), bound(std::move(b)) {
  for (const OrdTerm& x : members)
    if (!ord_lt(x, bound)) throw BoundViolation("sequence member not below bound");
}

namespace {

void require_same_bound(const GapSeq& s, const GapSeq& t) {
  if (!ord_eq(s.bound, t.bound))
    throw BoundMismatch("sequences compared across different bounds");
}

// DP over suffix pairs of the recursive strong order.
bool leq_r_impl(const std::vector<OrdTerm>& s, const std::vector<OrdTerm>& t) {
  const std::size_t n = s.size(), m = t.size();
  // table[i][j] = suffix of s from i embeds into suffix of t from j
  std::vector<std::vector<char>> table(n + 1, std::vector<char>(m + 1, 0));
  for (std::size_t j = 0; j <= m; ++j) table[n][j] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      table[i][j] = ord_le(s[i], t[j]) && (table[i + 1][j + 1] || table[i][j + 1]);
    }
    table[i][m] = 0;
  }
  return table[0][0];
}

}  // namespace

bool leq_r(const GapSeq& s, const GapSeq& t) {
  require_same_bound(s, t);
  return leq_r_impl(s.members, t.members);
}

bool leq_s(const GapSeq& s, const GapSeq& t) { return leq_r(s, t); }

bool leq_w(const GapSeq& s, const GapSeq& t) {
  require_same_bound(s, t);
  if (s.empty()) return true;
  std::vector<OrdTerm> s0, t0;
  s0.reserve(s.size() + 1);
  t0.reserve(t.size() + 1);
  s0.push_back(OrdTerm{});
  t0.push_back(OrdTerm{});
  s0.insert(s0.end(), s.members.begin(), s.members.end());
  t0.insert(t0.end(), t.members.begin(), t.members.end());
  return leq_r_impl(s0, t0);
}

bool leq_g(const GapSeq& s, const GapSeq& t) { return leq_w(s, t); }

namespace {

bool realizer_ok(const GapSeq& s, const GapSeq& t, const std::vector<std::size_t>& f,
                 GapVariant variant) {
  const auto& sm = s.members;
  const auto& tm = t.members;
  for (std::size_t i = 0; i < sm.size(); ++i)
    if (!ord_le(sm[i], tm[f[i]])) return false;
  // inner gaps
  for (std::size_t i = 0; i + 1 < sm.size(); ++i) {
    for (std::size_t j = f[i] + 1; j < f[i + 1]; ++j) {
      bool right = ord_le(sm[i + 1], tm[j]);
      bool left = ord_le(sm[i], tm[j]);
      bool ok = (variant == GapVariant::Gordeev) ? (left || right) : right;
      if (!ok) return false;
    }
  }
  // outer gap
  if (variant == GapVariant::StrongRealizer && !sm.empty()) {
    for (std::size_t j = 0; j < f[0]; ++j)
      if (!ord_le(sm[0], tm[j])) return false;
  }
  return true;
}

bool search_realizer(const GapSeq& s, const GapSeq& t, GapVariant variant,
                     std::vector<std::size_t>& f, std::size_t i, std::size_t from) {
  if (i == s.size()) return realizer_ok(s, t, f, variant);
  for (std::size_t j = from; j + (s.size() - i - 1) < t.size(); ++j) {
    f[i] = j;
    if (search_realizer(s, t, variant, f, i + 1, j + 1)) return true;
  }
  return false;
}

GapVariant realizer_variant(GapVariant v) {
  // the recursive presentation shares the strong clauses
  return v == GapVariant::StrongRecursive ? GapVariant::StrongRealizer : v;
}

// Unmemoized transcription of the recursive definition, as an independent
// reference point for the DP.
bool naive_r(const std::vector<OrdTerm>& s, std::size_t i, const std::vector<OrdTerm>& t,
             std::size_t j) {
  if (i == s.size()) return true;
  if (j == t.size()) return false;
  if (!ord_le(s[i], t[j])) return false;
  return naive_r(s, i + 1, t, j + 1) || naive_r(s, i, t, j + 1);
}

}  // namespace

std::optional<Realizer> find_realizer(const GapSeq& s, const GapSeq& t, GapVariant variant) {
  require_same_bound(s, t);
  if (s.size() > t.size()) return std::nullopt;
  std::vector<std::size_t> f(s.size());
  if (!search_realizer(s, t, realizer_variant(variant), f, 0, 0)) return std::nullopt;
  return Realizer{std::move(f)};
}

bool oracle_leq(const GapSeq& s, const GapSeq& t, GapVariant variant) {
  require_same_bound(s, t);
  if (variant == GapVariant::StrongRecursive)
    return naive_r(s.members, 0, t.members, 0);
  return find_realizer(s, t, variant).has_value();
}

GapSeq concat(const GapSeq& a, const GapSeq& b) {
  if (!ord_eq(a.bound, b.bound)) throw BoundMismatch("concat across different bounds");
  std::vector<OrdTerm> m = a.members;
  m.insert(m.end(), b.members.begin(), b.members.end());
  return GapSeq(std::move(m), a.bound);
}

GapSeq cons(const OrdTerm& head, const GapSeq& s) {
  std::vector<OrdTerm> m;
  m.reserve(s.size() + 1);
  m.push_back(head);
  m.insert(m.end(), s.members.begin(), s.members.end());
  return GapSeq(std::move(m), s.bound);
}

GapSeq shift_left_add(const OrdTerm& beta, const GapSeq& s) {
  std::vector<OrdTerm> m;
  m.reserve(s.size());
  for (const OrdTerm& x : s.members) m.push_back(add(beta, x));
  GapSeq out;
  out.members = std::move(m);
  out.bound = add(beta, s.bound);
  return out;
}

GapSeq shift_left_sub(const OrdTerm& beta, const GapSeq& s) {
  std::vector<OrdTerm> m;
  m.reserve(s.size());
  for (const OrdTerm& x : s.members) m.push_back(lsub(beta, x));
  GapSeq out;
  out.members = std::move(m);
  out.bound = s.bound;
  return out;
}

namespace {

using Members = std::vector<OrdTerm>;

// Strong split along the derivation, consuming t_l heads eagerly: given
// s <=s t_l * t_r, find s = s_l * s_r with s_l <=s t_l and s_r <=s t_r.
// Returns the length of s_l.
std::size_t split_strong(const Members& s, std::size_t si, const Members& t_l,
                         std::size_t ti, const Members& t_r) {
  if (ti == t_l.size()) return 0;
  if (si == s.size()) return 0;
  // both branches of a valid derivation require s[si] <= t_l[ti]
  assert(ord_le(s[si], t_l[ti]));
  // prefer dropping the t_l head without consuming s
  {
    Members rest(s.begin() + si, s.end());
    Members target(t_l.begin() + ti + 1, t_l.end());
    target.insert(target.end(), t_r.begin(), t_r.end());
    if (leq_r_impl(rest, target)) return split_strong(s, si, t_l, ti + 1, t_r);
  }
  return 1 + split_strong(s, si + 1, t_l, ti + 1, t_r);
}

}  // namespace

std::pair<GapSeq, GapSeq> split_weak(const GapSeq& s, const GapSeq& t_l, const GapSeq& t_r) {
  require_same_bound(s, t_l);
  require_same_bound(s, t_r);
  if (!leq_w(s, concat(t_l, t_r)))
    throw NotDominated("split_weak: sequence does not embed into the concatenation");
  if (s.empty()) return {GapSeq({}, s.bound), GapSeq({}, s.bound)};

  // reduce to the strong split through the <0>-prefix
  Members s0;
  s0.push_back(OrdTerm{});
  s0.insert(s0.end(), s.members.begin(), s.members.end());
  Members tl0;
  tl0.push_back(OrdTerm{});
  tl0.insert(tl0.end(), t_l.members.begin(), t_l.members.end());

  std::size_t k = split_strong(s0, 0, tl0, 0, t_r.members);
  if (k == 0) {
    // everything goes right
    return {GapSeq({}, s.bound), s};
  }
  // the strong split begins with the prepended zero
  std::size_t left_len = k - 1;
  Members ml(s.members.begin(), s.members.begin() + left_len);
  Members mr(s.members.begin() + left_len, s.members.end());
  return {GapSeq(std::move(ml), s.bound), GapSeq(std::move(mr), s.bound)};
}

}  // namespace gapord
