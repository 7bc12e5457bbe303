#include "gapord/embed.hpp"

#include <algorithm>
#include <cassert>

namespace gapord {

// --- sequences into trees -------------------------------------------------------

LabTree<Unit> seq_to_tree(const GapSeq& s) {
  std::function<LabTree<Unit>(std::size_t, std::size_t)> build =
      [&](std::size_t lo, std::size_t hi) -> LabTree<Unit> {
    if (lo == hi) return mk_leaf(Unit{});
    std::size_t min_at = lo;
    for (std::size_t i = lo + 1; i < hi; ++i)
      if (ord_lt(s.members[i], s.members[min_at])) min_at = i;
    return mk_node(s.members[min_at], build(lo, min_at), build(min_at + 1, hi), true);
  };
  return build(0, s.size());
}

// --- Veblen terms into weak gap sequences -----------------------------------------

namespace {

GapSeq phi_to_gapseq_rec(const OrdTerm& x, const OrdTerm& alpha, const OrdTerm& bound) {
  if (x.is_zero()) return GapSeq({OrdTerm{}}, bound);
  if (is_indecomposable(x)) {
    const auto& p = x.runs()[0].principal;
    if (!ord_lt(p.first, alpha))
      throw IndexOutOfRange("phi_to_gapseq: Veblen index not below alpha");
    return shift_left_add(omega_pow(p.first), phi_to_gapseq_rec(p.second, alpha, bound));
  }
  OrdTerm lead = OrdTerm::from_runs_unchecked({OrdTerm::Run{x.runs()[0].principal, 1}});
  GapSeq left = phi_to_gapseq_rec(lead, alpha, bound);
  GapSeq right = phi_to_gapseq_rec(lsub(lead, x), alpha, bound);
  return concat(concat(left, GapSeq({OrdTerm{}}, bound)), right);
}

}  // namespace

GapSeq phi_to_gapseq(const OrdTerm& x, const OrdTerm& alpha) {
  OrdTerm bound = omega_pow(alpha);
  GapSeq out = phi_to_gapseq_rec(x, alpha, bound);
  assert(!out.empty());
  return out;
}

// --- weak vs strong ------------------------------------------------------------------

GapSeq weak_to_strong(const GapSeq& s) { return s; }

GapSeq strong_to_weak(const GapSeq& s) {
  GapSeq out;
  out.bound = add(s.bound, one());
  out.members.reserve(s.size() + 1);
  out.members.push_back(s.bound);  // the top element of the enlarged bound
  out.members.insert(out.members.end(), s.members.begin(), s.members.end());
  return out;
}

// --- the bullet order -------------------------------------------------------------------

BulletSeq::BulletSeq(std::vector<OrdTerm> m, OrdTerm a)
    : members(std::move(m)), alphabet(std::move(a)) {
  for (const OrdTerm& x : members)
    if (!ord_lt(x, alphabet)) throw BoundViolation("bullet member not below alphabet");
}

// Derivable relations: the empty sequence embeds anywhere; against <y>*t a
// sequence may match its head (weakly), skip y, or discard any prefix of
// members strictly below y before recursing into t.
bool bullet_leq(const BulletSeq& s, const BulletSeq& t) {
  if (!ord_eq(s.alphabet, t.alphabet))
    throw AlphabetMismatch("bullet sequences over different alphabets");
  const auto& sm = s.members;
  const auto& tm = t.members;
  const std::size_t n = sm.size(), m = tm.size();
  // table[i][j]: suffix from i embeds into suffix from j
  std::vector<std::vector<char>> table(n + 1, std::vector<char>(m + 1, 0));
  for (std::size_t j = 0; j <= m; ++j) table[n][j] = 1;
  for (std::size_t j = m; j-- > 0;) {
    for (std::size_t i = n; i-- > 0;) {
      bool res = ord_le(sm[i], tm[j]) && table[i + 1][j + 1];
      // discard a (possibly empty) prefix of members strictly below tm[j]
      for (std::size_t k = i; !res && k <= n; ++k) {
        if (table[k][j + 1]) res = true;
        if (k < n && !ord_lt(sm[k], tm[j])) break;  // prefix may not reach past here
      }
      table[i][j] = res;
    }
  }
  return table[0][0];
}

BulletSeq nat_to_bullet(std::uint64_t n) {
  BulletSeq out;
  out.alphabet = one();
  out.members.assign(n, OrdTerm{});
  return out;
}

BulletEmbed nat_to_bullet_embed() {
  BulletEmbed e;
  e.domain = omega();
  e.alphabet = one();
  e.apply = [](const OrdTerm& x) {
    if (!is_finite(x)) throw InputOutOfRange("nat_to_bullet: input not finite");
    return nat_to_bullet(to_finite(x));
  };
  return e;
}

BulletEmbed bullet_stage(const BulletEmbed& g, std::uint64_t n) {
  BulletEmbed out;
  out.domain = pow(g.domain, fin(n));
  out.alphabet = add(g.alphabet, one());
  OrdTerm beta = g.domain;
  OrdTerm sep = g.alphabet;  // top letter of the enlarged alphabet
  auto base = g.apply;
  OrdTerm out_alpha = out.alphabet;
  out.apply = [beta, sep, base, out_alpha, n](const OrdTerm& sigma) {
    BulletSeq res;
    res.alphabet = out_alpha;
    std::function<void(const OrdTerm&, std::uint64_t)> rec = [&](const OrdTerm& x,
                                                                 std::uint64_t stage) {
      if (stage == 0) {
        if (!x.is_zero()) throw InputOutOfRange("bullet_stage: input not below domain");
        return;
      }
      auto [q, d] = divide(x, beta);
      BulletSeq digit = base(d);
      res.members.insert(res.members.end(), digit.members.begin(), digit.members.end());
      res.members.push_back(sep);
      rec(q, stage - 1);
    };
    rec(sigma, n);
    return res;
  };
  return out;
}

GapSeq bullet_to_weak_apply(const BulletSeq& s, const SeqEmbed& f) {
  OrdTerm bound = add(one(), f.target_bound);
  GapSeq out({}, bound);
  for (const OrdTerm& a : s.members) {
    GapSeq img = f.apply(a);
    for (const OrdTerm& x : img.members) out.members.push_back(add(one(), x));
    out.members.push_back(OrdTerm{});
  }
  return out;
}

EmbedFn<BulletSeq, GapSeq> bullet_to_weak(const SeqEmbed& f) {
  EmbedFn<BulletSeq, GapSeq> out;
  out.name = "bullet-to-weak";
  SeqEmbed base = f;
  out.apply = [base](const BulletSeq& s) { return bullet_to_weak_apply(s, base); };
  out.source_leq = [](const BulletSeq& a, const BulletSeq& b) { return bullet_leq(a, b); };
  out.target_leq = [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); };
  return out;
}

// --- lower bounds for the strong order -------------------------------------------------

SeqEmbed strong_lower_base(const SeqEmbed& f, const OrdTerm& gamma, const OrdTerm& delta) {
  if (cmp_ord(f.domain, fin(2)) == Ordering3::LT)
    throw BaseTooSmall("strong_lower_base: domain must be at least 2");
  SeqEmbed out;
  OrdTerm alpha = f.domain;
  OrdTerm wg = omega_pow(gamma);
  OrdTerm bound = add(wg, delta);
  out.domain = pow(alpha, wg);
  out.target_bound = bound;
  auto base = f.apply;
  out.apply = [alpha, wg, bound, base](const OrdTerm& sigma) {
    GapSeq res({}, bound);
    OrdTerm rest = sigma;
    while (!rest.is_zero()) {
      BaseDigit d = base_decompose(rest, alpha);
      if (!ord_lt(d.exponent, wg))
        throw InputOutOfRange("strong_lower_base: input not below alpha^(w^gamma)");
      GapSeq block = shift_left_add(d.exponent, cons(OrdTerm{}, base(d.coefficient)));
      res = concat(res, GapSeq(block.members, bound));
      rest = d.remainder;
    }
    assert(res.empty() || ord_lt(res.members.front(), wg));
    return res;
  };
  return out;
}

SeqEmbed strong_lower_combine(const SeqEmbed& f_base, const OrdTerm& alpha,
                              const SeqEmbed& g, const OrdTerm& gamma) {
  SeqEmbed out;
  OrdTerm wg = omega_pow(gamma);
  OrdTerm bound = f_base.target_bound;
  out.domain = mul(alpha, g.domain);
  out.target_bound = bound;
  auto fb = f_base.apply;
  auto gb = g.apply;
  out.apply = [alpha, wg, bound, fb, gb](const OrdTerm& sigma) {
    auto [q, r] = divide(sigma, alpha);
    GapSeq right = fb(r);
    if (!right.empty() && !ord_lt(right.members.front(), wg))
      throw RangePropertyViolated("strong_lower_combine: base image must start below w^gamma");
    GapSeq left = shift_left_add(wg, gb(q));
    GapSeq res({}, bound);
    res.members = left.members;
    res.members.insert(res.members.end(), right.members.begin(), right.members.end());
    return GapSeq(res.members, bound);
  };
  return out;
}

// --- Veblen lower bounds ------------------------------------------------------------------

GapSeq veblen_lower_seq(const OrdTerm& sigma, const OrdTerm& alpha, const OrdTerm& beta,
                        const OrdTerm& rho, const std::function<GapSeq(const OrdTerm&)>& f) {
  OrdTerm bound = add(omega_pow(alpha), rho);
  if (sigma.is_zero()) return GapSeq({OrdTerm{}}, bound);
  if (!is_indecomposable(sigma)) {
    OrdTerm lead = OrdTerm::from_runs_unchecked({OrdTerm::Run{sigma.runs()[0].principal, 1}});
    OrdTerm rest = lsub(lead, sigma);
    GapSeq l = veblen_lower_seq(lead, alpha, beta, rho, f);
    GapSeq r = veblen_lower_seq(rest, alpha, beta, rho, f);
    GapSeq out({}, bound);
    out.members = l.members;
    out.members.push_back(OrdTerm{});
    out.members.insert(out.members.end(), r.members.begin(), r.members.end());
    return out;
  }
  const auto& p = sigma.runs()[0].principal;
  switch (cmp_ord(p.first, alpha)) {
    case Ordering3::LT: {
      GapSeq inner = veblen_lower_seq(p.second, alpha, beta, rho, f);
      GapSeq out = shift_left_add(omega_pow(p.first), inner);
      return GapSeq(out.members, bound);
    }
    case Ordering3::EQ: {
      if (!ord_lt(p.second, beta))
        throw InputOutOfRange("veblen_lower_seq: argument at top index not below beta");
      GapSeq img = f(p.second);
      if (img.empty())
        throw ExcludedValueInRange("veblen_lower_seq: base map produced the empty sequence");
      GapSeq out = shift_left_add(omega_pow(alpha), img);
      return GapSeq(out.members, bound);
    }
    case Ordering3::GT:
      throw IndexOutOfRange("veblen_lower_seq: Veblen index above alpha");
  }
  throw IndexOutOfRange("unreachable");
}

LabTree<Unit> veblen_lower_tree(const OrdTerm& sigma, const OrdTerm& alpha,
                                const OrdTerm& beta,
                                const std::function<LabTree<Unit>(const OrdTerm&)>& f) {
  if (sigma.is_zero()) return mk_node(OrdTerm{}, mk_leaf(Unit{}), mk_leaf(Unit{}));
  const auto& head = sigma.runs()[0].principal;
  OrdTerm lead = OrdTerm::from_runs_unchecked({OrdTerm::Run{head, 1}});
  OrdTerm rest = lsub(lead, sigma);
  if (!rest.is_zero() || head.first.is_zero()) {
    // sigma = w^gamma + rest with the head written as an omega power
    OrdTerm gamma = cnf_exponent(head);
    return mk_node(OrdTerm{}, veblen_lower_tree(gamma, alpha, beta, f),
                   veblen_lower_tree(rest, alpha, beta, f));
  }
  // single principal with positive index 1 + gamma
  OrdTerm gamma = lsub(one(), head.first);
  switch (cmp_ord(gamma, alpha)) {
    case Ordering3::LT:
      return shift_tree_add(omega_pow(gamma), veblen_lower_tree(head.second, alpha, beta, f));
    case Ordering3::EQ: {
      if (!ord_lt(head.second, beta))
        throw InputOutOfRange("veblen_lower_tree: argument at top index not below beta");
      LabTree<Unit> img = f(head.second);
      if (img.is_leaf())
        throw ExcludedValueInRange("veblen_lower_tree: base map produced a bare leaf");
      return shift_tree_add(omega_pow(alpha), img);
    }
    case Ordering3::GT:
      throw IndexOutOfRange("veblen_lower_tree: Veblen index above 1 + alpha");
  }
  throw IndexOutOfRange("unreachable");
}

// --- label splitting ------------------------------------------------------------------------

LabTree<LabTree<Unit>> tree_label_split(const LabTree<Unit>& t, const OrdTerm& alpha) {
  if (alpha.is_zero()) throw ZeroBound("tree_label_split: bound must be positive");
  OrdTerm gamma = cnf_head(alpha).first;
  return cut_below(t, omega_pow(gamma));
}

// --- strong gap decompositions -----------------------------------------------------------------

StrongSplitFin strong_decompose_fin(const GapSeq& s) {
  if (!is_finite(s.bound) || s.bound.is_zero())
    throw PreconditionViolated("strong_decompose_fin: bound must be a positive natural");
  std::size_t cut = 0;
  while (cut < s.size() && !s.members[cut].is_zero()) ++cut;
  StrongSplitFin out;
  GapSeq low(std::vector<OrdTerm>(s.members.begin(), s.members.begin() + cut), s.bound);
  low = shift_left_sub(one(), low);
  low.bound = lsub(one(), s.bound);
  out.low = GapSeq(low.members, low.bound);
  out.rest = GapSeq(std::vector<OrdTerm>(s.members.begin() + cut, s.members.end()), s.bound);
  return out;
}

namespace {

// Four-case tail encoding over the alphabet S^w_alpha (+) (-1 + gamma); the
// input is empty or begins strictly below w^gamma.
std::vector<SplitTag> split_tail_encode(GapSeq s, const OrdTerm& wgamma) {
  std::vector<SplitTag> out;
  while (!s.empty()) {
    std::size_t zero_at = s.size();
    std::size_t min_at = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.members[i].is_zero() && zero_at == s.size()) zero_at = i;
      if (ord_lt(s.members[i], s.members[min_at])) min_at = i;
    }
    if (zero_at < s.size()) {
      // split before the first zero; the prefix has only positive members
      SplitTag tag;
      tag.is_seq = true;
      tag.seq = GapSeq(std::vector<OrdTerm>(s.members.begin() + zero_at, s.members.end()),
                       s.bound);
      out.push_back(std::move(tag));
      std::vector<OrdTerm> prefix(s.members.begin(), s.members.begin() + zero_at);
      for (OrdTerm& x : prefix) x = lsub(one(), x);
      s = GapSeq(std::move(prefix), s.bound);
      continue;
    }
    const OrdTerm& min = s.members[min_at];
    if (is_finite(min)) {
      SplitTag tag;
      tag.is_seq = true;
      tag.seq = GapSeq({}, s.bound);
      out.push_back(std::move(tag));
      for (OrdTerm& x : s.members) x = lsub(one(), x);
      continue;
    }
    OrdTerm rho0 = cnf_head(min).first;
    SplitTag tag;
    tag.is_seq = false;
    tag.ord = lsub(one(), rho0);
    out.push_back(std::move(tag));
    OrdTerm shift = omega_pow(rho0);
    for (OrdTerm& x : s.members) x = lsub(shift, x);
    (void)wgamma;
  }
  return out;
}

}  // namespace

StrongSplitInf strong_decompose_inf(const GapSeq& s) {
  auto [gamma, delta] = [&] {
    if (s.bound.is_zero() || is_finite(s.bound))
      throw NotInfiniteBound("strong_decompose_inf: bound must be infinite");
    return cnf_head(s.bound);
  }();
  OrdTerm wgamma = omega_pow(gamma);
  std::size_t cut = 0;
  while (cut < s.size() && !ord_lt(s.members[cut], wgamma)) ++cut;
  StrongSplitInf out;
  std::vector<OrdTerm> high(s.members.begin(), s.members.begin() + cut);
  for (OrdTerm& x : high) x = lsub(wgamma, x);
  out.high = GapSeq(std::move(high), delta);
  out.tail = split_tail_encode(
      GapSeq(std::vector<OrdTerm>(s.members.begin() + cut, s.members.end()), s.bound), wgamma);
  return out;
}

bool split_tag_leq(const SplitTag& a, const SplitTag& b) {
  if (a.is_seq != b.is_seq) return false;
  if (a.is_seq) return leq_w(a.seq, b.seq);
  return ord_le(a.ord, b.ord);
}

}  // namespace gapord
