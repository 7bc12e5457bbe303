#include "gapord/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "gapord/literal.hpp"
#include "gapord/motype.hpp"
#include "gapord/reify.hpp"

namespace gapord {

std::string CheckReport::to_string() const {
  std::ostringstream os;
  os << "suite " << suite << ": cases=" << cases << " failures=" << failures_total << "\n";
  for (const auto& f : failures) os << "FAIL " << suite << " " << f << "\n";
  return os.str();
}

// --- enumeration ------------------------------------------------------------------

std::vector<GapSeq> enum_seqs(std::uint64_t alphabet, std::uint64_t max_len) {
  std::vector<GapSeq> out;
  OrdTerm bound = fin(alphabet);
  out.emplace_back(std::vector<OrdTerm>{}, bound);
  if (alphabet == 0) return out;
  std::vector<std::uint64_t> digits;
  for (std::uint64_t len = 1; len <= max_len; ++len) {
    digits.assign(len, 0);
    for (;;) {
      std::vector<OrdTerm> members;
      members.reserve(len);
      for (std::uint64_t d : digits) members.push_back(fin(d));
      out.emplace_back(std::move(members), bound);
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == alphabet) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

namespace {

void enum_trees_rec(std::uint64_t alphabet, std::uint64_t nodes, std::uint64_t min_label,
                    bool left_strict, std::vector<LabTree<Unit>>& out) {
  if (nodes == 1) {
    out.push_back(mk_leaf(Unit{}));
    return;
  }
  if (nodes % 2 == 0) return;  // full binary trees have odd node counts
  for (std::uint64_t b = min_label; b < alphabet; ++b) {
    for (std::uint64_t ln = 1; ln + 1 < nodes; ln += 2) {
      std::uint64_t rn = nodes - 1 - ln;
      std::vector<LabTree<Unit>> ls, rs;
      enum_trees_rec(alphabet, ln, left_strict ? b + 1 : b, left_strict, ls);
      enum_trees_rec(alphabet, rn, b, left_strict, rs);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(mk_node(fin(b), l, r, left_strict));
    }
  }
}

}  // namespace

std::vector<LabTree<Unit>> enum_trees(std::uint64_t alphabet, std::uint64_t max_nodes,
                                      bool left_strict) {
  std::vector<LabTree<Unit>> out;
  for (std::uint64_t n = 1; n <= max_nodes; ++n)
    enum_trees_rec(alphabet, n, 0, left_strict, out);
  return out;
}

std::vector<OrdTerm> enum_ords(std::uint64_t max_size) {
  using Principal = OrdTerm::Principal;
  using Run = OrdTerm::Run;
  // terms_exact[s] = all normal terms of syntactic size exactly s
  std::vector<std::vector<OrdTerm>> terms_exact(max_size + 1);
  std::vector<std::pair<Principal, std::uint64_t>> prins;  // with their sizes
  terms_exact[0].push_back(OrdTerm{});
  for (std::uint64_t k = 1; k <= max_size; ++k) {
    // principals of size exactly k
    std::vector<Principal> fresh;
    for (std::uint64_t sg = 0; sg + 1 <= k; ++sg) {
      std::uint64_t sd = k - 1 - sg;
      for (const OrdTerm& g : terms_exact[sg]) {
        for (const OrdTerm& d : terms_exact[sd]) {
          // reject arguments that are fixed points of level g
          if (d.runs().size() == 1 && d.runs()[0].count == 1 &&
              cmp_ord(d.runs()[0].principal.first, g) == Ordering3::GT)
            continue;
          fresh.push_back(Principal{g, d});
        }
      }
    }
    for (const auto& p : fresh) prins.emplace_back(p, k);
    // terms of size exactly k: descending run lists over all principals so far
    std::sort(prins.begin(), prins.end(), [](const auto& a, const auto& b) {
      return cmp_principal(a.first, b.first) == Ordering3::GT;
    });
    std::vector<Run> acc;
    std::function<void(std::size_t, std::uint64_t)> build = [&](std::size_t from,
                                                                std::uint64_t budget) {
      if (budget == 0) {
        if (!acc.empty()) terms_exact[k].push_back(OrdTerm::from_runs_unchecked(acc));
        return;
      }
      for (std::size_t i = from; i < prins.size(); ++i) {
        std::uint64_t sz = prins[i].second;
        for (std::uint64_t c = 1; c * sz <= budget; ++c) {
          acc.push_back(Run{prins[i].first, c});
          build(i + 1, budget - c * sz);
          acc.pop_back();
        }
      }
    };
    build(0, k);
  }
  std::vector<OrdTerm> out;
  for (auto& bucket : terms_exact)
    for (auto& t : bucket) out.push_back(std::move(t));
  return out;
}

// --- random generation ------------------------------------------------------------

OrdTerm random_ord(Rng& rng, std::uint64_t max_size) {
  if (max_size == 0 || rng.chance(1, 8)) return OrdTerm{};
  std::uint64_t parts = 1 + rng.below(2);
  OrdTerm acc;
  for (std::uint64_t i = 0; i < parts; ++i) {
    std::uint64_t sub = max_size > 1 ? (max_size - 1) / 2 : 0;
    OrdTerm g = random_ord(rng, rng.below(sub + 1));
    OrdTerm d = random_ord(rng, rng.below(sub + 1));
    OrdTerm p = mk_phi(g, d);
    acc = hessenberg(acc, mul(p, fin(1 + rng.below(3))));
  }
  return acc;
}

LabTree<Unit> random_tree(Rng& rng, std::uint64_t alphabet, std::uint64_t max_nodes) {
  std::function<LabTree<Unit>(std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t min_label, std::uint64_t budget) -> LabTree<Unit> {
    if (budget < 3 || min_label >= alphabet || rng.chance(1, 3)) return mk_leaf(Unit{});
    std::uint64_t b = min_label + rng.below(alphabet - min_label);
    std::uint64_t rest = budget - 1;
    std::uint64_t lb = 1 + rng.below(rest > 1 ? rest - 1 : 1);
    return mk_node(fin(b), rec(b, lb), rec(b, rest - lb));
  };
  return rec(0, max_nodes);
}

GapSeq random_seq(Rng& rng, std::uint64_t alphabet, std::uint64_t max_len) {
  std::uint64_t len = rng.below(max_len + 1);
  std::vector<OrdTerm> m;
  m.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) m.push_back(fin(rng.below(alphabet)));
  return GapSeq(std::move(m), fin(alphabet));
}

// --- suite framework -----------------------------------------------------------------

namespace {

struct Ctx {
  const DomainSpec& spec;
  CheckReport report;

  explicit Ctx(const DomainSpec& s, std::string name) : spec(s) { report.suite = std::move(name); }

  void check(bool ok, const std::function<std::string()>& literal) {
    ++report.cases;
    if (!ok) {
      ++report.failures_total;
      if (report.failures.size() < 50) report.failures.push_back(literal());
    }
  }
  std::uint64_t samples(std::uint64_t fallback) const {
    return spec.count ? spec.count : fallback;
  }
};

using SuiteFn = CheckReport (*)(const DomainSpec&);

bool seq_equal(const GapSeq& a, const GapSeq& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ord_eq(a.members[i], b.members[i])) return false;
  return true;
}

bool tree_equal(const LabTree<Unit>& a, const LabTree<Unit>& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return true;
  return ord_eq(a.inner_label(), b.inner_label()) && tree_equal(a.left(), b.left()) &&
         tree_equal(a.right(), b.right());
}

std::string lit_seq(const GapSeq& s) { return print_ord_list(s.members); }

std::string lit_pair(const GapSeq& a, const GapSeq& b) {
  return lit_seq(a) + " vs " + lit_seq(b);
}

// Greedy member deletion on both sides, keeping the failure alive; produces
// the literal reported for sequence-pair counterexamples.
std::string minimized_pair_literal(GapSeq s, GapSeq t,
                                   const std::function<bool(const GapSeq&, const GapSeq&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < s.size() && !progress; ++i) {
      GapSeq cand = s;
      cand.members.erase(cand.members.begin() + i);
      if (fails(cand, t)) {
        s = std::move(cand);
        progress = true;
      }
    }
    for (std::size_t i = 0; i < t.size() && !progress; ++i) {
      GapSeq cand = t;
      cand.members.erase(cand.members.begin() + i);
      if (fails(s, cand)) {
        t = std::move(cand);
        progress = true;
      }
    }
  }
  return lit_pair(s, t);
}

// --- ordinal suites ----------------------------------------------------------------------

CheckReport suite_ord_total_order(const DomainSpec& spec) {
  Ctx ctx(spec, "ord-total-order");
  std::vector<OrdTerm> pool = enum_ords(std::min<std::uint64_t>(spec.max_size, 6));
  // trichotomy and antisymmetry of the comparison, exhaustively
  for (const OrdTerm& a : pool) {
    for (const OrdTerm& b : pool) {
      Ordering3 ab = cmp_ord(a, b);
      Ordering3 ba = cmp_ord(b, a);
      bool consistent = (ab == Ordering3::EQ && ba == Ordering3::EQ) ||
                        (ab == Ordering3::LT && ba == Ordering3::GT) ||
                        (ab == Ordering3::GT && ba == Ordering3::LT);
      ctx.check(consistent, [&] { return print_ord(a) + " vs " + print_ord(b); });
    }
  }
  for (const OrdTerm& a : pool)
    ctx.check(cmp_ord(a, a) == Ordering3::EQ, [&] { return print_ord(a); });
  // transitivity on sampled triples
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(100000);
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm a = random_ord(rng, spec.max_size);
    OrdTerm b = random_ord(rng, spec.max_size);
    OrdTerm c = random_ord(rng, spec.max_size);
    bool ok = !(ord_le(a, b) && ord_le(b, c)) || ord_le(a, c);
    ctx.check(ok, [&] {
      return print_ord(a) + " <= " + print_ord(b) + " <= " + print_ord(c);
    });
  }
  return ctx.report;
}

CheckReport suite_ord_add(const DomainSpec& spec) {
  Ctx ctx(spec, "ord-add");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(100000);
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm a = random_ord(rng, spec.max_size);
    OrdTerm b = random_ord(rng, spec.max_size);
    OrdTerm c = random_ord(rng, spec.max_size);
    ctx.check(add(add(a, b), c) == add(a, add(b, c)),
              [&] { return "assoc " + print_ord(a) + "," + print_ord(b) + "," + print_ord(c); });
    ctx.check(add(a, OrdTerm{}) == a && add(OrdTerm{}, a) == a,
              [&] { return "identity " + print_ord(a); });
    if (ord_lt(a, b))
      ctx.check(ord_lt(add(c, a), add(c, b)), [&] {
        return "monotone " + print_ord(c) + " + " + print_ord(a) + " / " + print_ord(b);
      });
  }
  return ctx.report;
}

CheckReport suite_ord_lsub(const DomainSpec& spec) {
  Ctx ctx(spec, "ord-lsub");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(100000);
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm beta = random_ord(rng, spec.max_size);
    OrdTerm lambda = random_ord(rng, spec.max_size);
    OrdTerm rho = random_ord(rng, spec.max_size);
    // defining identity
    if (ord_le(beta, lambda))
      ctx.check(add(beta, lsub(beta, lambda)) == lambda, [&] {
        return "roundtrip " + print_ord(beta) + " / " + print_ord(lambda);
      });
    else
      ctx.check(lsub(beta, lambda).is_zero(),
                [&] { return "clamp " + print_ord(beta) + " / " + print_ord(lambda); });
    // a) comparing after removing a common left part
    if (ord_le(beta, lambda) && ord_le(beta, rho) &&
        ord_le(lsub(beta, lambda), lsub(beta, rho)))
      ctx.check(ord_le(lambda, rho), [&] {
        return "a) " + print_ord(beta) + "," + print_ord(lambda) + "," + print_ord(rho);
      });
    // b) cancelling a common left summand
    if (ord_le(add(beta, lambda), add(beta, rho)))
      ctx.check(ord_le(lambda, rho), [&] {
        return "b) " + print_ord(beta) + "," + print_ord(lambda) + "," + print_ord(rho);
      });
    // c) an omega power on the left absorbs smaller prefixes
    OrdTerm wb = omega_pow(beta);
    OrdTerm gamma = random_ord(rng, spec.max_size);
    if (ord_lt(gamma, wb) && ord_le(add(wb, lambda), add(gamma, rho)))
      ctx.check(ord_le(add(wb, lambda), rho), [&] {
        return "c) " + print_ord(beta) + "," + print_ord(gamma) + "," + print_ord(lambda) +
               "," + print_ord(rho);
      });
  }
  return ctx.report;
}

CheckReport suite_ord_hessenberg(const DomainSpec& spec) {
  Ctx ctx(spec, "ord-hessenberg");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(100000);
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm x = random_ord(rng, spec.max_size);
    OrdTerm y = random_ord(rng, spec.max_size);
    OrdTerm z = random_ord(rng, spec.max_size);
    ctx.check(hessenberg(x, y) == hessenberg(y, x),
              [&] { return "comm " + print_ord(x) + "," + print_ord(y); });
    ctx.check(hessenberg(hessenberg(x, y), z) == hessenberg(x, hessenberg(y, z)),
              [&] { return "assoc " + print_ord(x) + "," + print_ord(y) + "," + print_ord(z); });
    if (ord_lt(x, z))
      ctx.check(ord_lt(hessenberg(x, y), hessenberg(z, y)), [&] {
        return "monotone " + print_ord(x) + "," + print_ord(y) + "," + print_ord(z);
      });
    if (is_indecomposable(z) && ord_lt(x, z) && ord_lt(y, z))
      ctx.check(ord_lt(hessenberg(x, y), z), [&] {
        return "indecomposable " + print_ord(x) + "," + print_ord(y) + "," + print_ord(z);
      });
  }
  return ctx.report;
}

CheckReport suite_ord_psi(const DomainSpec& spec) {
  Ctx ctx(spec, "ord-psi");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(50000);
  auto positive = [&](std::uint64_t cap) {
    OrdTerm x = random_ord(rng, cap);
    return x.is_zero() ? one() : x;
  };
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm a = positive(3);
    OrdTerm b = positive(spec.max_size);
    OrdTerm c = positive(3);
    OrdTerm d = positive(spec.max_size);
    OrdTerm pab = psi(a, b);
    OrdTerm pcd = psi(c, d);
    // a) three-way monotonicity, mirroring the comparison rule for Veblen
    // values: smaller index needs the whole right value above b, larger index
    // needs the whole left value below d
    bool expect_lt = false;
    switch (cmp_ord(a, c)) {
      case Ordering3::EQ: expect_lt = ord_lt(b, d); break;
      case Ordering3::LT: expect_lt = ord_lt(b, pcd); break;
      case Ordering3::GT: expect_lt = ord_lt(pab, d); break;
    }
    if (expect_lt)
      ctx.check(ord_lt(pab, pcd), [&] {
        return "mono psi(" + print_ord(a) + "," + print_ord(b) + ") psi(" + print_ord(c) +
               "," + print_ord(d) + ")";
      });
    // b) positivity, d) e) argument bounds
    ctx.check(!pab.is_zero(), [&] { return "positive " + print_ord(a) + "," + print_ord(b); });
    ctx.check(ord_lt(a, pab), [&] { return "a < psi " + print_ord(a) + "," + print_ord(b); });
    ctx.check(ord_lt(b, pab), [&] { return "b < psi " + print_ord(a) + "," + print_ord(b); });
    // c) closure under sums, products and exponentials
    OrdTerm s = random_ord(rng, 4);
    OrdTerm t = random_ord(rng, 4);
    if (ord_lt(s, pab) && ord_lt(t, pab)) {
      bool closed = ord_lt(add(s, t), pab) && ord_lt(mul(s, t), pab);
      try {
        closed = closed && ord_lt(pow(s, t), pab);
      } catch (const FiniteOverflow&) {
        // enormous finite towers are outside the sampled regime
      }
      ctx.check(closed, [&] {
        return "closure psi(" + print_ord(a) + "," + print_ord(b) + ") " + print_ord(s) +
               "," + print_ord(t);
      });
    }
  }
  return ctx.report;
}

CheckReport suite_ord_cnf(const DomainSpec& spec) {
  Ctx ctx(spec, "ord-cnf");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(50000);
  std::vector<OrdTerm> bases = {fin(2), fin(3), omega(), add(omega(), one()),
                                omega_pow(fin(2)), mk_phi(one(), OrdTerm{})};
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm a = random_ord(rng, spec.max_size);
    if (!a.is_zero()) {
      auto [gamma, delta] = cnf_head(a);
      ctx.check(add(omega_pow(gamma), delta) == a,
                [&] { return "cnf_head " + print_ord(a); });
      ctx.check(ord_lt(delta, omega_pow(add(gamma, one()))),
                [&] { return "cnf_head tail " + print_ord(a); });
      const OrdTerm& base = bases[rng.below(bases.size())];
      BaseDigit d = base_decompose(a, base);
      OrdTerm p = pow(base, d.exponent);
      ctx.check(add(mul(p, d.coefficient), d.remainder) == a &&
                    !d.coefficient.is_zero() && ord_lt(d.coefficient, base) &&
                    ord_lt(d.remainder, p),
                [&] { return "base " + print_ord(base) + " of " + print_ord(a); });
    } else {
      ++ctx.report.cases;
    }
  }
  return ctx.report;
}

// --- sequence suites ----------------------------------------------------------------------

CheckReport suite_seq_equivalence(const DomainSpec& spec) {
  Ctx ctx(spec, "seq-equivalence");
  std::vector<GapSeq> pool = enum_seqs(spec.alphabet, spec.max_len);
  auto disagree = [](const GapSeq& s, const GapSeq& t) {
    bool w = leq_w(s, t);
    return oracle_leq(s, t, GapVariant::Weak) != w ||
           oracle_leq(s, t, GapVariant::Gordeev) != w ||
           oracle_leq(s, t, GapVariant::StrongRealizer) != leq_r(s, t);
  };
  for (const GapSeq& s : pool) {
    for (const GapSeq& t : pool) {
      bool ow = oracle_leq(s, t, GapVariant::Weak);
      bool og = oracle_leq(s, t, GapVariant::Gordeev);
      bool os = oracle_leq(s, t, GapVariant::StrongRealizer);
      bool orr = oracle_leq(s, t, GapVariant::StrongRecursive);
      bool w = leq_w(s, t);
      bool g = leq_g(s, t);
      bool r = leq_r(s, t);
      bool st = leq_s(s, t);
      bool zs = oracle_leq(cons(OrdTerm{}, s), cons(OrdTerm{}, t), GapVariant::StrongRealizer);
      bool ok = (ow == og) && (ow == w) && (g == w) && (os == orr) && (os == r) &&
                (st == r) && (zs == w);
      // prefixing comparable heads below every member of t preserves the
      // weak/strong correspondence
      for (std::uint64_t bv = 0; ok && bv < spec.alphabet; ++bv) {
        bool b_small = true;
        for (const OrdTerm& m : t.members)
          if (ord_lt(m, fin(bv))) b_small = false;
        if (!b_small) continue;
        for (std::uint64_t gv = bv; ok && gv < spec.alphabet; ++gv) {
          bool lhs = leq_s(cons(fin(bv), s), cons(fin(gv), t));
          if (lhs != w) ok = false;
        }
      }
      ctx.check(ok, [&] { return minimized_pair_literal(s, t, disagree); });
    }
  }
  return ctx.report;
}

CheckReport suite_seq_order_axioms(const DomainSpec& spec) {
  Ctx ctx(spec, "seq-order-axioms");
  std::vector<GapSeq> pool = enum_seqs(spec.alphabet, spec.max_len);
  for (const GapSeq& s : pool) {
    ctx.check(leq_w(s, s) && leq_r(s, s), [&] { return "refl " + lit_seq(s); });
  }
  for (const GapSeq& s : pool)
    for (const GapSeq& t : pool) {
      if (leq_w(s, t) && leq_w(t, s))
        ctx.check(seq_equal(s, t), [&] { return "antisym-w " + lit_pair(s, t); });
      if (leq_r(s, t) && leq_r(t, s))
        ctx.check(seq_equal(s, t), [&] { return "antisym-r " + lit_pair(s, t); });
    }
  // transitivity, exhaustively on a reduced cube plus samples
  std::vector<GapSeq> small = enum_seqs(std::min<std::uint64_t>(spec.alphabet, 2),
                                        std::min<std::uint64_t>(spec.max_len, 3));
  for (const GapSeq& s : small)
    for (const GapSeq& t : small)
      for (const GapSeq& u : small) {
        if (leq_w(s, t) && leq_w(t, u))
          ctx.check(leq_w(s, u), [&] { return "trans-w " + lit_pair(s, u); });
        if (leq_r(s, t) && leq_r(t, u))
          ctx.check(leq_r(s, u), [&] { return "trans-r " + lit_pair(s, u); });
      }
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(20000);
  for (std::uint64_t i = 0; i < n; ++i) {
    GapSeq s = random_seq(rng, spec.alphabet, spec.max_len + 1);
    GapSeq t = random_seq(rng, spec.alphabet, spec.max_len + 1);
    GapSeq u = random_seq(rng, spec.alphabet, spec.max_len + 1);
    if (leq_w(s, t) && leq_w(t, u))
      ctx.check(leq_w(s, u), [&] { return "trans-w " + lit_pair(s, u); });
    if (leq_r(s, t) && leq_r(t, u))
      ctx.check(leq_r(s, u), [&] { return "trans-r " + lit_pair(s, u); });
  }
  return ctx.report;
}

CheckReport suite_seq_cancellation(const DomainSpec& spec) {
  Ctx ctx(spec, "seq-cancellation");
  OrdTerm bound = fin(spec.alphabet);

  auto head_below_all = [](const GapSeq& sr, const GapSeq& tl) {
    if (sr.empty()) return true;
    for (const OrdTerm& m : tl.members)
      if (ord_lt(m, sr.members.front())) return false;
    return true;
  };
  auto head_strictly_below_all = [](const GapSeq& t, const GapSeq& u) {
    if (t.empty()) return true;
    for (const OrdTerm& m : u.members)
      if (!ord_lt(t.members.front(), m)) return false;
    return true;
  };

  auto run_laws = [&](const GapSeq& a, const GapSeq& b, const GapSeq& c, const GapSeq& d) {
    // concatenation: a <= b (weak or strong) and c <=s d compose when c is
    // empty or begins below everything in b
    if (head_below_all(c, b)) {
      if (leq_w(a, b) && leq_s(c, d))
        ctx.check(leq_w(concat(a, c), concat(b, d)),
                  [&] { return "concat-w " + lit_pair(concat(a, c), concat(b, d)); });
      if (leq_s(a, b) && leq_s(c, d))
        ctx.check(leq_s(concat(a, c), concat(b, d)),
                  [&] { return "concat-s " + lit_pair(concat(a, c), concat(b, d)); });
    }
    // common prefix: c <=s d gives a*c <=s a*d
    if (leq_s(c, d))
      ctx.check(leq_s(concat(a, c), concat(a, d)),
                [&] { return "prefix " + lit_pair(concat(a, c), concat(a, d)); });
    // strong head removal: a*b <=s a*c and c empty-or-starting strictly below
    // everything in a
    if (head_strictly_below_all(c, a) && leq_s(concat(a, b), concat(a, c)))
      ctx.check(leq_s(b, c), [&] { return "head-s " + lit_pair(b, c); });
    // weak head removal, unconditional
    if (leq_w(concat(a, b), concat(a, c)))
      ctx.check(leq_w(b, c), [&] { return "head-w " + lit_pair(b, c); });
    // tail removal: a*b <=s c*d with d empty-or-starting strictly below
    // everything in a
    if (head_strictly_below_all(d, a) && leq_s(concat(a, b), concat(c, d)))
      ctx.check(leq_s(a, c), [&] { return "tail " + lit_pair(a, c); });
    // padding for the weak order
    if (leq_w(a, b))
      ctx.check(leq_w(a, concat(concat(c, b), d)),
                [&] { return "pad " + lit_pair(a, concat(concat(c, b), d)); });
  };

  std::vector<GapSeq> small = enum_seqs(spec.alphabet, 2);
  for (const GapSeq& a : small)
    for (const GapSeq& b : small)
      for (const GapSeq& c : small)
        for (const GapSeq& d : small) run_laws(a, b, c, d);

  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(100000);
  for (std::uint64_t i = 0; i < n; ++i) {
    GapSeq a = random_seq(rng, spec.alphabet + 1, spec.max_len);
    GapSeq b = random_seq(rng, spec.alphabet + 1, spec.max_len);
    GapSeq c = random_seq(rng, spec.alphabet + 1, spec.max_len);
    GapSeq d = random_seq(rng, spec.alphabet + 1, spec.max_len);
    run_laws(a, b, c, d);
  }

  // splitting lemma, exhaustively over every cut of t
  std::vector<GapSeq> pool = enum_seqs(spec.alphabet, spec.max_len);
  for (const GapSeq& s : pool) {
    for (const GapSeq& t : pool) {
      for (std::size_t cut = 0; cut <= t.size(); ++cut) {
        GapSeq tl(std::vector<OrdTerm>(t.members.begin(), t.members.begin() + cut), bound);
        GapSeq tr(std::vector<OrdTerm>(t.members.begin() + cut, t.members.end()), bound);
        if (!leq_w(s, t)) continue;
        auto [sl, sr] = split_weak(s, tl, tr);
        bool ok = seq_equal(concat(sl, sr), s) && leq_w(sl, tl) && leq_w(sr, tr) &&
                  (sl.empty() || leq_s(sr, tr));
        ctx.check(ok, [&] { return "split " + lit_seq(s) + " @ " + lit_pair(tl, tr); });
      }
    }
  }

  // pinned regression: padding fails for the strong order
  GapSeq one_seq({one()}, fin(2));
  GapSeq zero_one({OrdTerm{}, one()}, fin(2));
  ctx.check(leq_s(one_seq, one_seq) && !leq_s(one_seq, zero_one),
            [&] { return "pinned [1] vs [0,1]"; });
  return ctx.report;
}

// --- tree suites -------------------------------------------------------------------------------

CheckReport suite_tree_order_axioms(const DomainSpec& spec) {
  Ctx ctx(spec, "tree-order-axioms");
  std::vector<LabTree<Unit>> pool =
      enum_trees(std::min<std::uint64_t>(spec.alphabet, 2), std::min<std::uint64_t>(spec.max_nodes, 5), false);
  for (const auto& t : pool) ctx.check(leq_tree(t, t), [&] { return "refl " + print_tree(t); });
  for (const auto& s : pool)
    for (const auto& t : pool)
      if (leq_tree(s, t) && leq_tree(t, s))
        ctx.check(tree_equal(s, t),
                  [&] { return "antisym " + print_tree(s) + " vs " + print_tree(t); });
  for (const auto& s : pool)
    for (const auto& t : pool) {
      if (!leq_tree(s, t)) continue;
      for (const auto& u : pool)
        if (leq_tree(t, u))
          ctx.check(leq_tree(s, u),
                    [&] { return "trans " + print_tree(s) + " vs " + print_tree(u); });
    }
  // left-strict trees stay left-strict under subtrees
  std::vector<LabTree<Unit>> strict = enum_trees(spec.alphabet, spec.max_nodes, true);
  for (const auto& t : strict) {
    if (t.is_leaf()) {
      ++ctx.report.cases;
      continue;
    }
    ctx.check(is_left_strict(t.left()) && is_left_strict(t.right()) && is_ascending(t),
              [&] { return "subtree " + print_tree(t); });
  }
  return ctx.report;
}

// --- bullet suite --------------------------------------------------------------------------------

CheckReport suite_bullet_order(const DomainSpec& spec) {
  Ctx ctx(spec, "bullet-order");
  std::uint64_t alphabet = std::min<std::uint64_t>(spec.alphabet, 3);
  std::uint64_t max_len = std::max<std::uint64_t>(spec.max_len, 5);
  OrdTerm ab = fin(alphabet);
  // pool of all bullet sequences over the alphabet
  std::vector<BulletSeq> pool;
  for (const GapSeq& s : enum_seqs(alphabet, max_len)) pool.push_back(BulletSeq(s.members, ab));
  const std::size_t n = pool.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = bullet_leq(pool[i], pool[j]);
  // transitivity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (le[j][k])
          ctx.check(le[i][k], [&] {
            return "trans " + print_ord_list(pool[i].members) + " vs " +
                   print_ord_list(pool[k].members);
          });
    }
  // splitting: s <= tl * tr yields a matching split of s
  for (std::size_t ti = 0; ti < n; ++ti) {
    const auto& t = pool[ti];
    for (std::size_t cut = 0; cut <= t.members.size(); ++cut) {
      BulletSeq tl(std::vector<OrdTerm>(t.members.begin(), t.members.begin() + cut), ab);
      BulletSeq tr(std::vector<OrdTerm>(t.members.begin() + cut, t.members.end()), ab);
      for (std::size_t si = 0; si < n; ++si) {
        if (!le[si][ti]) continue;
        const auto& s = pool[si];
        bool found = false;
        for (std::size_t k = 0; k <= s.members.size() && !found; ++k) {
          BulletSeq sl(std::vector<OrdTerm>(s.members.begin(), s.members.begin() + k), ab);
          BulletSeq sr(std::vector<OrdTerm>(s.members.begin() + k, s.members.end()), ab);
          found = bullet_leq(sl, tl) && bullet_leq(sr, tr);
        }
        ctx.check(found, [&] {
          return "split " + print_ord_list(s.members) + " <= " +
                 print_ord_list(tl.members) + " * " + print_ord_list(tr.members);
        });
      }
    }
  }
  // top-element cancellation on sequences containing the top letter
  OrdTerm top = fin(alphabet - 1);
  auto first_top = [&](const BulletSeq& s) {
    for (std::size_t i = 0; i < s.members.size(); ++i)
      if (ord_eq(s.members[i], top)) return i;
    return s.members.size();
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pi = first_top(pool[i]);
    if (pi == pool[i].members.size()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t pj = first_top(pool[j]);
      if (pj == pool[j].members.size() || !le[i][j]) continue;
      BulletSeq sr(std::vector<OrdTerm>(pool[i].members.begin() + pi + 1, pool[i].members.end()), ab);
      BulletSeq tr(std::vector<OrdTerm>(pool[j].members.begin() + pj + 1, pool[j].members.end()), ab);
      ctx.check(bullet_leq(sr, tr), [&] {
        return "top-cancel " + print_ord_list(pool[i].members) + " vs " +
               print_ord_list(pool[j].members);
      });
    }
  }
  // common-suffix cancellation on short instances
  std::vector<BulletSeq> short_pool;
  for (const GapSeq& s : enum_seqs(alphabet, 3)) short_pool.push_back(BulletSeq(s.members, ab));
  for (const auto& sl : short_pool)
    for (const auto& tl : short_pool)
      for (const auto& r : short_pool) {
        if (r.members.size() > 2) continue;
        BulletSeq s(sl.members, ab), t(tl.members, ab);
        s.members.insert(s.members.end(), r.members.begin(), r.members.end());
        t.members.insert(t.members.end(), r.members.begin(), r.members.end());
        if (bullet_leq(s, t))
          ctx.check(bullet_leq(sl, tl), [&] {
            return "suffix-cancel " + print_ord_list(s.members) + " vs " +
                   print_ord_list(t.members);
          });
      }
  // pinned witness for the prefix-discard rule, and its Higman rejection
  BulletSeq w1({OrdTerm{}, OrdTerm{}, one()}, fin(2));
  BulletSeq w2({one(), one()}, fin(2));
  ctx.check(bullet_leq(w1, w2), [&] { return "pinned [0,0,1] <=bullet [1,1]"; });
  ctx.check(!higman_leq(w1.members, w2.members,
                        [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); }),
            [&] { return "pinned [0,0,1] !<=higman [1,1]"; });
  // the unary embedding reflects
  for (std::uint64_t a = 0; a < 20; ++a)
    for (std::uint64_t b = 0; b < 20; ++b)
      if (bullet_leq(nat_to_bullet(a), nat_to_bullet(b)))
        ctx.check(a <= b, [&] { return "nat " + std::to_string(a) + " vs " + std::to_string(b); });
  return ctx.report;
}

}  // namespace

// --- reflection suites ------------------------------------------------------------

namespace {

template <class X, class Y, class Apply, class SrcLeq, class TgtLeq, class Print>
void run_reflection(Ctx& ctx, const std::string& tag,
                    const std::vector<std::pair<X, X>>& pairs, Apply&& apply,
                    SrcLeq&& src, TgtLeq&& tgt, Print&& print) {
  for (const auto& pair : pairs) {
    const X& x = pair.first;
    const X& y = pair.second;
    Y fx = apply(x);
    Y fy = apply(y);
    ctx.check(!tgt(fx, fy) || src(x, y),
              [&] { return tag + " " + print(x) + " vs " + print(y); });
  }
}

template <class X>
std::vector<std::pair<X, X>> all_pairs(const std::vector<X>& pool) {
  std::vector<std::pair<X, X>> out;
  out.reserve(pool.size() * pool.size());
  for (const X& a : pool)
    for (const X& b : pool) out.emplace_back(a, b);
  return out;
}

bool indices_below(const OrdTerm& x, const OrdTerm& alpha) {
  for (const auto& run : x.runs()) {
    if (!ord_lt(run.principal.first, alpha)) return false;
    if (!indices_below(run.principal.first, alpha)) return false;
    if (!indices_below(run.principal.second, alpha)) return false;
  }
  return true;
}

CheckReport suite_reflect_seq_to_tree(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-seq-to-tree");
  std::vector<GapSeq> pool = enum_seqs(spec.alphabet, spec.max_len);
  for (const GapSeq& s : pool) {
    LabTree<Unit> img = seq_to_tree(s);
    ctx.check(is_left_strict(img) && is_ascending(img),
              [&] { return "range " + lit_seq(s); });
  }
  run_reflection<GapSeq, LabTree<Unit>>(
      ctx, "reflect", all_pairs(pool), [](const GapSeq& s) { return seq_to_tree(s); },
      [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); },
      [](const LabTree<Unit>& a, const LabTree<Unit>& b) { return leq_tree(a, b); },
      lit_seq);
  return ctx.report;
}

CheckReport suite_reflect_phi_to_gapseq(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-phi-to-gapseq");
  OrdTerm alpha = fin(2);
  std::vector<OrdTerm> pool;
  for (const OrdTerm& t : enum_ords(spec.max_size))
    if (indices_below(t, alpha)) pool.push_back(t);
  run_reflection<OrdTerm, GapSeq>(
      ctx, "reflect", all_pairs(pool),
      [&](const OrdTerm& x) { return phi_to_gapseq(x, alpha); },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); }, print_ord);
  return ctx.report;
}

CheckReport suite_reflect_strong_to_weak(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-strong-to-weak");
  std::vector<GapSeq> pool = enum_seqs(spec.alphabet, spec.max_len);
  run_reflection<GapSeq, GapSeq>(
      ctx, "reflect", all_pairs(pool), [](const GapSeq& s) { return strong_to_weak(s); },
      [](const GapSeq& a, const GapSeq& b) { return leq_s(a, b); },
      [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); }, lit_seq);
  // the identity in the other direction: strong implies weak on samples
  for (const GapSeq& a : pool)
    for (const GapSeq& b : pool)
      if (leq_s(a, b)) ctx.check(leq_w(weak_to_strong(a), weak_to_strong(b)),
                                 [&] { return "identity " + lit_pair(a, b); });
  return ctx.report;
}

OrdTerm random_below_omega_pow(Rng& rng, std::uint64_t k, std::uint64_t digit_cap) {
  OrdTerm acc;
  for (std::uint64_t i = k; i-- > 0;) {
    std::uint64_t c = rng.below(digit_cap + 1);
    if (c) acc = add(acc, mul(omega_pow(fin(i)), fin(c)));
  }
  return acc;
}

CheckReport suite_reflect_bullet_pipeline(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-bullet-pipeline");
  Rng rng(spec.seed);
  BulletEmbed stage1 = bullet_stage(nat_to_bullet_embed(), 2);  // w^2 -> 2 bullet
  BulletEmbed stage2 = bullet_stage(stage1, 2);                 // w^4 -> 3 bullet
  SeqEmbed letters;
  letters.domain = fin(3);
  letters.target_bound = one();
  letters.apply = [](const OrdTerm& k) {
    return GapSeq(std::vector<OrdTerm>(to_finite(k), OrdTerm{}), one());
  };
  EmbedFn<BulletSeq, GapSeq> b2w = bullet_to_weak(letters);
  auto full = [&](const OrdTerm& x) { return b2w.apply(stage2.apply(x)); };
  std::uint64_t n = ctx.samples(500);
  std::vector<std::pair<OrdTerm, OrdTerm>> pairs;
  for (std::uint64_t i = 0; i < n; ++i)
    pairs.emplace_back(random_below_omega_pow(rng, 4, 3), random_below_omega_pow(rng, 4, 3));
  // staged map reflects into the bullet order
  run_reflection<OrdTerm, BulletSeq>(
      ctx, "stage", pairs, [&](const OrdTerm& x) { return stage2.apply(x); },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const BulletSeq& a, const BulletSeq& b) { return bullet_leq(a, b); }, print_ord);
  // and the full pipeline into the weak gap order
  run_reflection<OrdTerm, GapSeq>(
      ctx, "pipeline", pairs, full,
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); }, print_ord);
  return ctx.report;
}

CheckReport suite_reflect_strong_lower(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-strong-lower");
  Rng rng(spec.seed);
  // alpha = w, gamma = 1, delta = w: base gives w^w -> S^s_{w*2},
  // combined with g : w -> S^s_w gives w^(w+1) -> S^s_{w*2}
  OrdTerm gamma = one();
  OrdTerm delta = omega();
  OrdTerm bound = add(omega_pow(gamma), delta);  // w*2
  SeqEmbed f;
  f.domain = omega();
  f.target_bound = bound;
  f.apply = [bound](const OrdTerm& k) { return GapSeq({k}, bound); };
  SeqEmbed base = strong_lower_base(f, gamma, delta);
  SeqEmbed g;
  g.domain = omega();
  g.target_bound = delta;
  g.apply = [delta](const OrdTerm& k) { return GapSeq({k}, delta); };
  SeqEmbed comb = strong_lower_combine(base, base.domain, g, gamma);

  std::uint64_t n = ctx.samples(500);
  std::vector<std::pair<OrdTerm, OrdTerm>> base_pairs, comb_pairs;
  for (std::uint64_t i = 0; i < n; ++i) {
    base_pairs.emplace_back(random_below_omega_pow(rng, 4, 3),
                            random_below_omega_pow(rng, 4, 3));
    OrdTerm q1 = mul(pow(omega(), omega()), fin(rng.below(4)));
    OrdTerm q2 = mul(pow(omega(), omega()), fin(rng.below(4)));
    comb_pairs.emplace_back(add(q1, random_below_omega_pow(rng, 4, 3)),
                            add(q2, random_below_omega_pow(rng, 4, 3)));
  }
  for (const auto& pair : base_pairs) {
    const OrdTerm& x = pair.first;
    GapSeq img = base.apply(x);
    ctx.check(img.empty() || ord_lt(img.members.front(), omega_pow(gamma)),
              [&] { return "range " + print_ord(x); });
  }
  run_reflection<OrdTerm, GapSeq>(
      ctx, "base", base_pairs, base.apply,
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const GapSeq& a, const GapSeq& b) { return leq_s(a, b); }, print_ord);
  run_reflection<OrdTerm, GapSeq>(
      ctx, "combine", comb_pairs, comb.apply,
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const GapSeq& a, const GapSeq& b) { return leq_s(a, b); }, print_ord);
  return ctx.report;
}

// Label pool helpers for tree-based reflections.
std::vector<OrdTerm> labels_below(const OrdTerm& bound) {
  std::vector<OrdTerm> out;
  for (const OrdTerm& t : enum_ords(3))
    if (ord_lt(t, bound)) out.push_back(t);
  return out;
}

template <class Leaf, class LeafGen>
LabTree<Leaf> random_tree_from_pool(Rng& rng, const std::vector<OrdTerm>& labels,
                                    std::uint64_t max_nodes, LeafGen&& leaf_gen) {
  std::function<LabTree<Leaf>(const OrdTerm&, std::uint64_t)> rec =
      [&](const OrdTerm& min_label, std::uint64_t budget) -> LabTree<Leaf> {
    std::vector<const OrdTerm*> eligible;
    for (const OrdTerm& l : labels)
      if (!ord_lt(l, min_label)) eligible.push_back(&l);
    if (budget < 3 || eligible.empty() || rng.chance(1, 3)) return mk_leaf(leaf_gen());
    const OrdTerm& b = *eligible[rng.below(eligible.size())];
    std::uint64_t rest = budget - 1;
    std::uint64_t lb = 1 + rng.below(rest > 1 ? rest - 1 : 1);
    return mk_node(b, rec(b, lb), rec(b, rest - lb));
  };
  return rec(OrdTerm{}, max_nodes);
}

CheckReport suite_reflect_left_set(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-left-set");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(3000);
  std::vector<OrdTerm> labels = labels_below(fin(3));
  std::vector<OrdTerm> leaves = labels;  // leaf alphabet: ordinals below 3
  auto leaf_le = [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); };
  auto rand_tree = [&] {
    return random_tree_from_pool<OrdTerm>(rng, labels, 9,
                                          [&] { return leaves[rng.below(leaves.size())]; });
  };
  auto tree_le = [&](const LabTree<OrdTerm>& a, const LabTree<OrdTerm>& b) {
    return leq_tree(a, b, leaf_le);
  };
  auto tree_lit = [](const LabTree<OrdTerm>& t) { return print_tree(t); };

  // Leaf variant: the identity lands in trees over the restricted leaf
  // alphabet, i.e. the excluded label dominates no leaf label in the domain
  {
    LabTree<OrdTerm> excluded = mk_leaf(fin(2));
    std::function<bool(const LabTree<OrdTerm>&)> leaves_ok =
        [&](const LabTree<OrdTerm>& t) -> bool {
      if (t.is_leaf()) return !leaf_le(excluded.leaf_label(), t.leaf_label());
      return leaves_ok(t.left()) && leaves_ok(t.right());
    };
    std::uint64_t done = 0;
    while (done < n / 3) {
      LabTree<OrdTerm> a = rand_tree();
      if (tree_le(excluded, a)) continue;
      ++done;
      ctx.check(leaves_ok(a), [&] { return "leaf " + tree_lit(a); });
    }
  }
  // Root variant
  {
    LabTree<OrdTerm> excluded =
        mk_node(OrdTerm{}, mk_node(one(), mk_leaf(fin(0)), mk_leaf(fin(1))), mk_leaf(fin(1)));
    auto item_le = [&](const LeftSetItem<OrdTerm>& a, const LeftSetItem<OrdTerm>& b) {
      return left_set_item_leq(a, b, leaf_le);
    };
    std::uint64_t done = 0;
    while (done < n / 3) {
      LabTree<OrdTerm> a = rand_tree();
      LabTree<OrdTerm> b = rand_tree();
      if (tree_le(excluded, a) || tree_le(excluded, b)) continue;
      ++done;
      auto fa = left_set_root(excluded, a, leaf_le);
      auto fb = left_set_root(excluded, b, leaf_le);
      ctx.check(!higman_leq(fa, fb, item_le) || tree_le(a, b),
                [&] { return "root " + tree_lit(a) + " vs " + tree_lit(b); });
    }
  }
  // Shift variant: cut at the leading omega power of the largest excluded label
  {
    LabTree<OrdTerm> excluded =
        mk_node(one(), mk_node(fin(2), mk_leaf(fin(0)), mk_leaf(fin(0))), mk_leaf(fin(1)));
    auto outer_le = [&](const LabTree<LabTree<OrdTerm>>& a,
                        const LabTree<LabTree<OrdTerm>>& b) {
      return leq_tree(a, b, tree_le);
    };
    std::uint64_t done = 0;
    while (done < n / 3) {
      LabTree<OrdTerm> a = rand_tree();
      LabTree<OrdTerm> b = rand_tree();
      if (tree_le(excluded, a) || tree_le(excluded, b)) continue;
      ++done;
      ctx.check(!outer_le(left_set_shift(excluded, a), left_set_shift(excluded, b)) ||
                    tree_le(a, b),
                [&] { return "shift " + tree_lit(a) + " vs " + tree_lit(b); });
    }
  }
  return ctx.report;
}

CheckReport suite_reflect_tree_label_split(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-tree-label-split");
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(3000);
  auto unit_leaf = [] { return Unit{}; };
  auto inner_le = [](const LabTree<Unit>& a, const LabTree<Unit>& b) { return leq_tree(a, b); };
  for (OrdTerm alpha : {fin(3), add(omega(), fin(2))}) {
    std::vector<OrdTerm> labels = labels_below(alpha);
    std::vector<std::pair<LabTree<Unit>, LabTree<Unit>>> pairs;
    for (std::uint64_t i = 0; i < n / 2; ++i)
      pairs.emplace_back(random_tree_from_pool<Unit>(rng, labels, 9, unit_leaf),
                         random_tree_from_pool<Unit>(rng, labels, 9, unit_leaf));
    run_reflection<LabTree<Unit>, LabTree<LabTree<Unit>>>(
        ctx, "split@" + print_ord(alpha), pairs,
        [&](const LabTree<Unit>& t) { return tree_label_split(t, alpha); },
        [](const LabTree<Unit>& a, const LabTree<Unit>& b) { return leq_tree(a, b); },
        [&](const LabTree<LabTree<Unit>>& a, const LabTree<LabTree<Unit>>& b) {
          return leq_tree(a, b, inner_le);
        },
        [](const LabTree<Unit>& t) { return print_tree(t); });
    // left-strict inputs stay left-strict below the cut
    for (std::uint64_t i = 0; i < 50; ++i) {
      LabTree<Unit> t = random_tree_from_pool<Unit>(rng, labels, 9, unit_leaf);
      if (!is_left_strict(t)) continue;
      ctx.check(is_left_strict(tree_label_split(t, alpha)),
                [&] { return "strictness " + print_tree(t); });
    }
  }
  return ctx.report;
}

CheckReport suite_reflect_strong_decompose(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-strong-decompose");
  // finite bound: exhaustive
  std::vector<GapSeq> pool = enum_seqs(spec.alphabet, spec.max_len);
  run_reflection<GapSeq, StrongSplitFin>(
      ctx, "fin", all_pairs(pool), [](const GapSeq& s) { return strong_decompose_fin(s); },
      [](const GapSeq& a, const GapSeq& b) { return leq_s(a, b); },
      [](const StrongSplitFin& a, const StrongSplitFin& b) {
        return leq_s(a.low, b.low) && leq_w(a.rest, b.rest);
      },
      lit_seq);
  // infinite bound w*2: sampled
  Rng rng(spec.seed);
  OrdTerm bound = mul(omega(), fin(2));
  std::vector<OrdTerm> members = labels_below(bound);
  std::uint64_t n = ctx.samples(3000);
  std::vector<std::pair<GapSeq, GapSeq>> pairs;
  auto rand_seq = [&] {
    std::uint64_t len = rng.below(6);
    std::vector<OrdTerm> m;
    for (std::uint64_t i = 0; i < len; ++i) m.push_back(members[rng.below(members.size())]);
    return GapSeq(std::move(m), bound);
  };
  for (std::uint64_t i = 0; i < n; ++i) pairs.emplace_back(rand_seq(), rand_seq());
  run_reflection<GapSeq, StrongSplitInf>(
      ctx, "inf", pairs, [](const GapSeq& s) { return strong_decompose_inf(s); },
      [](const GapSeq& a, const GapSeq& b) { return leq_s(a, b); },
      [](const StrongSplitInf& a, const StrongSplitInf& b) {
        return leq_s(a.high, b.high) && higman_leq(a.tail, b.tail, split_tag_leq);
      },
      lit_seq);
  return ctx.report;
}

CheckReport suite_reflect_veblen(const DomainSpec& spec) {
  Ctx ctx(spec, "reflect-veblen");
  // alpha = 1, beta = w, rho = 1: base maps send k to a nonempty unary object
  OrdTerm alpha = one();
  OrdTerm beta = omega();
  OrdTerm rho = one();
  auto f_seq = [](const OrdTerm& k) {
    return GapSeq(std::vector<OrdTerm>(to_finite(k) + 1, OrdTerm{}), one());
  };
  std::function<LabTree<Unit>(const OrdTerm&)> f_tree = [](const OrdTerm& k) {
    LabTree<Unit> t = mk_node(OrdTerm{}, mk_leaf(Unit{}), mk_leaf(Unit{}));
    for (std::uint64_t i = 0; i < to_finite(k); ++i)
      t = mk_node(OrdTerm{}, t, mk_leaf(Unit{}));
    return t;
  };
  std::vector<OrdTerm> pool;
  for (const OrdTerm& t : enum_ords(spec.max_size)) {
    try {
      veblen_lower_seq(t, alpha, beta, rho, f_seq);
      pool.push_back(t);  // inside phi_alpha(beta)
    } catch (const Error&) {
    }
  }
  run_reflection<OrdTerm, GapSeq>(
      ctx, "seq", all_pairs(pool),
      [&](const OrdTerm& x) { return veblen_lower_seq(x, alpha, beta, rho, f_seq); },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); }, print_ord);
  run_reflection<OrdTerm, LabTree<Unit>>(
      ctx, "tree", all_pairs(pool),
      [&](const OrdTerm& x) { return veblen_lower_tree(x, alpha, beta, f_tree); },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const LabTree<Unit>& a, const LabTree<Unit>& b) { return leq_tree(a, b); },
      print_ord);
  return ctx.report;
}

// --- reification suite -------------------------------------------------------------

RType random_rtype(Rng& rng, std::uint64_t depth) {
  if (depth == 0) {
    switch (rng.below(3)) {
      case 0: return RType::labels(fin(1 + rng.below(3)));
      case 1: return RType::star(RType::empty());
      default: return RType::empty();
    }
  }
  switch (rng.below(5)) {
    case 0: return RType::labels(fin(1 + rng.below(3)));
    case 1: return RType::tree(fin(rng.below(3) + 1), random_rtype(rng, depth - 1));
    case 2: return RType::sum(random_rtype(rng, depth - 1), random_rtype(rng, depth - 1));
    case 3: return RType::prod(random_rtype(rng, depth - 1), random_rtype(rng, depth - 1));
    default: return RType::star(random_rtype(rng, depth - 1));
  }
}

std::optional<RTerm> random_rterm(Rng& rng, const RType& A, std::uint64_t budget) {
  switch (A.kind()) {
    case RType::Kind::Empty: return std::nullopt;
    case RType::Kind::Labels: {
      if (A.bound().is_zero()) return std::nullopt;
      std::uint64_t cap = is_finite(A.bound()) ? to_finite(A.bound()) : 3;
      return RTerm::ord_elem(fin(rng.below(cap)));
    }
    case RType::Kind::Tree: {
      std::function<std::optional<LabTree<RTerm>>(const OrdTerm&, std::uint64_t)> rec =
          [&](const OrdTerm& min_label, std::uint64_t b) -> std::optional<LabTree<RTerm>> {
        bool can_node = !A.bound().is_zero() && ord_lt(min_label, A.bound()) && b >= 3;
        if (!can_node || rng.chance(1, 2)) {
          auto leaf = random_rterm(rng, A.a(), b > 0 ? b - 1 : 0);
          if (!leaf) return std::nullopt;
          return mk_leaf(*leaf);
        }
        std::uint64_t cap = is_finite(A.bound()) ? to_finite(A.bound()) : 3;
        std::uint64_t lo = is_finite(min_label) ? to_finite(min_label) : 0;
        OrdTerm label = fin(lo + rng.below(cap > lo ? cap - lo : 1));
        auto l = rec(label, (b - 1) / 2);
        auto r = rec(label, (b - 1) / 2);
        if (!l || !r) return std::nullopt;
        return mk_node(label, *l, *r);
      };
      auto t = rec(OrdTerm{}, budget);
      if (!t) return std::nullopt;
      return RTerm::tree(*t);
    }
    case RType::Kind::Sum: {
      bool first = rng.chance(1, 2);
      for (int attempt = 0; attempt < 2; ++attempt, first = !first) {
        auto x = random_rterm(rng, first ? A.a() : A.b(), budget > 0 ? budget - 1 : 0);
        if (x) return first ? RTerm::inj0(*x) : RTerm::inj1(*x);
      }
      return std::nullopt;
    }
    case RType::Kind::Prod: {
      auto x = random_rterm(rng, A.a(), budget / 2);
      auto y = random_rterm(rng, A.b(), budget / 2);
      if (!x || !y) return std::nullopt;
      return RTerm::pair(*x, *y);
    }
    case RType::Kind::Star: {
      std::uint64_t k = rng.below(3);
      std::vector<RTerm> elems;
      for (std::uint64_t i = 0; i < k; ++i) {
        auto x = random_rterm(rng, A.a(), budget / 2);
        if (x) elems.push_back(*x);
      }
      return RTerm::seq(std::move(elems));
    }
  }
  return std::nullopt;
}

CheckReport suite_reify_descent(const DomainSpec& spec) {
  Ctx ctx(spec, "reify-descent");
  Rng rng(spec.seed);
  std::uint64_t seqs = ctx.samples(50);

  // greedily grown bad sequences of trees: every extension strictly drops.
  // The bare leaf embeds into everything and would end a sequence at once, so
  // the sampler retries it away to reach longer chains.
  for (std::uint64_t i = 0; i < seqs; ++i) {
    TreeBadSeqReifier reifier(fin(spec.alphabet));
    std::optional<OrdTerm> prev;
    int stall = 0;
    while (stall < 200) {
      LabTree<Unit> cand = random_tree(rng, spec.alphabet, 12);
      for (int tries = 0; cand.is_leaf() && tries < 20; ++tries)
        cand = random_tree(rng, spec.alphabet, 12);
      try {
        OrdTerm value = reifier.push(cand);
        if (prev)
          ctx.check(ord_lt(value, *prev), [&] {
            return "descent at length " + std::to_string(reifier.size());
          });
        else
          ++ctx.report.cases;
        prev = value;
        stall = 0;
      } catch (const NotBad&) {
        ++stall;
      }
    }
  }

  // simplification strictly shrinks the ordinal measure
  std::uint64_t n = seqs * 10;
  for (std::uint64_t i = 0; i < n; ++i) {
    RType A = random_rtype(rng, 2);
    auto a = random_rterm(rng, A, 8);
    if (!a) {
      ++ctx.report.cases;
      continue;
    }
    ctx.check(ord_lt(otype(simplify_type(A, *a)), otype(A)),
              [&] { return "otype " + print_rtype(A) + " at " + print_rterm(*a); });
  }

  // reflection of the embedding family e
  std::uint64_t hits = 0;
  while (hits < n) {
    RType A = random_rtype(rng, 2);
    auto a = random_rterm(rng, A, 8);
    auto b = random_rterm(rng, A, 8);
    auto c = random_rterm(rng, A, 8);
    if (!a || !b || !c) continue;
    bool ab, ac;
    try {
      ab = leq_rterm(*a, *b);
      ac = leq_rterm(*a, *c);
    } catch (const TypeMismatch&) {
      continue;
    }
    if (ab || ac) continue;
    ++hits;
    RTerm eb = e(A, *a, *b);
    RTerm ec = e(A, *a, *c);
    ctx.check(!leq_rterm(eb, ec) || leq_rterm(*b, *c), [&] {
      return "e-reflection " + print_rtype(A) + ": " + print_rterm(*b) + " vs " +
             print_rterm(*c);
    });
  }

  // iterated simplification agrees with the incremental reifier
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto sample = [&] { return random_tree(rng, spec.alphabet, 8); };
    auto trees = grow_bad_sequence<LabTree<Unit>>(
        sample, [](const LabTree<Unit>& a, const LabTree<Unit>& b) { return leq_tree(a, b); },
        4, 50);
    if (trees.empty()) continue;
    TreeBadSeqReifier reifier(fin(spec.alphabet));
    OrdTerm incremental;
    for (const auto& t : trees) incremental = reifier.push(t);
    ctx.check(incremental == reify_tree_badseq(trees, fin(spec.alphabet)),
              [&] { return "incremental mismatch at " + std::to_string(trees.size()); });
  }
  return ctx.report;
}

// --- closed-form order types ----------------------------------------------------

CheckReport suite_motype_laws(const DomainSpec& spec) {
  Ctx ctx(spec, "motype-laws");
  // tower consistency: G(n+1) is the Higman value of G(n)
  for (std::uint64_t n = 1; n <= 4; ++n) {
    OrdTerm gn = motype_G(fin(n));
    OrdTerm gn1 = motype_G(fin(n + 1));
    ctx.check(gn1 == higman_star(gn, false) && gn1 == omega_pow(omega_pow(gn)),
              [&] { return "tower n=" + std::to_string(n); });
  }
  // the strong order type factors through the weak one at finite bounds
  for (std::uint64_t n = 0; n <= 5; ++n) {
    ctx.check(motype_H(fin(n + 1)) == mul(motype_G(fin(n + 1)), motype_H(fin(n))),
              [&] { return "cross n=" + std::to_string(n); });
  }
  // monotonicity on sampled pairs
  Rng rng(spec.seed);
  std::uint64_t n = ctx.samples(2000);
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdTerm a = random_ord(rng, 4);
    OrdTerm b = random_ord(rng, 4);
    if (!ord_lt(a, b)) std::swap(a, b);
    if (!ord_lt(a, b)) {
      ++ctx.report.cases;
      continue;
    }
    bool ok = ord_le(motype_F(a), motype_F(b)) && ord_le(motype_G(a), motype_G(b)) &&
              ord_le(motype_H(a), motype_H(b));
    ctx.check(ok, [&] { return "monotone " + print_ord(a) + " vs " + print_ord(b); });
  }
  return ctx.report;
}

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"ord-total-order", suite_ord_total_order},
      {"ord-add", suite_ord_add},
      {"ord-lsub", suite_ord_lsub},
      {"ord-hessenberg", suite_ord_hessenberg},
      {"ord-psi", suite_ord_psi},
      {"ord-cnf", suite_ord_cnf},
      {"seq-equivalence", suite_seq_equivalence},
      {"seq-order-axioms", suite_seq_order_axioms},
      {"seq-cancellation", suite_seq_cancellation},
      {"tree-order-axioms", suite_tree_order_axioms},
      {"bullet-order", suite_bullet_order},
      {"reflect-seq-to-tree", suite_reflect_seq_to_tree},
      {"reflect-phi-to-gapseq", suite_reflect_phi_to_gapseq},
      {"reflect-strong-to-weak", suite_reflect_strong_to_weak},
      {"reflect-bullet-pipeline", suite_reflect_bullet_pipeline},
      {"reflect-strong-lower", suite_reflect_strong_lower},
      {"reflect-left-set", suite_reflect_left_set},
      {"reflect-tree-label-split", suite_reflect_tree_label_split},
      {"reflect-strong-decompose", suite_reflect_strong_decompose},
      {"reflect-veblen", suite_reflect_veblen},
      {"reify-descent", suite_reify_descent},
      {"motype-laws", suite_motype_laws},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

CheckReport run_suite(const std::string& name, const DomainSpec& spec) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite("unknown suite: " + name);
  auto start = std::chrono::steady_clock::now();
  CheckReport report = it->second(spec);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gapord
