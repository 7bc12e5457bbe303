#include "gapord/ordinal.hpp"

#include <cassert>
#include <limits>
#include <unordered_map>

namespace gapord {

namespace {

using Principal = OrdTerm::Principal;
using Run = OrdTerm::Run;

const std::vector<Run> kEmptyRuns{};

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw FiniteOverflow("finite coefficient overflow in ordinal arithmetic");
  return a * b;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw FiniteOverflow("finite coefficient overflow in ordinal arithmetic");
  return a + b;
}

}  // namespace

const std::vector<Run>& OrdTerm::runs() const {
  return runs_ ? *runs_ : kEmptyRuns;
}

std::uint64_t OrdTerm::summand_count() const {
  std::uint64_t n = 0;
  for (const Run& r : runs()) n = checked_add_u64(n, r.count);
  return n;
}

OrdTerm OrdTerm::from_runs_unchecked(std::vector<Run> runs) {
  OrdTerm t;
  if (!runs.empty())
    t.runs_ = std::make_shared<const std::vector<Run>>(std::move(runs));
  return t;
}

// --- comparison -------------------------------------------------------------

namespace {

// Values produced by iterated simplification share subterm representations
// heavily, and a plain structural comparison would traverse the expanded tree
// of such a DAG.  Deep comparisons therefore memoize on representation
// identity; the table is engaged lazily so that the ubiquitous small
// comparisons never pay for it.
struct CmpMemo {
  struct Hash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const {
      auto h1 = std::hash<const void*>{}(p.first);
      auto h2 = std::hash<const void*>{}(p.second);
      return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
  };
  std::unordered_map<std::pair<const void*, const void*>, Ordering3, Hash> table;
};

constexpr int kMemoDepth = 6;

Ordering3 cmp_rec(const OrdTerm& a, const OrdTerm& b, int depth, CmpMemo* memo);

Ordering3 cmp_principal_rec(const Principal& a, const Principal& b, int depth,
                            CmpMemo* memo) {
  switch (cmp_rec(a.first, b.first, depth, memo)) {
    case Ordering3::LT: {
      OrdTerm rhs = OrdTerm::from_runs_unchecked({Run{b, 1}});
      // a.second = rhs would contradict a being in normal form
      return cmp_rec(a.second, rhs, depth, memo) == Ordering3::LT ? Ordering3::LT
                                                                  : Ordering3::GT;
    }
    case Ordering3::EQ:
      return cmp_rec(a.second, b.second, depth, memo);
    case Ordering3::GT: {
      OrdTerm lhs = OrdTerm::from_runs_unchecked({Run{a, 1}});
      return cmp_rec(lhs, b.second, depth, memo) == Ordering3::LT ? Ordering3::LT
                                                                  : Ordering3::GT;
    }
  }
  return Ordering3::EQ;  // unreachable
}

// Sums compare lexicographically with a length tie-break.  On maximal runs
// this reduces to comparing run pairs: at the first differing run, a distinct
// principal decides directly; with equal principals the shorter run loses
// (its successor summand, if any, is strictly smaller than the continuing
// principal of the other side).
Ordering3 cmp_rec(const OrdTerm& a, const OrdTerm& b, int depth, CmpMemo* memo) {
  if (a.same_rep(b)) return Ordering3::EQ;
  std::pair<const void*, const void*> key{&a.runs(), &b.runs()};
  if (memo && depth > kMemoDepth) {
    auto it = memo->table.find(key);
    if (it != memo->table.end()) return it->second;
  }
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  const std::size_t n = ra.size() < rb.size() ? ra.size() : rb.size();
  Ordering3 res = Ordering3::EQ;
  for (std::size_t i = 0; i < n && res == Ordering3::EQ; ++i) {
    res = cmp_principal_rec(ra[i].principal, rb[i].principal, depth + 1, memo);
    if (res == Ordering3::EQ && ra[i].count != rb[i].count)
      res = ra[i].count < rb[i].count ? Ordering3::LT : Ordering3::GT;
  }
  if (res == Ordering3::EQ && ra.size() != rb.size())
    res = ra.size() < rb.size() ? Ordering3::LT : Ordering3::GT;
  if (memo && depth > kMemoDepth) memo->table.emplace(key, res);
  return res;
}

}  // namespace

Ordering3 cmp_ord(const OrdTerm& a, const OrdTerm& b) {
  if (a.same_rep(b)) return Ordering3::EQ;
  CmpMemo memo;
  return cmp_rec(a, b, 0, &memo);
}

Ordering3 cmp_principal(const Principal& a, const Principal& b) {
  CmpMemo memo;
  return cmp_principal_rec(a, b, 0, &memo);
}

// --- validation --------------------------------------------------------------

namespace {

void check_principal(const Principal& p);

void check_term(const OrdTerm& t) {
  const auto& rs = t.runs();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].count == 0) throw MalformedTerm("run with zero count");
    check_principal(rs[i].principal);
    if (i + 1 < rs.size() &&
        cmp_principal(rs[i].principal, rs[i + 1].principal) != Ordering3::GT)
      throw MalformedTerm("summands not strictly descending between runs");
  }
}

void check_principal(const Principal& p) {
  check_term(p.first);
  check_term(p.second);
  OrdTerm whole = OrdTerm::from_runs_unchecked({Run{p, 1}});
  if (cmp_ord(p.second, whole) != Ordering3::LT)
    throw MalformedTerm("argument not below its own Veblen value");
}

}  // namespace

OrdTerm OrdTerm::from_runs(std::vector<Run> runs) {
  OrdTerm t = from_runs_unchecked(std::move(runs));
  check_term(t);
  return t;
}

// --- constructors -------------------------------------------------------------

OrdTerm mk_phi(const OrdTerm& g, const OrdTerm& d) {
  const auto& rs = d.runs();
  if (rs.size() == 1 && rs[0].count == 1 &&
      cmp_ord(rs[0].principal.first, g) == Ordering3::GT)
    return d;  // fixed point of every lower level
  return OrdTerm::from_runs_unchecked({Run{Principal{g, d}, 1}});
}

OrdTerm fin(std::uint64_t n) {
  if (n == 0) return OrdTerm{};
  return OrdTerm::from_runs_unchecked({Run{Principal{OrdTerm{}, OrdTerm{}}, n}});
}

OrdTerm one() { return fin(1); }

OrdTerm omega() { return mk_phi(OrdTerm{}, one()); }

OrdTerm omega_pow(const OrdTerm& x) { return mk_phi(OrdTerm{}, x); }

// --- predicates and views -----------------------------------------------------

bool is_indecomposable(const OrdTerm& a) {
  return a.runs().size() == 1 && a.runs()[0].count == 1;
}

bool is_epsilon(const OrdTerm& a) {
  return is_indecomposable(a) && !a.runs()[0].principal.first.is_zero();
}

bool is_finite(const OrdTerm& a) {
  if (a.is_zero()) return true;
  const auto& rs = a.runs();
  return rs.size() == 1 && rs[0].principal.first.is_zero() &&
         rs[0].principal.second.is_zero();
}

std::uint64_t to_finite(const OrdTerm& a) {
  if (a.is_zero()) return 0;
  assert(is_finite(a));
  return a.runs()[0].count;
}

OrdTerm cnf_exponent(const Principal& p) {
  if (p.first.is_zero()) return p.second;
  return OrdTerm::from_runs_unchecked({Run{p, 1}});
}

std::pair<OrdTerm, OrdTerm> cnf_head(const OrdTerm& a) {
  if (a.is_zero()) throw ZeroHasNoHead();
  const auto& rs = a.runs();
  OrdTerm gamma = cnf_exponent(rs[0].principal);
  std::vector<Run> rest(rs.begin(), rs.end());
  if (rest[0].count > 1)
    rest[0].count -= 1;
  else
    rest.erase(rest.begin());
  return {gamma, OrdTerm::from_runs_unchecked(std::move(rest))};
}

// --- addition family ------------------------------------------------------------

// Drop the summands of `a` strictly below b's head, then concatenate.
OrdTerm add(const OrdTerm& a, const OrdTerm& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  const Principal& head = rb[0].principal;
  std::vector<Run> out;
  out.reserve(ra.size() + rb.size());
  for (const Run& r : ra) {
    Ordering3 c = cmp_principal(r.principal, head);
    if (c == Ordering3::GT) {
      out.push_back(r);
    } else if (c == Ordering3::EQ) {
      out.push_back(Run{head, checked_add_u64(r.count, rb[0].count)});
      out.insert(out.end(), rb.begin() + 1, rb.end());
      return OrdTerm::from_runs_unchecked(std::move(out));
    } else {
      break;
    }
  }
  out.insert(out.end(), rb.begin(), rb.end());
  return OrdTerm::from_runs_unchecked(std::move(out));
}

OrdTerm lsub(const OrdTerm& a, const OrdTerm& b) {
  if (cmp_ord(a, b) != Ordering3::LT) return OrdTerm{};  // covers a = b and a > b
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  std::size_t i = 0;
  while (i < ra.size() && i < rb.size() &&
         cmp_principal(ra[i].principal, rb[i].principal) == Ordering3::EQ &&
         ra[i].count == rb[i].count)
    ++i;
  std::vector<Run> out;
  if (i < ra.size() && i < rb.size() &&
      cmp_principal(ra[i].principal, rb[i].principal) == Ordering3::EQ) {
    // same principal, a's run is shorter (a < b)
    out.push_back(Run{rb[i].principal, rb[i].count - ra[i].count});
    ++i;
    out.insert(out.end(), rb.begin() + i, rb.end());
  } else {
    out.assign(rb.begin() + i, rb.end());
  }
  return OrdTerm::from_runs_unchecked(std::move(out));
}

OrdTerm hessenberg(const OrdTerm& a, const OrdTerm& b) {
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  std::vector<Run> out;
  out.reserve(ra.size() + rb.size());
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < rb.size()) {
    switch (cmp_principal(ra[i].principal, rb[j].principal)) {
      case Ordering3::GT: out.push_back(ra[i++]); break;
      case Ordering3::LT: out.push_back(rb[j++]); break;
      case Ordering3::EQ:
        out.push_back(Run{ra[i].principal, checked_add_u64(ra[i].count, rb[j].count)});
        ++i;
        ++j;
        break;
    }
  }
  out.insert(out.end(), ra.begin() + i, ra.end());
  out.insert(out.end(), rb.begin() + j, rb.end());
  return OrdTerm::from_runs_unchecked(std::move(out));
}

// Natural product: distribute over summands, multiplying omega powers by
// Hessenberg-summing their exponents.
OrdTerm nat_product(const OrdTerm& a, const OrdTerm& b) {
  OrdTerm acc;
  for (const Run& x : a.runs()) {
    OrdTerm ex = cnf_exponent(x.principal);
    for (const Run& y : b.runs()) {
      OrdTerm ey = cnf_exponent(y.principal);
      OrdTerm p = omega_pow(hessenberg(ex, ey));
      std::uint64_t k = checked_mul_u64(x.count, y.count);
      acc = hessenberg(acc, OrdTerm::from_runs_unchecked(
                                {Run{p.runs()[0].principal, k}}));
    }
  }
  return acc;
}

// --- ordinary multiplication -----------------------------------------------------

namespace {

// a * w^e for e > 0 and a > 0 equals w^(a0 + e) where a0 is a's head exponent.
OrdTerm mul_by_omega_power(const OrdTerm& a, const OrdTerm& e, std::uint64_t count) {
  OrdTerm a0 = cnf_exponent(a.runs()[0].principal);
  OrdTerm p = omega_pow(add(a0, e));
  return OrdTerm::from_runs_unchecked({Run{p.runs()[0].principal, count}});
}

// a * n for finite n >= 1: the head run is repeated n times, the tail once.
OrdTerm mul_by_finite(const OrdTerm& a, std::uint64_t n) {
  const auto& ra = a.runs();
  std::vector<Run> out(ra.begin(), ra.end());
  out[0].count = checked_mul_u64(out[0].count, n);
  return OrdTerm::from_runs_unchecked(std::move(out));
}

}  // namespace

OrdTerm mul(const OrdTerm& a, const OrdTerm& b) {
  if (a.is_zero() || b.is_zero()) return OrdTerm{};
  OrdTerm acc;
  for (const Run& y : b.runs()) {
    OrdTerm ey = cnf_exponent(y.principal);
    OrdTerm piece = ey.is_zero() ? mul_by_finite(a, y.count)
                                 : mul_by_omega_power(a, ey, y.count);
    acc = add(acc, piece);
  }
  return acc;
}

// --- exponentiation ----------------------------------------------------------------

namespace {

// Shift every exponent of x down by one from the left (w * q = x solves for q).
OrdTerm omega_log_shift(const OrdTerm& x) {
  std::vector<Run> out;
  OrdTerm onev = one();
  for (const Run& r : x.runs()) {
    OrdTerm e = cnf_exponent(r.principal);
    OrdTerm p = omega_pow(lsub(onev, e));
    Run nr{p.runs()[0].principal, r.count};
    if (!out.empty() && cmp_principal(out.back().principal, nr.principal) == Ordering3::EQ)
      out.back().count = checked_add_u64(out.back().count, nr.count);
    else
      out.push_back(nr);
  }
  return OrdTerm::from_runs_unchecked(std::move(out));
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul_u64(r, base);
  return r;
}

constexpr std::uint64_t kMaxIteratedPow = 1u << 20;

}  // namespace

OrdTerm pow(const OrdTerm& a, const OrdTerm& b) {
  if (b.is_zero()) return one();
  if (a.is_zero()) return OrdTerm{};
  if (is_finite(a) && to_finite(a) == 1) return one();

  // split b into its infinite part and its finite tail
  std::vector<Run> inf_runs;
  std::uint64_t n = 0;
  for (const Run& r : b.runs()) {
    if (r.principal.first.is_zero() && r.principal.second.is_zero())
      n = r.count;
    else
      inf_runs.push_back(r);
  }
  OrdTerm binf = OrdTerm::from_runs_unchecked(std::move(inf_runs));

  OrdTerm result = one();
  if (!binf.is_zero()) {
    if (is_finite(a)) {
      // m^(w*q) = w^q for finite m >= 2
      result = omega_pow(omega_log_shift(binf));
    } else {
      OrdTerm a0 = cnf_exponent(a.runs()[0].principal);
      result = omega_pow(mul(a0, binf));
    }
  }
  if (n > 0) {
    if (is_finite(a) && result == one()) return fin(checked_pow_u64(to_finite(a), n));
    if (n > kMaxIteratedPow)
      throw FiniteOverflow("finite exponent too large for iterated multiplication");
    for (std::uint64_t i = 0; i < n; ++i) result = mul(result, a);
  }
  return result;
}

// --- division and base decomposition ---------------------------------------------

std::pair<OrdTerm, OrdTerm> divide(const OrdTerm& s, const OrdTerm& d) {
  if (d.is_zero()) throw ZeroArgument("division by zero ordinal");
  OrdTerm q;
  OrdTerm r = s;
  OrdTerm d0 = cnf_exponent(d.runs()[0].principal);
  std::uint64_t dc = d.runs()[0].count;
  while (cmp_ord(r, d) != Ordering3::LT) {
    OrdTerm r0 = cnf_exponent(r.runs()[0].principal);
    std::uint64_t rc = r.runs()[0].count;
    OrdTerm e = lsub(d0, r0);
    if (!e.is_zero()) {
      // d * (w^e * rc) removes the whole head run of r
      OrdTerm chunk = mul_by_finite(omega_pow(e), rc);
      q = add(q, chunk);
      std::vector<Run> rest(r.runs().begin() + 1, r.runs().end());
      r = OrdTerm::from_runs_unchecked(std::move(rest));
    } else {
      // equal head exponents: finite quotient step, maximal k with d*k <= r
      std::uint64_t k = rc / dc;
      while (k > 0 && cmp_ord(mul_by_finite(d, k), r) == Ordering3::GT) --k;
      assert(k > 0);
      OrdTerm dk = mul_by_finite(d, k);
      q = add(q, fin(k));
      r = lsub(dk, r);
      break;  // remainder is now below d
    }
  }
  return {q, r};
}

namespace {

std::uint64_t ilog_u64(std::uint64_t base, std::uint64_t v) {
  std::uint64_t e = 0;
  std::uint64_t p = 1;
  while (p <= v / base) {
    p *= base;
    ++e;
  }
  return e;
}

// a - 1 for successor ordinals (trailing finite run shrinks by one).
OrdTerm pred_of_successor(const OrdTerm& a) {
  const auto& rs = a.runs();
  assert(!rs.empty() && rs.back().principal.first.is_zero() &&
         rs.back().principal.second.is_zero());
  std::vector<OrdTerm::Run> out(rs.begin(), rs.end());
  if (out.back().count > 1)
    out.back().count -= 1;
  else
    out.pop_back();
  return OrdTerm::from_runs_unchecked(std::move(out));
}

}  // namespace

BaseDigit base_decompose(const OrdTerm& s, const OrdTerm& base) {
  if (cmp_ord(base, fin(2)) == Ordering3::LT)
    throw BaseTooSmall("base_decompose requires base >= 2");
  if (s.is_zero()) throw ZeroHasNoHead();
  if (cmp_ord(s, base) == Ordering3::LT)
    return {OrdTerm{}, s, OrdTerm{}};

  OrdTerm beta;
  if (is_finite(base)) {
    std::uint64_t nb = to_finite(base);
    if (is_finite(s)) {
      beta = fin(ilog_u64(nb, to_finite(s)));
    } else {
      // n^(w*x + r) = w^x * n^r: take x = head exponent of s, r maximal
      // with n^r <= head coefficient.
      OrdTerm s0 = cnf_exponent(s.runs()[0].principal);
      std::uint64_t c = s.runs()[0].count;
      beta = add(mul(omega(), s0), fin(ilog_u64(nb, c)));
    }
  } else {
    // head exponent of base^x is b0*x, so the candidate solves b0*q <= s0
    OrdTerm b0 = cnf_exponent(base.runs()[0].principal);
    OrdTerm s0 = cnf_exponent(s.runs()[0].principal);
    OrdTerm q = divide(s0, b0).first;
    if (cmp_ord(pow(base, q), s) == Ordering3::GT) {
      // base^q overshoots only when q is a successor: step down once
      q = pred_of_successor(q);
    }
    beta = q;
  }
  OrdTerm power = pow(base, beta);
  auto [kappa, lambda] = divide(s, power);
  assert(!kappa.is_zero() && cmp_ord(kappa, base) == Ordering3::LT);
  assert(cmp_ord(lambda, power) == Ordering3::LT);
  return {beta, kappa, lambda};
}

// --- psi ------------------------------------------------------------------------

OrdTerm psi(const OrdTerm& a, const OrdTerm& b) {
  if (a.is_zero() || b.is_zero())
    throw ZeroArgument("psi requires positive arguments");
  OrdTerm next_level = mk_phi(add(a, one()), OrdTerm{});
  if (cmp_ord(b, next_level) != Ordering3::LT)
    return mk_phi(a, add(b, one()));
  if (b == one() && cmp_ord(a, mk_phi(a, OrdTerm{})) == Ordering3::LT)
    return mk_phi(a, OrdTerm{});
  return mk_phi(a, b);
}

}  // namespace gapord
