#ifndef GAPORD_ORDINAL_HPP
#define GAPORD_ORDINAL_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gapord/errors.hpp"

namespace gapord {

class OrdTerm;

enum class Ordering3 { LT, EQ, GT };

// An ordinal below Gamma_0 written as a weakly descending sum of principal
// (additively indecomposable) terms.  Equal summands are stored run-length
// encoded: a run (p, k) stands for k copies of the principal term p, and
// adjacent runs carry distinct principals.  The empty sum is 0, a single
// summand is indecomposable, anything longer is decomposable.
class OrdTerm {
 public:
  struct Principal;
  struct Run;

  OrdTerm() = default;  // zero

  bool is_zero() const { return !runs_ || runs_->empty(); }
  const std::vector<Run>& runs() const;

  // Total number of summands (with multiplicity); throws FiniteOverflow on
  // ridiculous inputs.
  std::uint64_t summand_count() const;

  // Builds a term from raw runs, throwing MalformedTerm unless the list is
  // strictly descending with merged runs and every principal is in normal
  // form.  Normal code goes through mk_phi/add/...; this is the checked entry
  // used by parsers and tests.
  static OrdTerm from_runs(std::vector<Run> runs);

  // Unchecked variant for internal construction of already-normal values.
  static OrdTerm from_runs_unchecked(std::vector<Run> runs);

  bool same_rep(const OrdTerm& other) const { return runs_ == other.runs_; }

 private:
  std::shared_ptr<const std::vector<Run>> runs_;  // null means zero
};

// One binary Veblen application phi(first, second).  Normal form requires
// second < phi(first, second), so the argument is never a fixed point of the
// function indexed by `first`.
struct OrdTerm::Principal {
  OrdTerm first;   // Veblen index
  OrdTerm second;  // argument
};

struct OrdTerm::Run {
  Principal principal;
  std::uint64_t count = 1;
};

// --- comparison -----------------------------------------------------------

Ordering3 cmp_ord(const OrdTerm& a, const OrdTerm& b);
Ordering3 cmp_principal(const OrdTerm::Principal& a, const OrdTerm::Principal& b);

inline bool ord_lt(const OrdTerm& a, const OrdTerm& b) { return cmp_ord(a, b) == Ordering3::LT; }
inline bool ord_le(const OrdTerm& a, const OrdTerm& b) { return cmp_ord(a, b) != Ordering3::GT; }
inline bool ord_eq(const OrdTerm& a, const OrdTerm& b) { return cmp_ord(a, b) == Ordering3::EQ; }
inline bool operator==(const OrdTerm& a, const OrdTerm& b) { return ord_eq(a, b); }
inline bool operator!=(const OrdTerm& a, const OrdTerm& b) { return !ord_eq(a, b); }

// --- constructors ---------------------------------------------------------

// phi(g, d) normalized: collapses to d when d is already a fixed point of
// level g, i.e. a single principal with strictly larger index.
OrdTerm mk_phi(const OrdTerm& g, const OrdTerm& d);

OrdTerm fin(std::uint64_t n);      // the natural number n
OrdTerm one();                     // phi(0, 0)
OrdTerm omega();                   // phi(0, 1)
OrdTerm omega_pow(const OrdTerm& x);  // mk_phi(0, x)

// --- predicates and views ---------------------------------------------------

bool is_indecomposable(const OrdTerm& a);  // exactly one summand
bool is_epsilon(const OrdTerm& a);         // fixed point of x -> omega^x
bool is_finite(const OrdTerm& a);
std::uint64_t to_finite(const OrdTerm& a);  // requires is_finite

// Exponent of a principal term viewed as an omega power: phi(0, x) = w^x has
// exponent x, and phi(g, d) for g > 0 is its own exponent.
OrdTerm cnf_exponent(const OrdTerm::Principal& p);

// Leading Cantor-normal-form piece: a = w^gamma + delta with delta < w^(gamma+1).
std::pair<OrdTerm, OrdTerm> cnf_head(const OrdTerm& a);

// --- arithmetic -------------------------------------------------------------

OrdTerm add(const OrdTerm& a, const OrdTerm& b);
OrdTerm lsub(const OrdTerm& a, const OrdTerm& b);  // -a + b, 0 when a > b
OrdTerm hessenberg(const OrdTerm& a, const OrdTerm& b);
OrdTerm nat_product(const OrdTerm& a, const OrdTerm& b);
OrdTerm mul(const OrdTerm& a, const OrdTerm& b);
OrdTerm pow(const OrdTerm& a, const OrdTerm& b);

// Long division: s = d*q + r with r < d; d must be positive.
std::pair<OrdTerm, OrdTerm> divide(const OrdTerm& s, const OrdTerm& d);

// Leading digit in base `base` >= 2: s = base^beta * kappa + lambda with
// 0 < kappa < base and lambda < base^beta.
struct BaseDigit {
  OrdTerm exponent;     // beta
  OrdTerm coefficient;  // kappa
  OrdTerm remainder;    // lambda
};
BaseDigit base_decompose(const OrdTerm& s, const OrdTerm& base);

// psi collapses the two-argument Veblen function past its fixed points; both
// arguments must be positive.
OrdTerm psi(const OrdTerm& a, const OrdTerm& b);

}  // namespace gapord

#endif
