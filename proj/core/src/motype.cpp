#include "gapord/motype.hpp"

namespace gapord {

namespace {

// gamma < phi(gamma, 0); fails only at Gamma-ordinals, which this notation
// cannot write, but the condition is still evaluated.
bool below_own_veblen(const OrdTerm& gamma) {
  return ord_lt(gamma, mk_phi(gamma, OrdTerm{}));
}

}  // namespace

OrdTerm motype_F(const OrdTerm& a) {
  if (a.is_zero()) return one();
  auto [gamma, delta] = cnf_head(a);
  if (delta.is_zero() && below_own_veblen(gamma))
    return mk_phi(add(one(), gamma), OrdTerm{});
  return mk_phi(add(one(), gamma), motype_F(delta));
}

OrdTerm motype_G(const OrdTerm& a) {
  if (a.is_zero()) return one();
  if (a == one()) return omega();
  if (is_finite(a)) {
    OrdTerm n = lsub(one(), a);  // a = n + 1
    return omega_pow(omega_pow(motype_G(n)));
  }
  auto [gamma, delta] = cnf_head(a);
  if (delta.is_zero() && !gamma.is_zero() && below_own_veblen(gamma))
    return mk_phi(gamma, OrdTerm{});
  return mk_phi(gamma, motype_G(delta));
}

OrdTerm motype_H(const OrdTerm& a) {
  if (a.is_zero()) return one();
  auto [gamma, delta] = cnf_head(a);
  return mul(pow(motype_G(a), omega_pow(gamma)), motype_H(delta));
}

OrdTerm higman_star(const OrdTerm& x, bool empty) {
  if (empty) return one();
  if (is_finite(x)) return omega_pow(omega_pow(lsub(one(), x)));
  // x = epsilon + n for an epsilon number and finite n: the head summand is an
  // epsilon number and everything after it is finite.
  const auto& runs = x.runs();
  bool eps_plus_finite =
      !runs[0].principal.first.is_zero() && runs[0].count == 1 &&
      (runs.size() == 1 ||
       (runs.size() == 2 && runs[1].principal.first.is_zero() &&
        runs[1].principal.second.is_zero()));
  if (eps_plus_finite) return omega_pow(omega_pow(add(x, one())));
  return omega_pow(omega_pow(x));
}

}  // namespace gapord
