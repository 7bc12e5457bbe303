#ifndef GAPORD_MOTYPE_HPP
#define GAPORD_MOTYPE_HPP

#include "gapord/ordinal.hpp"

namespace gapord {

// Closed forms for the maximal order types of the gap-condition structures
// over a bound a:
//   F(a): binary trees with weakly ascending labels below a,
//   G(a): weak/symmetric gap sequences, and left-strict trees, below a,
//   H(a): strong gap sequences below a.
OrdTerm motype_F(const OrdTerm& a);
OrdTerm motype_G(const OrdTerm& a);
OrdTerm motype_H(const OrdTerm& a);

// Maximal order type of Higman's sequence order over a carrier of order type
// x; `empty` flags the empty carrier.
OrdTerm higman_star(const OrdTerm& x, bool empty);

}  // namespace gapord

#endif
