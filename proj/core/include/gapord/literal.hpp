#ifndef GAPORD_LITERAL_HPP
#define GAPORD_LITERAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gapord/gap_tree.hpp"
#include "gapord/ordinal.hpp"

namespace gapord {

// Ordinal grammar:
//   T ::= "0" | NAT | "w" | "w^" F | "phi(" T "," T ")" | T "+" T | T "*" NAT | "(" T ")"
//   F ::= atom or parenthesized T
// NAT is decimal sugar for a repeated "+1", "w" = phi(0,1), "w^x" = phi(0,x),
// "*" binds tighter than "+", whitespace is ignored.  Parsing normalizes, so
// print(parse(x)) is the canonical form and parse(print(t)) = t.
OrdTerm parse_ord(std::string_view text);
std::string print_ord(const OrdTerm& a);

// Sequence literals: "[T,T,...]" or "[]" with T in the ordinal grammar.
std::vector<OrdTerm> parse_ord_list(std::string_view text);
std::string print_ord_list(const std::vector<OrdTerm>& members);

// Tree literals: "." is a unit leaf, "leaf(X)" a labeled leaf, "(B L R)" an
// inner node with label B in the ordinal grammar; whitespace separated.
LabTree<Unit> parse_tree(std::string_view text);
std::string print_tree(const LabTree<Unit>& t);

LabTree<OrdTerm> parse_tree_ord_leaves(std::string_view text);
std::string print_tree(const LabTree<OrdTerm>& t);
std::string print_tree(const LabTree<LabTree<Unit>>& t);

}  // namespace gapord

#endif
