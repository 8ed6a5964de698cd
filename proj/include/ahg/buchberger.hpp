#pragma once

#include <vector>

#include "ahg/poly.hpp"
#include "ahg/term_order.hpp"

namespace ahg {

// Reduced Gröbner basis: generators are monic, pairwise fully reduced, and
// sorted descending by leading monomial under `order`.  Immutable once built;
// safe to share across threads.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Poly> gens;

  bool empty() const { return gens.empty(); }
};

// Remainder of full multivariate division of p by G under ord: no term of the
// result is divisible by any leading monomial of G, and p - result lies in
// the ideal generated by G.
Poly normal_form(const Poly& p, const std::vector<Poly>& G, const TermOrder& ord);
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

// True when some leading monomial of gb divides x^e.
bool reduces(const GroebnerBasis& gb, const ExpVec& e);

// S-polynomial of f and g (both nonzero) under ord.
Poly spoly(const Poly& f, const Poly& g, const TermOrder& ord);

// Buchberger's algorithm with the product and chain criteria and
// smallest-lcm-degree pair selection, followed by minimalization and
// inter-reduction.  Zero generators are ignored; an all-zero input yields the
// empty basis (the zero ideal).
GroebnerBasis buchberger(const std::vector<Poly>& gens, const TermOrder& order);

}  // namespace ahg
