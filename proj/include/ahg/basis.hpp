#pragma once

#include <vector>

#include "ahg/buchberger.hpp"
#include "ahg/config.hpp"
#include "ahg/expvec.hpp"
#include "ahg/rational.hpp"

namespace ahg {

// Standard-monomial state basis for the parameter-shift system on the line
// beta + k*D at x = X: assemble the degree-T operator matrix with only the
// constant column as state block, specialize along the line, row-reduce over
// Q(k), and keep the non-pivot columns.  T is raised until the non-pivot set
// (restricted to the degrees the matrix fully covers) stabilizes between
// consecutive rounds and is closed under divisibility; the result is sorted
// ascending in the basis order, so the constant monomial comes first.
// Throws GenericityError when no stable basis emerges by max_T.
std::vector<ExpVec> discover_basis(const ConfigMatrix& A, const GroebnerBasis& G,
                                   const std::vector<long>& beta, const std::vector<Rat>& X,
                                   const std::vector<long>& D, int max_T = 12);

}  // namespace ahg
