#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ahg/buchberger.hpp"
#include "ahg/config.hpp"

namespace ahg {

// Reduced Gröbner basis of the binomial ideal of A in the d-variables
// (generated by d^u - d^v over all Au = Av), for a matrix with nonnegative
// entries.  Computed by introducing one auxiliary variable per row of A,
// writing d_i - t^{a_i}, eliminating the auxiliary block with a product
// order, and re-running Buchberger on the eliminated generators under
// `order` (an order on the n d-variables).
GroebnerBasis toric_gb(const ConfigMatrix& A, const TermOrder& order);

// Basis of the full integer kernel lattice {w : A w = 0}, via unimodular
// column reduction.  Works for arbitrary integer entries.
std::vector<std::vector<mpz_class>> integer_kernel_basis(const ConfigMatrix& A);

// Same ideal as toric_gb but computed from the kernel lattice: binomials
// x^{w+} - x^{w-} over a kernel basis, saturated by every variable in turn
// (reverse-lex basis, divide out the cheapest variable), then reduced under
// `order`.  Accepts matrices with negative entries.
GroebnerBasis lattice_gb(const ConfigMatrix& A, const TermOrder& order);

// Some u in N_0^n with A u = beta whose monomial d^u is in normal form with
// respect to the toric basis, or nullopt when beta is not in the semigroup
// N_0 A.  The overload without a basis computes toric_gb(A, grevlex).
std::optional<ExpVec> semigroup_member(const ConfigMatrix& A, const std::vector<long>& beta,
                                       const GroebnerBasis& gb);
std::optional<ExpVec> semigroup_member(const ConfigMatrix& A, const std::vector<long>& beta);

}  // namespace ahg
