#pragma once

#include <vector>

#include "ahg/config.hpp"
#include "ahg/expvec.hpp"
#include "ahg/fiber.hpp"
#include "ahg/rational.hpp"

namespace ahg {

// Exact value vector (s • Z)(beta; X) for the basis monomials s ∈ S, together
// with the data it was evaluated at.  S[0] is always the constant monomial 1,
// so y[0] is Z(beta; X) itself.
struct StateVector {
  std::vector<ExpVec> S;
  std::vector<Rat> y;
  std::vector<long> beta;
  std::vector<Rat> X;
};

// Ground-truth evaluation by full fiber enumeration: component for s = d^v is
// the sum over fiber points u >= v of X^(u-v) / (u-v)!.  Exact; intended for
// fibers small enough to enumerate.
StateVector oracle_vector(const ConfigMatrix& A, const std::vector<ExpVec>& S,
                          const std::vector<long>& beta, const std::vector<Rat>& X);

// Throws BasisError unless S is nonempty, starts with the constant monomial,
// and every element has one exponent per column of A.
void validate_basis_shape(const std::vector<ExpVec>& S, int n);

}  // namespace ahg
