#pragma once

#include <vector>

#include "ahg/config.hpp"
#include "ahg/oracle.hpp"
#include "ahg/recurrence.hpp"

namespace ahg {

// One leg of an evaluation plan: advance the parameter `m` times by H.
struct Leg {
  std::vector<long> H;
  long m = 0;
};

// A full evaluation request: start at beta0, follow the legs, report the
// state vector at the end point beta0 + sum m_i H_i.
struct EvalPlan {
  std::vector<long> beta0;
  std::vector<Leg> legs;
  std::vector<Rat> X;
  std::vector<ExpVec> S;
};

// Difference holonomic gradient method: seed the state at beta0 by direct
// fiber summation, then per leg extract one recurrence matrix R over Q(k)
// and iterate Y <- R(k)^{-1} Y for k = 1..m, which walks the parameter from
// beta0 + (k-1) H to beta0 + k H.  Exact throughout.  Throws
// SingularStepError(k) when a step matrix has a pole or is singular at a
// concrete k, GenericityError when an extraction fails to close, and
// BasisError for a malformed state basis.
StateVector hgm_eval(const ConfigMatrix& A, const EvalPlan& plan);

// E[U_i] = X_i * (d_i • Z)(beta) / Z(beta) read from a state vector.  When
// d_i is not part of the basis, the numerator is synthesized through the
// single-column step matrix at k = 0.  Throws ZeroNormalizerError when
// Z(beta) = 0.
Rat expectation(const ConfigMatrix& A, const StateVector& Y, int i);

// Column shift making a signed matrix nonnegative while preserving the
// integer kernel (hence the binomial ideal): every column moves by the same
// vector p, so fibers are carried over unchanged.
struct ShiftResult {
  ConfigMatrix Aprime;
  std::vector<long> p;
  std::vector<Rat> hform;  // the degree form the shift was built against
};

// Requires hform·a_i = 1 for every column (NoHyperplaneError otherwise).
// p_j = max(0, -min_i a_{ji}) row by row; when hform·p = -1 (which would
// collapse the shifted degree form) p is bumped by one unit in a coordinate
// hform sees.
ShiftResult shift_nonnegative(const ConfigMatrix& A, const std::vector<Rat>& hform);

// The matching parameter transport beta' = beta + (hform·beta) p; requires
// hform·beta to be an integer.
std::vector<long> shift_parameter(const ShiftResult& s, const std::vector<long>& beta);

}  // namespace ahg
