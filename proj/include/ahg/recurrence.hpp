#pragma once

#include <vector>

#include "ahg/buchberger.hpp"
#include "ahg/config.hpp"
#include "ahg/matrix.hpp"

namespace ahg {

// Smallest-weight h in N_0^n with A h = H (weight w·h, default w = all ones),
// ties broken to the lexicographically greatest minimizer so the choice is
// deterministic.  Throws NotInSemigroupError when H has no nonnegative
// preimage.
ExpVec decompose_direction(const ConfigMatrix& A, const std::vector<long>& H,
                           const std::vector<long>& weight = {});

// Square step matrix over Q(k) for the state basis S along direction H from
// base beta:
//
//   (S • Z)(beta + (k-1) H)  =  R(k) · (S • Z)(beta + k H)
//
// where (S • Z)(c) stacks (s_j applied to Z)(c) over the basis monomials s_j.
struct RecurrenceMatrix {
  Matrix<RatFunc> R;
  std::vector<ExpVec> S;
  std::vector<long> beta;  // base point of the parameter line
  std::vector<long> H;     // line direction (beta + k H)
  std::vector<Rat> X;
  int T_used = 0;  // degree bound at which the extraction closed
};

// Core extraction.  The shifted basis d^h · s_j at the parameter line
// base + k*D is rewritten over S at the same parameter: rows of the
// degree-T operator matrix are specialized along the line, brought to
// reduced echelon form over Q(k), and the pivot rows of the shifted-basis
// columns are read off. The degree bound starts at
// max_j totaldeg(NF(d^h s_j)) and is raised on failure up to a hard cap of
// 12, after which GenericityError is thrown.  D = H with
// h = decompose_direction(A, H) gives a plain direction recurrence; D = a_i
// with h = e_i gives the single-column step matrix.
// `min_T` forces the starting bound at least that high (used to check that a
// larger matrix extracts the same step).
RecurrenceMatrix extract_step(const ConfigMatrix& A, const GroebnerBasis& G,
                              const std::vector<ExpVec>& S, const std::vector<long>& base,
                              const std::vector<Rat>& X, const std::vector<long>& D,
                              const ExpVec& h, int min_T = 0);

RecurrenceMatrix extract_recurrence(const ConfigMatrix& A, const std::vector<ExpVec>& S,
                                    const std::vector<long>& beta, const std::vector<Rat>& X,
                                    const std::vector<long>& H);

// Step matrix for single column i (0-based): along the line beta + k a_i,
//   (S • Z)(beta + (k-1) a_i) = P(k) · (S • Z)(beta + k a_i),
// so P(0) maps the state at beta to the state at beta - a_i.
RecurrenceMatrix pfaffian_matrix(const ConfigMatrix& A, const std::vector<ExpVec>& S,
                                 const std::vector<long>& beta, const std::vector<Rat>& X,
                                 int i);

// All entries evaluated at integer k; throws PoleError when a denominator
// vanishes there.
Matrix<Rat> eval_recurrence(const RecurrenceMatrix& R, long k);

// One leg of a parameter descent: `mult` steps down column `column` (0-based).
struct PathStep {
  int column = 0;
  long mult = 0;
  bool operator==(const PathStep& o) const { return column == o.column && mult == o.mult; }
};

struct Path {
  std::vector<PathStep> steps;
  std::vector<long> endpoint;
};

// Greedy descent from beta toward the origin: express beta as a nonnegative
// column combination, then repeatedly take the largest budgeted multiple
// m of a single column i such that beta - gamma_s - l*a_i stays in the
// semigroup for every s in S and every 1 <= l <= m (gamma_s = A * exponent
// of s); ties prefer the smallest column index.  Stops when no column
// admits a step; the endpoint is the remaining parameter.
Path find_path(const ConfigMatrix& A, const std::vector<long>& beta,
               const std::vector<ExpVec>& S);

}  // namespace ahg
