#pragma once

#include <map>
#include <string>
#include <vector>

#include "ahg/buchberger.hpp"
#include "ahg/config.hpp"
#include "ahg/matrix.hpp"
#include "ahg/ratfunc.hpp"
#include "ahg/unipoly.hpp"

namespace ahg {

// Matrix entry of the operator rows: a linear form in the x-variables plus an
// affine part in the c-parameters, i.e. sum_m q_m x_m + (alpha + sum_j g_j c_j).
// This is exactly the coefficient shape produced by first-order parameter
// operators and preserved by monomial relabeling, so no arithmetic in a big
// function field is ever needed.
struct CoeffCX {
  Rat alpha;
  std::map<int, Rat> cs;  // j -> coefficient of c_j (0-based row index)
  std::map<int, Rat> xs;  // m -> coefficient of x_m (0-based column index)

  bool is_zero() const { return alpha.is_zero() && cs.empty() && xs.empty(); }
  CoeffCX& operator+=(const CoeffCX& o);
  friend bool operator==(const CoeffCX&, const CoeffCX&) = default;

  // Substitute x = X and c = base + k*step: an affine polynomial in k.
  UniPoly specialize(const std::vector<Rat>& X, const std::vector<long>& base,
                     const std::vector<long>& step) const;

  // "1-c1", "x2", "2*x3 - c2" style rendering; constant part first, then
  // c-terms, then x-terms.
  std::string to_string() const;
};

// One operator row: column label (a monomial in the d-variables) -> entry.
using OperatorRow = std::map<ExpVec, CoeffCX>;

// The assembled degree-T matrix: every row is the relabeled expansion of
// d^u (E_j - c_j) for |u| <= T, columns split into the working block M'
// (sorted by total degree descending, then the ambient order descending)
// followed by the state basis S in its given order.
struct MacaulayMatrix {
  std::vector<OperatorRow> rows;
  std::vector<ExpVec> mprime;
  std::vector<ExpVec> sbasis;
  int T = 0;
  TermOrder order;

  std::vector<ExpVec> columns() const;
  int col_count() const { return static_cast<int>(mprime.size() + sbasis.size()); }
};

// Normally ordered expansion of d^u (E_j - c_j) where E_j is the j-th
// parameter operator sum_k a_jk x_k d_k:
//   d^u (E_j - c_j) = sum_k a_jk x_k d^(u+e_k) + ((sum_k a_jk u_k) - c_j) d^u.
OperatorRow euler_times_monomial(const ConfigMatrix& A, int j, const ExpVec& u);

// Relabel every reducible column monomial by its normal form under the
// (binomial) basis G, carrying coefficients over unchanged and merging
// collisions.
OperatorRow reduce_row(const OperatorRow& row, const GroebnerBasis& G);

// Rows for all j = 1..d and |u| <= T (u ordered by degree, then
// lexicographically; j fastest), reduced by G.  Throws BasisError when some
// s in S is reducible by G.  S columns are always part of the column set.
MacaulayMatrix build_macaulay(const ConfigMatrix& A, const GroebnerBasis& G,
                              const std::vector<ExpVec>& S, int T);

// Substitute x = X, c = base + k*step in every entry; columns keep the
// MacaulayMatrix order.  Entries are affine in k.
Matrix<RatFunc> specialize(const MacaulayMatrix& F, const std::vector<Rat>& X,
                           const std::vector<long>& base, const std::vector<long>& step);

// Same substitution in sparse row form, for the elimination engine.
std::vector<PolyRow> specialize_rows(const MacaulayMatrix& F, const std::vector<Rat>& X,
                                     const std::vector<long>& base,
                                     const std::vector<long>& step);

}  // namespace ahg
