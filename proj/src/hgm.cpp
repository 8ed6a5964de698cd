#include "ahg/hgm.hpp"

#include <algorithm>

#include "ahg/errors.hpp"
#include "ahg/matrix.hpp"

namespace ahg {

StateVector hgm_eval(const ConfigMatrix& A, const EvalPlan& plan) {
  validate_basis_shape(plan.S, A.n);
  if (static_cast<int>(plan.beta0.size()) != A.d)
    throw Error("hgm_eval: beta0 has wrong length");
  if (static_cast<int>(plan.X.size()) != A.n) throw Error("hgm_eval: X has wrong length");

  StateVector Y = oracle_vector(A, plan.S, plan.beta0, plan.X);
  for (const Leg& leg : plan.legs) {
    if (static_cast<int>(leg.H.size()) != A.d)
      throw Error("hgm_eval: leg direction has wrong length");
    if (leg.m < 0) throw Error("hgm_eval: negative leg length");
    if (leg.m == 0) continue;
    RecurrenceMatrix R = extract_recurrence(A, plan.S, Y.beta, plan.X, leg.H);
    for (long k = 1; k <= leg.m; ++k) {
      Matrix<Rat> M;
      try {
        M = eval_recurrence(R, k);
      } catch (const PoleError&) {
        throw SingularStepError(k);
      }
      Matrix<Rat> inv;
      try {
        inv = invert(M);
      } catch (const SingularMatrixError&) {
        throw SingularStepError(k);
      }
      Y.y = inv * Y.y;
    }
    for (int j = 0; j < A.d; ++j) Y.beta[j] += leg.m * leg.H[j];
  }
  return Y;
}

Rat expectation(const ConfigMatrix& A, const StateVector& Y, int i) {
  validate_basis_shape(Y.S, A.n);
  if (i < 0 || i >= A.n) throw Error("expectation: column index out of range");
  if (Y.y.size() != Y.S.size()) throw Error("expectation: state vector shape mismatch");
  const Rat& Z = Y.y[0];
  if (Z.is_zero()) throw ZeroNormalizerError();

  ExpVec ei = unit_exp(A.n, i);
  auto hit = std::find(Y.S.begin(), Y.S.end(), ei);
  if (hit != Y.S.end()) {
    std::size_t l = static_cast<std::size_t>(hit - Y.S.begin());
    return Y.X[i] * Y.y[l] / Z;
  }
  RecurrenceMatrix P = pfaffian_matrix(A, Y.S, Y.beta, Y.X, i);
  Matrix<Rat> M = eval_recurrence(P, 0);
  Rat di;
  for (std::size_t l = 0; l < Y.y.size(); ++l) di += M.at(0, l) * Y.y[l];
  return Y.X[i] * di / Z;
}

ShiftResult shift_nonnegative(const ConfigMatrix& A, const std::vector<Rat>& hform) {
  if (static_cast<int>(hform.size()) != A.d)
    throw Error("shift_nonnegative: linear form has wrong length");
  for (int i = 0; i < A.n; ++i) {
    Rat v;
    for (int j = 0; j < A.d; ++j) v += hform[j] * Rat(A.at(j, i));
    if (!(v == Rat(1)))
      throw NoHyperplaneError("linear form is not 1 on column " + std::to_string(i + 1));
  }

  std::vector<long> p(A.d, 0);
  for (int j = 0; j < A.d; ++j) {
    long lo = 0;
    for (int i = 0; i < A.n; ++i) lo = std::min(lo, A.at(j, i));
    p[j] = -lo;
  }
  Rat hp;
  for (int j = 0; j < A.d; ++j) hp += hform[j] * Rat(p[j]);
  if (hp == Rat(-1)) {
    for (int j = 0; j < A.d; ++j) {
      if (!hform[j].is_zero()) {
        p[j] += 1;
        break;
      }
    }
  }

  ConfigMatrix Ap = A;
  for (int j = 0; j < A.d; ++j)
    for (int i = 0; i < A.n; ++i) Ap.at(j, i) += p[j];
  return ShiftResult{Ap, p, hform};
}

std::vector<long> shift_parameter(const ShiftResult& s, const std::vector<long>& beta) {
  if (beta.size() != s.p.size()) throw Error("shift_parameter: beta has wrong length");
  Rat t;
  for (std::size_t j = 0; j < beta.size(); ++j) t += s.hform[j] * Rat(beta[j]);
  if (!t.is_integer())
    throw Error("shift_parameter: degree of beta under the form is not an integer");
  if (!t.num().fits_slong_p()) throw Error("shift_parameter: degree out of range");
  long deg = t.num().get_si();
  std::vector<long> out = beta;
  for (std::size_t j = 0; j < beta.size(); ++j) out[j] += deg * s.p[j];
  return out;
}

}  // namespace ahg
