#include "ahg/recurrence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ahg/errors.hpp"
#include "ahg/fiber.hpp"
#include "ahg/macaulay.hpp"
#include "ahg/toric.hpp"

namespace ahg {

namespace {

constexpr int kDegreeCap = 12;

// NF(d^e) under a toric basis is a single monomial with coefficient one.
ExpVec reduced_label(const ExpVec& e, const GroebnerBasis& G) {
  if (!reduces(G, e)) return e;
  Poly nf = normal_form(Poly::monomial(static_cast<int>(e.size()), e, Rat(1)), G);
  if (nf.term_count() != 1 || !nf.terms().begin()->second.is_one())
    throw Error("reduced_label: normal form of a monomial is not a monomial");
  return nf.terms().begin()->first;
}

}  // namespace

ExpVec decompose_direction(const ConfigMatrix& A, const std::vector<long>& H,
                           const std::vector<long>& weight) {
  if (static_cast<int>(H.size()) != A.d)
    throw Error("decompose_direction: direction has wrong length");
  std::vector<long> w = weight;
  if (w.empty()) w.assign(A.n, 1);
  if (static_cast<int>(w.size()) != A.n)
    throw Error("decompose_direction: weight has wrong length");

  std::vector<ExpVec> fiber = enumerate_fiber(A, H);
  if (fiber.empty())
    throw NotInSemigroupError("direction is not a nonnegative column combination");

  const ExpVec* best = nullptr;
  long best_w = 0;
  for (const ExpVec& h : fiber) {
    long wh = 0;
    for (int i = 0; i < A.n; ++i) wh += w[i] * h[i];
    if (best == nullptr || wh < best_w || (wh == best_w && h > *best)) {
      best = &h;
      best_w = wh;
    }
  }
  return *best;
}

RecurrenceMatrix extract_step(const ConfigMatrix& A, const GroebnerBasis& G,
                              const std::vector<ExpVec>& S, const std::vector<long>& base,
                              const std::vector<Rat>& X, const std::vector<long>& D,
                              const ExpVec& h, int min_T) {
  if (static_cast<int>(base.size()) != A.d || static_cast<int>(D.size()) != A.d)
    throw Error("extract_step: parameter vector has wrong length");
  if (static_cast<int>(X.size()) != A.n) throw Error("extract_step: X has wrong length");
  if (static_cast<int>(h.size()) != A.n) throw Error("extract_step: shift has wrong arity");

  const int r = static_cast<int>(S.size());
  RecurrenceMatrix out;
  out.S = S;
  out.beta = base;
  out.H = D;
  out.X = X;

  std::map<ExpVec, int> sidx;
  for (int j = 0; j < r; ++j) {
    if (sidx.count(S[j])) throw BasisError("state basis has a repeated monomial");
    sidx[S[j]] = j;
  }

  // Shifted basis labels s'_j = NF(d^h s_j).
  std::vector<ExpVec> shifted(r);
  long t0 = 0;
  bool all_in_s = true;
  for (int j = 0; j < r; ++j) {
    if (reduces(G, S[j]))
      throw BasisError("state basis monomial " + monomial_string(S[j], "d") +
                       " is reducible");
    shifted[j] = reduced_label(exp_add(S[j], h), G);
    t0 = std::max(t0, totdeg(shifted[j]));
    if (!sidx.count(shifted[j])) all_in_s = false;
  }

  if (all_in_s) {
    // Pure relabeling: every shifted basis element is again a basis element.
    out.R = Matrix<RatFunc>(r, r);
    for (int j = 0; j < r; ++j) out.R.at(j, sidx.at(shifted[j])) = RatFunc(1);
    out.T_used = 0;
    return out;
  }

  for (int T = std::max(static_cast<int>(t0), min_T); T <= kDegreeCap; ++T) {
    MacaulayMatrix F = build_macaulay(A, G, S, T);
    const int m = static_cast<int>(F.mprime.size());
    std::map<ExpVec, int> colidx;
    {
      int c = 0;
      for (const ExpVec& e : F.columns()) colidx[e] = c++;
    }
    PolyRref rr = rref_poly_rows(specialize_rows(F, X, base, D), F.col_count());
    std::vector<int> pivot_row(F.col_count(), -1);
    for (int i = 0; i < static_cast<int>(rr.pivot_cols.size()); ++i)
      pivot_row[rr.pivot_cols[i]] = i;

    Matrix<RatFunc> R(r, r);
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      auto hit = sidx.find(shifted[j]);
      if (hit != sidx.end()) {
        R.at(j, hit->second) = RatFunc(1);
        continue;
      }
      auto cit = colidx.find(shifted[j]);
      if (cit == colidx.end() || pivot_row[cit->second] < 0) {
        ok = false;  // target label not yet expressible at this degree
        break;
      }
      const PolyRow& row = rr.rows[pivot_row[cit->second]];
      const UniPoly& pivot = row.t.front().second;
      for (std::size_t p = 1; p < row.t.size(); ++p) {
        int col = row.t[p].first;
        if (col < m) {
          ok = false;  // support escapes the state basis
          break;
        }
        R.at(j, col - m) = RatFunc(-row.t[p].second, pivot);
      }
    }
    if (ok) {
      out.R = std::move(R);
      out.T_used = T;
      return out;
    }
  }
  throw GenericityError(
      "step extraction did not close over the state basis up to degree " +
      std::to_string(kDegreeCap));
}

RecurrenceMatrix extract_recurrence(const ConfigMatrix& A, const std::vector<ExpVec>& S,
                                    const std::vector<long>& beta, const std::vector<Rat>& X,
                                    const std::vector<long>& H) {
  GroebnerBasis G = toric_gb(A, TermOrder::grevlex(A.n));
  ExpVec h = decompose_direction(A, H);
  return extract_step(A, G, S, beta, X, H, h);
}

RecurrenceMatrix pfaffian_matrix(const ConfigMatrix& A, const std::vector<ExpVec>& S,
                                 const std::vector<long>& beta, const std::vector<Rat>& X,
                                 int i) {
  if (i < 0 || i >= A.n) throw Error("pfaffian_matrix: column index out of range");
  GroebnerBasis G = toric_gb(A, TermOrder::grevlex(A.n));
  return extract_step(A, G, S, beta, X, A.column(i), unit_exp(A.n, i));
}

Matrix<Rat> eval_recurrence(const RecurrenceMatrix& R, long k) {
  Matrix<Rat> M(R.R.rows, R.R.cols);
  for (std::size_t i = 0; i < R.R.rows; ++i)
    for (std::size_t j = 0; j < R.R.cols; ++j) M.at(i, j) = R.R.at(i, j).eval_at(k);
  return M;
}

Path find_path(const ConfigMatrix& A, const std::vector<long>& beta,
               const std::vector<ExpVec>& S) {
  if (static_cast<int>(beta.size()) != A.d) throw Error("find_path: beta has wrong length");
  GroebnerBasis G = toric_gb(A, TermOrder::grevlex(A.n));
  std::optional<ExpVec> u0 = semigroup_member(A, beta, G);
  if (!u0) throw NotInSemigroupError("parameter is not a nonnegative column combination");

  std::vector<std::vector<long>> gammas;
  gammas.reserve(S.size());
  for (const ExpVec& s : S) {
    if (static_cast<int>(s.size()) != A.n)
      throw BasisError("state basis monomial has wrong arity");
    gammas.push_back(A.apply(s));
  }

  std::vector<long> budget(u0->begin(), u0->end());
  std::vector<long> cur = beta;
  Path path;
  for (;;) {
    int best_i = -1;
    long best_m = 0;
    for (int i = 0; i < A.n; ++i) {
      if (budget[i] == 0) continue;
      std::vector<long> col = A.column(i);
      long msteps = 0;
      while (msteps < budget[i]) {
        bool all_ok = true;
        for (const std::vector<long>& g : gammas) {
          std::vector<long> target(A.d);
          for (int jj = 0; jj < A.d; ++jj)
            target[jj] = cur[jj] - g[jj] - (msteps + 1) * col[jj];
          if (!first_fiber_point(A, target)) {
            all_ok = false;
            break;
          }
        }
        if (!all_ok) break;
        ++msteps;
      }
      if (msteps > best_m) {
        best_m = msteps;
        best_i = i;
      }
    }
    if (best_m == 0) break;
    path.steps.push_back({best_i, best_m});
    budget[best_i] -= best_m;
    std::vector<long> col = A.column(best_i);
    for (int jj = 0; jj < A.d; ++jj) cur[jj] -= best_m * col[jj];
  }
  path.endpoint = cur;
  return path;
}

}  // namespace ahg
