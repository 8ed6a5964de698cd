#include "ahg/basis.hpp"

#include <algorithm>

#include "ahg/errors.hpp"
#include "ahg/macaulay.hpp"
#include "ahg/matrix.hpp"

namespace ahg {

namespace {

// Non-pivot column monomials of the specialized degree-T matrix, restricted
// to total degree <= dcap (columns near the top degree lack their full
// complement of relation rows and would read as spuriously free).
std::vector<ExpVec> free_monomials(const ConfigMatrix& A, const GroebnerBasis& G,
                                   const std::vector<long>& beta, const std::vector<Rat>& X,
                                   const std::vector<long>& D, int T, int dcap) {
  MacaulayMatrix F = build_macaulay(A, G, {ExpVec(A.n, 0)}, T);
  PolyRref rr = rref_poly_rows(specialize_rows(F, X, beta, D), F.col_count());
  std::vector<char> pivot(F.col_count(), 0);
  for (int c : rr.pivot_cols) pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<ExpVec> cols = F.columns();
  std::vector<ExpVec> out;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (!pivot[i] && totdeg(cols[i]) <= dcap) out.push_back(cols[i]);
  return out;
}

bool contains(const std::vector<ExpVec>& S, const ExpVec& e) {
  return std::find(S.begin(), S.end(), e) != S.end();
}

// Standard monomials form an order ideal: every divisor of a member is a
// member.  A truncated or unstable snapshot violates this.
bool divisibility_closed(const std::vector<ExpVec>& S) {
  for (const ExpVec& s : S)
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) continue;
      ExpVec t = s;
      --t[i];
      if (!contains(S, t)) return false;
    }
  return true;
}

}  // namespace

std::vector<ExpVec> discover_basis(const ConfigMatrix& A, const GroebnerBasis& G,
                                   const std::vector<long>& beta, const std::vector<Rat>& X,
                                   const std::vector<long>& D, int max_T) {
  std::vector<ExpVec> prev;
  bool have_prev = false;
  for (int T = 1; T <= max_T; ++T) {
    std::vector<ExpVec> cur = free_monomials(A, G, beta, X, D, T, T - 1);
    if (have_prev && !prev.empty() && prev.size() == cur.size() &&
        std::is_permutation(prev.begin(), prev.end(), cur.begin()) &&
        contains(cur, ExpVec(A.n, 0)) && divisibility_closed(cur)) {
      std::sort(cur.begin(), cur.end(), [](const ExpVec& a, const ExpVec& b) {
        if (totdeg(a) != totdeg(b)) return totdeg(a) < totdeg(b);
        return b < a;  // within a degree: earlier variables first ("d5" before "d8")
      });
      return cur;
    }
    prev = std::move(cur);
    have_prev = true;
  }
  throw GenericityError("discover_basis: no stable standard-monomial basis up to degree " +
                        std::to_string(max_T));
}

}  // namespace ahg
