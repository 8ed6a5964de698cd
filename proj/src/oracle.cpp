#include "ahg/oracle.hpp"

#include "ahg/errors.hpp"

namespace ahg {

void validate_basis_shape(const std::vector<ExpVec>& S, int n) {
  if (S.empty()) throw BasisError("basis S must be nonempty");
  for (const ExpVec& s : S)
    if (static_cast<int>(s.size()) != n)
      throw BasisError("basis monomial has wrong number of variables");
  if (!is_zero_exp(S[0]))
    throw BasisError("basis S must start with the constant monomial 1");
}

StateVector oracle_vector(const ConfigMatrix& A, const std::vector<ExpVec>& S,
                          const std::vector<long>& beta, const std::vector<Rat>& X) {
  validate_basis_shape(S, A.n);
  StateVector sv{S, std::vector<Rat>(S.size(), Rat(0)), beta, X};
  fiber_scan(A, beta, [&](const ExpVec& u) {
    for (std::size_t idx = 0; idx < S.size(); ++idx) {
      const ExpVec& v = S[idx];
      if (!divides(v, u)) continue;
      Rat term(1);
      for (std::size_t i = 0; i < u.size() && !term.is_zero(); ++i) {
        const int w = u[i] - v[i];
        if (w > 0)
          term *= X[i].pow(static_cast<unsigned long>(w)) /
                  Rat(factorial(static_cast<unsigned long>(w)));
      }
      sv.y[idx] += term;
    }
  });
  return sv;
}

}  // namespace ahg
