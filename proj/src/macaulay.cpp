#include "ahg/macaulay.hpp"

#include <algorithm>
#include <sstream>

#include "ahg/errors.hpp"

namespace ahg {

CoeffCX& CoeffCX::operator+=(const CoeffCX& o) {
  alpha += o.alpha;
  for (const auto& [j, g] : o.cs) {
    Rat& slot = cs[j];
    slot += g;
    if (slot.is_zero()) cs.erase(j);
  }
  for (const auto& [m, q] : o.xs) {
    Rat& slot = xs[m];
    slot += q;
    if (slot.is_zero()) xs.erase(m);
  }
  return *this;
}

UniPoly CoeffCX::specialize(const std::vector<Rat>& X, const std::vector<long>& base,
                            const std::vector<long>& step) const {
  Rat c0 = alpha;
  Rat c1;
  for (const auto& [j, g] : cs) {
    c0 += g * Rat(base.at(j));
    c1 += g * Rat(step.at(j));
  }
  for (const auto& [m, q] : xs) c0 += q * X.at(m);
  return UniPoly({c0, c1});
}

std::string CoeffCX::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rat& coeff, const std::string& name) {
    Rat a = coeff.abs();
    if (first) {
      if (coeff.sign() < 0) out << "-";
      first = false;
    } else {
      out << (coeff.sign() < 0 ? " - " : " + ");
    }
    if (name.empty()) {
      out << a.to_string();
    } else if (a.is_one()) {
      out << name;
    } else {
      out << a.to_string() << "*" << name;
    }
  };
  if (!alpha.is_zero()) emit(alpha, "");
  for (const auto& [j, g] : cs) emit(g, "c" + std::to_string(j + 1));
  for (const auto& [m, q] : xs) emit(q, "x" + std::to_string(m + 1));
  return out.str();
}

std::vector<ExpVec> MacaulayMatrix::columns() const {
  std::vector<ExpVec> cols = mprime;
  cols.insert(cols.end(), sbasis.begin(), sbasis.end());
  return cols;
}

OperatorRow euler_times_monomial(const ConfigMatrix& A, int j, const ExpVec& u) {
  if (j < 0 || j >= A.d) throw Error("euler_times_monomial: row index out of range");
  if (static_cast<int>(u.size()) != A.n)
    throw Error("euler_times_monomial: exponent arity mismatch");
  OperatorRow row;
  Rat diag;
  for (int k = 0; k < A.n; ++k) {
    long a = A.at(j, k);
    if (a == 0) continue;
    row[exp_add(u, unit_exp(A.n, k))].xs[k] += Rat(a);
    diag += Rat(a) * Rat(u[k]);
  }
  CoeffCX& head = row[u];
  head.alpha += diag;
  head.cs[j] += Rat(-1);
  return row;
}

OperatorRow reduce_row(const OperatorRow& row, const GroebnerBasis& G) {
  OperatorRow out;
  for (const auto& [label, coeff] : row) {
    if (coeff.is_zero()) continue;
    if (!reduces(G, label)) {
      out[label] += coeff;
      continue;
    }
    Poly nf = normal_form(Poly::monomial(static_cast<int>(label.size()), label, Rat(1)), G);
    for (const auto& [e, c] : nf.terms()) {
      CoeffCX scaled;
      scaled.alpha = coeff.alpha * c;
      for (const auto& [j, g] : coeff.cs) scaled.cs[j] = g * c;
      for (const auto& [m, q] : coeff.xs) scaled.xs[m] = q * c;
      out[e] += scaled;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

namespace {

void gen_exponents(int nvars, int pos, int remaining, ExpVec& cur,
                   std::vector<ExpVec>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    gen_exponents(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

MacaulayMatrix build_macaulay(const ConfigMatrix& A, const GroebnerBasis& G,
                              const std::vector<ExpVec>& S, int T) {
  if (S.empty()) throw BasisError("state basis is empty");
  for (const ExpVec& s : S) {
    if (static_cast<int>(s.size()) != A.n)
      throw BasisError("state basis monomial has wrong arity");
    if (reduces(G, s))
      throw BasisError("state basis monomial " + monomial_string(s, "d") +
                       " is reducible");
  }
  if (T < 0) throw Error("build_macaulay: negative degree bound");

  MacaulayMatrix F;
  F.T = T;
  F.order = G.order;
  F.sbasis = S;

  for (int deg = 0; deg <= T; ++deg) {
    std::vector<ExpVec> us;
    ExpVec cur(A.n, 0);
    gen_exponents(A.n, 0, deg, cur, us);
    for (const ExpVec& u : us)
      for (int j = 0; j < A.d; ++j)
        F.rows.push_back(reduce_row(euler_times_monomial(A, j, u), G));
  }

  std::map<ExpVec, bool> in_s;
  for (const ExpVec& s : S) in_s[s] = true;
  std::map<ExpVec, bool> seen;
  for (const OperatorRow& row : F.rows)
    for (const auto& [label, coeff] : row)
      if (!in_s.count(label)) seen[label] = true;
  F.mprime.reserve(seen.size());
  for (const auto& [label, flag] : seen) F.mprime.push_back(label);
  std::sort(F.mprime.begin(), F.mprime.end(), [&](const ExpVec& a, const ExpVec& b) {
    long da = totdeg(a), db = totdeg(b);
    if (da != db) return da > db;
    return F.order.greater(a, b);
  });
  return F;
}

namespace {

std::map<ExpVec, int> column_index(const MacaulayMatrix& F) {
  std::map<ExpVec, int> idx;
  int i = 0;
  for (const ExpVec& e : F.columns()) idx[e] = i++;
  return idx;
}

}  // namespace

Matrix<RatFunc> specialize(const MacaulayMatrix& F, const std::vector<Rat>& X,
                           const std::vector<long>& base, const std::vector<long>& step) {
  std::map<ExpVec, int> idx = column_index(F);
  Matrix<RatFunc> M(static_cast<int>(F.rows.size()), F.col_count());
  for (int r = 0; r < static_cast<int>(F.rows.size()); ++r)
    for (const auto& [label, coeff] : F.rows[r])
      M.at(r, idx.at(label)) = RatFunc(coeff.specialize(X, base, step));
  return M;
}

std::vector<PolyRow> specialize_rows(const MacaulayMatrix& F, const std::vector<Rat>& X,
                                     const std::vector<long>& base,
                                     const std::vector<long>& step) {
  std::map<ExpVec, int> idx = column_index(F);
  std::vector<PolyRow> rows;
  rows.reserve(F.rows.size());
  for (const OperatorRow& orow : F.rows) {
    PolyRow pr;
    for (const auto& [label, coeff] : orow) {
      UniPoly p = coeff.specialize(X, base, step);
      if (!p.is_zero()) pr.t.emplace_back(idx.at(label), std::move(p));
    }
    std::sort(pr.t.begin(), pr.t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    normalize_poly_row(pr);
    rows.push_back(std::move(pr));
  }
  return rows;
}

}  // namespace ahg
