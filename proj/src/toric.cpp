#include "ahg/toric.hpp"

#include <numeric>
#include <utility>

#include "ahg/errors.hpp"
#include "ahg/fiber.hpp"

namespace ahg {

GroebnerBasis toric_gb(const ConfigMatrix& A, const TermOrder& order) {
  if (!A.nonnegative())
    throw Error("toric_gb requires a nonnegative matrix; apply the nonnegative shift first");
  const int d = A.d, n = A.n, N = d + n;

  // Ring layout: auxiliary variables t_1..t_d first, then d_1..d_n.
  std::vector<Poly> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Poly g(N);
    g.add_term(unit_exp(N, d + i), Rat(1));
    ExpVec t(static_cast<std::size_t>(N), 0);
    for (int j = 0; j < d; ++j) t[static_cast<std::size_t>(j)] = static_cast<int>(A.at(j, i));
    g.add_term(t, Rat(-1));
    gens.push_back(std::move(g));
  }

  const TermOrder elim = TermOrder::grevlex(d).then(order);
  const GroebnerBasis full = buchberger(gens, elim);

  std::vector<Poly> eliminated;
  for (const Poly& g : full.gens) {
    bool t_free = true;
    for (const auto& [e, c] : g.terms())
      for (int j = 0; j < d && t_free; ++j)
        if (e[static_cast<std::size_t>(j)] != 0) t_free = false;
    if (!t_free) continue;
    Poly q(n);
    for (const auto& [e, c] : g.terms())
      q.add_term(ExpVec(e.begin() + d, e.end()), c);
    eliminated.push_back(std::move(q));
  }
  return buchberger(eliminated, order);
}

std::vector<std::vector<mpz_class>> integer_kernel_basis(const ConfigMatrix& A) {
  const int d = A.d, n = A.n;
  // Column reduction M = A U with U unimodular; kernel = U-columns where the
  // reduced M-column became zero.
  std::vector<std::vector<mpz_class>> M(static_cast<std::size_t>(d),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  std::vector<std::vector<mpz_class>> U(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = A.at(j, i);
  for (int i = 0; i < n; ++i) U[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d; ++j) std::swap(M[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)],
                                          M[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)]);
    for (int j = 0; j < n; ++j) std::swap(U[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)],
                                          U[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)]);
  };
  auto submul_col = [&](int dst, int src, const mpz_class& q) {
    if (q == 0) return;
    for (int j = 0; j < d; ++j)
      M[static_cast<std::size_t>(j)][static_cast<std::size_t>(dst)] -=
          q * M[static_cast<std::size_t>(j)][static_cast<std::size_t>(src)];
    for (int j = 0; j < n; ++j)
      U[static_cast<std::size_t>(j)][static_cast<std::size_t>(dst)] -=
          q * U[static_cast<std::size_t>(j)][static_cast<std::size_t>(src)];
  };

  int col = 0;
  for (int r = 0; r < d && col < n; ++r) {
    for (;;) {
      int p = -1;
      for (int c = col; c < n; ++c) {
        const mpz_class& v = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (v == 0) continue;
        if (p < 0 || cmp(abs(v), abs(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)])) < 0)
          p = c;
      }
      if (p < 0) break;  // row r has no support on the remaining columns
      swap_cols(p, col);
      bool clean = true;
      for (int c = col + 1; c < n; ++c) {
        mpz_class& v = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (v == 0) continue;
        mpz_class q = v / M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        submul_col(c, col, q);
        if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) clean = false;
      }
      if (clean) {
        ++col;
        break;
      }
    }
  }

  std::vector<std::vector<mpz_class>> kernel;
  for (int c = col; c < n; ++c) {
    std::vector<mpz_class> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = U[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
    kernel.push_back(std::move(w));
  }
  return kernel;
}

namespace {

Poly kernel_binomial(int n, const std::vector<mpz_class>& w) {
  ExpVec pos(static_cast<std::size_t>(n), 0), neg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (!w[static_cast<std::size_t>(i)].fits_sint_p())
      throw Error("kernel basis entry exceeds supported exponent range");
    const int v = static_cast<int>(w[static_cast<std::size_t>(i)].get_si());
    if (v > 0)
      pos[static_cast<std::size_t>(i)] = v;
    else
      neg[static_cast<std::size_t>(i)] = -v;
  }
  Poly g(n);
  g.add_term(pos, Rat(1));
  g.add_term(neg, Rat(-1));
  return g;
}

// Divide each basis element by the largest power of the last variable that
// divides it; with a reverse-lex basis (cheapest variable last) this yields
// generators of the ideal saturated with respect to that variable.
std::vector<Poly> saturate_last_var(const std::vector<Poly>& gens, int n) {
  const GroebnerBasis gb = buchberger(gens, TermOrder::grevlex(n));
  std::vector<Poly> out;
  for (const Poly& g : gb.gens) {
    int m = -1;
    for (const auto& [e, c] : g.terms()) {
      const int last = e[static_cast<std::size_t>(n - 1)];
      m = m < 0 ? last : std::min(m, last);
    }
    if (m <= 0) {
      out.push_back(g);
      continue;
    }
    Poly q(n);
    for (const auto& [e, c] : g.terms()) {
      ExpVec e2 = e;
      e2[static_cast<std::size_t>(n - 1)] -= m;
      q.add_term(e2, c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

GroebnerBasis lattice_gb(const ConfigMatrix& A, const TermOrder& order) {
  const int n = A.n;
  const auto kernel = integer_kernel_basis(A);
  std::vector<Poly> gens;
  gens.reserve(kernel.size());
  for (const auto& w : kernel) {
    Poly g = kernel_binomial(n, w);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  if (gens.empty()) return {order, {}};

  for (int i = 0; i < n; ++i) {
    // Swap variable i into the cheapest slot, saturate there, swap back.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(n - 1)]);
    std::vector<Poly> swapped;
    swapped.reserve(gens.size());
    for (const Poly& g : gens) swapped.push_back(permute_vars(g, perm));
    swapped = saturate_last_var(swapped, n);
    gens.clear();
    for (const Poly& g : swapped) gens.push_back(permute_vars(g, perm));
  }
  return buchberger(gens, order);
}

std::optional<ExpVec> semigroup_member(const ConfigMatrix& A, const std::vector<long>& beta,
                                       const GroebnerBasis& gb) {
  const auto u0 = first_fiber_point(A, beta);
  if (!u0) return std::nullopt;
  const Poly nf = normal_form(Poly::monomial(A.n, *u0, Rat(1)), gb);
  return nf.terms().begin()->first;
}

std::optional<ExpVec> semigroup_member(const ConfigMatrix& A, const std::vector<long>& beta) {
  return semigroup_member(A, beta, toric_gb(A, TermOrder::grevlex(A.n)));
}

}  // namespace ahg
