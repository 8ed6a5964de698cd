#include "ahg/buchberger.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace ahg {

Poly normal_form(const Poly& p, const std::vector<Poly>& G, const TermOrder& ord) {
  // Leading data of G is looked up repeatedly; cache it once.
  std::vector<const std::pair<const ExpVec, Rat>*> lead(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) lead[i] = G[i].leading(ord);

  Poly rem(p.nvars());
  Poly work = p;
  while (!work.is_zero()) {
    const auto* lt = work.leading(ord);
    const ExpVec e = lt->first;
    const Rat c = lt->second;
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!lead[i]) continue;
      if (divides(lead[i]->first, e)) {
        work = work - G[i].times_monomial(exp_sub(e, lead[i]->first), c / lead[i]->second);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(e, c);
      work.add_term(e, -c);
    }
  }
  return rem;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.gens, gb.order);
}

bool reduces(const GroebnerBasis& gb, const ExpVec& e) {
  for (const Poly& g : gb.gens) {
    const auto* lt = g.leading(gb.order);
    if (lt && divides(lt->first, e)) return true;
  }
  return false;
}

Poly spoly(const Poly& f, const Poly& g, const TermOrder& ord) {
  const auto* lf = f.leading(ord);
  const auto* lg = g.leading(ord);
  const ExpVec l = exp_lcm(lf->first, lg->first);
  return f.times_monomial(exp_sub(l, lf->first), Rat(1) / lf->second) -
         g.times_monomial(exp_sub(l, lg->first), Rat(1) / lg->second);
}

namespace {

// Minimalize (drop generators whose leading monomial is divisible by
// another's), then inter-reduce tails and sort descending by leading
// monomial.  Leading monomials never change during tail reduction, so one
// full pass leaves every generator reduced against all the others.
std::vector<Poly> reduce_basis(std::vector<Poly> G, const TermOrder& ord) {
  std::vector<ExpVec> le(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) le[i] = G[i].leading(ord)->first;

  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(le[j], le[i]) && !(le[i] == le[j] && j > i)) keep[i] = false;
    }
  }
  std::vector<Poly> M;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(std::move(G[i]));

  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(M.size() - 1);
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    Poly r = normal_form(M[i], others, ord);
    M[i] = r.scaled(Rat(1) / r.leading(ord)->second);
  }

  std::sort(M.begin(), M.end(), [&](const Poly& a, const Poly& b) {
    return ord.greater(a.leading(ord)->first, b.leading(ord)->first);
  });
  return M;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const TermOrder& order) {
  std::vector<Poly> G;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(g.scaled(Rat(1) / g.leading(order)->second));
  }
  if (G.empty()) return {order, {}};

  std::vector<ExpVec> le;
  le.reserve(G.size());
  for (const Poly& g : G) le.push_back(g.leading(order)->first);

  // Pending S-pairs keyed by (total degree of the lcm, i, j) so the smallest
  // lcm is always processed next; `pending` mirrors the queue for the chain
  // criterion's membership tests.
  std::set<std::tuple<long, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    queue.emplace(totdeg(exp_lcm(le[i], le[j])), i, j);
    pending.emplace(i, j);
  };
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});

    const ExpVec l = exp_lcm(le[i], le[j]);
    // Product criterion: coprime leading monomials reduce to zero.
    if (l == exp_add(le[i], le[j])) continue;
    // Chain criterion: a third generator dividing the lcm whose pairs with i
    // and j are both already handled makes this pair redundant.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!divides(le[k], l)) continue;
      const auto pik = std::minmax(i, k);
      const auto pjk = std::minmax(j, k);
      if (!pending.count({pik.first, pik.second}) && !pending.count({pjk.first, pjk.second}))
        skip = true;
    }
    if (skip) continue;

    Poly r = normal_form(spoly(G[i], G[j], order), G, order);
    if (r.is_zero()) continue;
    r = r.scaled(Rat(1) / r.leading(order)->second);
    G.push_back(std::move(r));
    le.push_back(G.back().leading(order)->first);
    for (std::size_t t = 0; t + 1 < G.size(); ++t) push_pair(t, G.size() - 1);
  }

  return {order, reduce_basis(std::move(G), order)};
}

}  // namespace ahg
