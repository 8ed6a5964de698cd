#include "ahg/poly.hpp"

#include <algorithm>

#include "ahg/errors.hpp"

namespace ahg {

std::string monomial_string(const ExpVec& e, const std::string& varprefix) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += varprefix + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(ExpVec(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::monomial(int nvars, const ExpVec& e, const Rat& c) {
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  return monomial(nvars, unit_exp(nvars, i), Rat(1));
}

Rat Poly::coeff(const ExpVec& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(n_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : t_) r.t_.emplace(e, k * c);
  return r;
}

Poly Poly::times_monomial(const ExpVec& e, const Rat& c) const {
  Poly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e1, c1] : t_) r.t_.emplace(exp_add(e1, e), c1 * c);
  return r;
}

const std::pair<const ExpVec, Rat>* Poly::leading(const TermOrder& ord) const {
  const std::pair<const ExpVec, Rat>* best = nullptr;
  for (const auto& term : t_)
    if (!best || ord.greater(term.first, best->first)) best = &term;
  return best;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, totdeg(e));
  return d;
}

std::string Poly::to_string(const TermOrder& ord, const std::string& varprefix) const {
  if (t_.empty()) return "0";
  std::vector<const std::pair<const ExpVec, Rat>*> ts;
  ts.reserve(t_.size());
  for (const auto& term : t_) ts.push_back(&term);
  std::sort(ts.begin(), ts.end(),
            [&](const auto* a, const auto* b) { return ord.greater(a->first, b->first); });
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Rat& c = ts[i]->second;
    const Rat a = c.abs();
    if (i == 0) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    const std::string mon = monomial_string(ts[i]->first, varprefix);
    if (mon == "1") {
      s += a.to_string();
    } else if (a.is_one()) {
      s += mon;
    } else {
      s += a.to_string() + "*" + mon;
    }
  }
  return s;
}

Poly permute_vars(const Poly& p, const std::vector<int>& perm) {
  Poly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      e2[static_cast<std::size_t>(perm[i])] = e[i];
    r.add_term(e2, c);
  }
  return r;
}

}  // namespace ahg
