#pragma once

#include <string>
#include <vector>

namespace ahg {

// Exponent vector of a monomial; index i holds the exponent of variable i.
using ExpVec = std::vector<int>;

inline long totdeg(const ExpVec& e) {
  long s = 0;
  for (int v : e) s += v;
  return s;
}

inline bool is_zero_exp(const ExpVec& e) {
  for (int v : e)
    if (v != 0) return false;
  return true;
}

// x^a divides x^b, i.e. a <= b componentwise.
inline bool divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Componentwise difference; caller guarantees the result is nonnegative
// wherever that matters (monomial division uses divides() first).
inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// lcm(x^a, x^b) = x^max(a,b).
inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline ExpVec unit_exp(int nvars, int i) {
  ExpVec r(static_cast<std::size_t>(nvars), 0);
  r[static_cast<std::size_t>(i)] = 1;
  return r;
}

// Monomial rendering: "1" for the empty product, else "d1*d3^2" style with
// the given variable prefix and 1-based variable numbers.
std::string monomial_string(const ExpVec& e, const std::string& varprefix);

}  // namespace ahg
