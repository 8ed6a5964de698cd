#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahg/expvec.hpp"
#include "ahg/rational.hpp"
#include "ahg/term_order.hpp"

namespace ahg {

// Multivariate polynomial over the rationals, stored as a sorted term map
// (storage order is plain lexicographic on exponent vectors and independent
// of any TermOrder; leading terms are found by scanning with the order in
// hand).  Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly monomial(int nvars, const ExpVec& e, const Rat& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return t_; }

  Rat coeff(const ExpVec& e) const;
  // Adds c * x^e, erasing the term when the sum cancels.
  void add_term(const ExpVec& e, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  // this * c * x^e.
  Poly times_monomial(const ExpVec& e, const Rat& c) const;

  bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Largest term under ord; nullptr for the zero polynomial.  The pointer is
  // invalidated by any mutation.
  const std::pair<const ExpVec, Rat>* leading(const TermOrder& ord) const;
  // Max total degree over terms, -1 for zero.
  long total_degree() const;

  // Human-readable form with terms sorted descending by ord, e.g.
  // "2*d2*d3 - d1*d4" with varprefix "d".
  std::string to_string(const TermOrder& ord, const std::string& varprefix) const;

 private:
  int n_ = 0;
  std::map<ExpVec, Rat> t_;
};

// Relabels variables: exponent of old variable i moves to position perm[i].
// perm must be a permutation of 0..nvars-1.
Poly permute_vars(const Poly& p, const std::vector<int>& perm);

}  // namespace ahg
