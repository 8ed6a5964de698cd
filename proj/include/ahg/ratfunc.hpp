#ifndef AHG_RATFUNC_HPP
#define AHG_RATFUNC_HPP

#include <string>

#include "ahg/unipoly.hpp"

namespace ahg {

// Rational function in k over Q, kept canonical: gcd(num, den) = 1, the
// denominator is monic, and zero is 0/1.  Canonical form makes operator==
// a structural comparison.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}      // NOLINT
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}       // NOLINT
    RatFunc(const UniPoly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;

    // Evaluation at an integer shift; throws PoleError when the denominator
    // vanishes there.
    Rat eval_at(long k0) const;
    Rat eval(const Rat& x) const;

    // "(num)/den" with descending powers, e.g. "(-2*k^2-6*k-4)/1".
    std::string to_string() const;

  private:
    void normalize();
    UniPoly num_, den_;
};

}  // namespace ahg

#endif
