#ifndef AHG_RATIONAL_HPP
#define AHG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ahg/errors.hpp"

namespace ahg {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator (zero is 0/1).  Thin value wrapper around GMP's mpq.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p" or "p/q" in base 10.  Throws ParseError on malformed input.
    static Rat from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat pow(unsigned long e) const;

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class v_;
};

// n! as an exact integer.
mpz_class factorial(unsigned long n);

// gcd of two nonnegative integers (helper re-exported for callers without gmpxx fluency).
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

// Rounded scientific-notation rendering with `digits` significant digits,
// e.g. 3.38306e-16.  Exact halves round away from zero.
std::string decimal_string(const Rat& r, int digits = 6);

}  // namespace ahg

#endif
