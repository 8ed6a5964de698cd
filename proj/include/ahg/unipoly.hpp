#ifndef AHG_UNIPOLY_HPP
#define AHG_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ahg/rational.hpp"

namespace ahg {

// Univariate polynomial over Rat in the shift variable k.  Coefficients are
// stored lowest degree first with no trailing zeros; the zero polynomial has
// an empty coefficient vector.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
    UniPoly(long c) : UniPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<Rat> coeffs);

    // The monomial c * k^e.
    static UniPoly monomial(const Rat& c, std::size_t e);
    static UniPoly var() { return monomial(Rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t e) const { return e < c_.size() ? c_[e] : Rat(0); }
    const Rat& leading_coeff() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const Rat& s) const;
    void scale(const Rat& s);

    // Euclidean division by a nonzero divisor: returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Division known to be exact; throws Error if a remainder appears.
    UniPoly exact_div(const UniPoly& d) const;

    UniPoly monic() const;
    Rat eval(const Rat& x) const;

    // Positive rational c such that (1/c) * this has coprime integer
    // coefficients; content of the zero polynomial is 1.
    Rat rational_content() const;

    // Human form, e.g. "-2*k^2-6*k-4" (descending) or "-4-6*k-2*k^2" (ascending).
    std::string to_string(bool descending = true, const std::string& var = "k") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Monic gcd (gcd of zero polynomials is zero; gcd with a constant is 1).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace ahg

#endif
