#include "ahg/ratfunc.hpp"

namespace ahg {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rat(1));
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rat lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rat inv = lc.inverse();
        num_.scale(inv);
        den_.scale(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

Rat RatFunc::eval_at(long k0) const {
    Rat x(k0);
    Rat d = den_.eval(x);
    if (d.is_zero()) throw PoleError(k0);
    return num_.eval(x) / d;
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero()) throw Error("pole at k = " + x.to_string());
    return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
    return "(" + num_.to_string() + ")/" + den_.to_string();
}

}  // namespace ahg
