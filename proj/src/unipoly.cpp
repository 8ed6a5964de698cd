#include "ahg/unipoly.hpp"

#include <sstream>

namespace ahg {

UniPoly::UniPoly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t e) {
    UniPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(e + 1, Rat(0));
    p.c_[e] = c;
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UniPoly::leading_coeff() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Rat& s) const {
    UniPoly r(*this);
    r.scale(s);
    return r;
}

void UniPoly::scale(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return;
    }
    for (auto& x : c_) x *= s;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    UniPoly q, r(*this);
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rat(0));
    Rat inv = d.leading_coeff().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        Rat f = r.leading_coeff() * inv;
        q.c_[shift] = f;
        // r -= f * k^shift * d
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            r.c_[shift + i] -= f * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rat UniPoly::rational_content() const {
    if (is_zero()) return Rat(1);
    mpz_class g(0), l(1);
    for (const auto& x : c_) {
        if (x.is_zero()) continue;
        g = ahg::gcd(g, x.num());
        l = ahg::lcm(l, x.den());
    }
    return Rat(g, l);
}

std::string UniPoly::to_string(bool descending, const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](std::size_t e) {
        const Rat& c = c_[e];
        if (c.is_zero()) return;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        Rat a = c.abs();
        if (e == 0) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << var;
            if (e > 1) os << "^" << e;
        }
        first = false;
    };
    if (descending) {
        for (std::size_t e = c_.size(); e-- > 0;) emit(e);
    } else {
        for (std::size_t e = 0; e < c_.size(); ++e) emit(e);
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    if (x.is_zero()) return y.monic();
    if (y.is_zero()) return x.monic();
    // Euclid with monic remainders to keep coefficients small.
    x = x.monic();
    y = y.monic();
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x;
}

}  // namespace ahg
