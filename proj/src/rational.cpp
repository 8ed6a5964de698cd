#include "ahg/rational.hpp"

#include <cctype>
#include <ostream>

namespace ahg {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    // mpq_class accepts leading '+' but not spaces; validate shape first so we
    // can produce a useful message.
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(s)) throw ParseError("bad rational literal: \"" + s + "\"");
        return Rat(mpq_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw ParseError("bad rational literal: \"" + s + "\"");
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rat(r);  // powers of a canonical fraction stay canonical
}

std::string Rat::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string decimal_string(const Rat& r, int digits) {
    if (digits < 1) digits = 1;
    if (r.is_zero()) {
        std::string m = "0.";
        m.append(static_cast<std::size_t>(digits - 1), '0');
        return m + "e+00";
    }
    mpz_class num = ::abs(r.num()), den = r.den();
    // Find the decimal exponent: the unique e with 10^e <= num/den < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    mpz_class p10;
    auto cmp_shifted = [&](long k) {
        // compare num/den against 10^k
        if (k >= 0) {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k));
            return cmp(num, den * p10);
        }
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-k));
        return cmp(num * p10, den);
    };
    while (cmp_shifted(e) < 0) --e;
    while (cmp_shifted(e + 1) >= 0) ++e;
    // Scale to `digits` integer digits and round half away from zero.
    long shift = digits - 1 - e;
    mpz_class scaled_num = num, scaled_den = den;
    if (shift >= 0) {
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        scaled_num *= p10;
    } else {
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        scaled_den *= p10;
    }
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
    if (2 * rem >= scaled_den) ++q;
    std::string m = q.get_str();
    if (static_cast<int>(m.size()) > digits) {  // rounding carried into a new digit
        ++e;
        m.pop_back();
    }
    std::string out;
    if (r.sign() < 0) out += "-";
    out += m.substr(0, 1);
    if (digits > 1) out += "." + m.substr(1);
    out += "e";
    out += (e < 0) ? "-" : "+";
    long ea = e < 0 ? -e : e;
    std::string es = std::to_string(ea);
    if (es.size() < 2) es = "0" + es;
    return out + es;
}

}  // namespace ahg
