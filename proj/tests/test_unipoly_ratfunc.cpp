#include <doctest.h>

#include <random>

#include "ahg/ratfunc.hpp"

using namespace ahg;

namespace {
UniPoly P(std::initializer_list<long> asc) {
    std::vector<Rat> c;
    for (long x : asc) c.emplace_back(x);
    return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("polynomial basics") {
    CHECK(UniPoly().is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(P({0}).is_zero());
    CHECK(P({-4, -6, -2}).degree() == 2);
    CHECK(P({1, 2}) + P({1, -2}) == P({2}));
    CHECK(P({0, 1}) * P({0, 1}) == P({0, 0, 1}));
    CHECK((P({1, 1}) * P({2, 1})).coeffs() == std::vector<Rat>{2, 3, 1});
    CHECK(P({-4, -6, -2}).eval(Rat(1)) == Rat(-12));
    CHECK(P({-4, -6, -2}).eval(Rat(0)) == Rat(-4));
}

TEST_CASE("polynomial division and gcd") {
    UniPoly a = P({-1, 0, 1});  // k^2 - 1
    UniPoly b = P({1, 1});      // k + 1
    auto [q, r] = a.divmod(b);
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(a.exact_div(b) == P({-1, 1}));
    CHECK_THROWS_AS(P({1, 0, 1}).exact_div(b), Error);
    CHECK(gcd(a, b) == P({1, 1}));
    CHECK(gcd(P({0, 2}), P({0, 0, 3})) == P({0, 1}));
    CHECK(gcd(a, P({7})) == P({1}));
    CHECK(gcd(UniPoly(), a) == P({-1, 0, 1}).monic());
}

TEST_CASE("content and primitive scaling") {
    UniPoly p = P({6, 9});  // content 3
    CHECK(p.rational_content() == Rat(3));
    UniPoly q(std::vector<Rat>{Rat(1, 2), Rat(3, 4)});
    CHECK(q.rational_content() == Rat(1, 4));
    CHECK(UniPoly().rational_content() == Rat(1));
}

TEST_CASE("polynomial strings") {
    CHECK(P({-4, -6, -2}).to_string() == "-2*k^2-6*k-4");
    CHECK(P({5, 3}).to_string() == "3*k+5");
    CHECK(P({-2, -1}).to_string(false) == "-2-k");
    CHECK(P({0, 1}).to_string() == "k");
    CHECK(UniPoly().to_string() == "0");
    CHECK(UniPoly(std::vector<Rat>{Rat(0), Rat(1, 2)}).to_string() == "1/2*k");
}

TEST_CASE("rational functions are canonical") {
    RatFunc f(P({-1, 0, 1}), P({1, 1}));  // (k^2-1)/(k+1) = k-1
    CHECK(f == RatFunc(P({-1, 1})));
    CHECK(f.is_polynomial());

    RatFunc g(P({0, 2}), P({2}));  // 2k/2 = k
    CHECK(g.num() == P({0, 1}));
    CHECK(g.den().is_one());

    RatFunc h(P({1}), P({0, 2}));  // 1/(2k) -> (1/2)/k
    CHECK(h.den() == P({0, 1}));
    CHECK(h.num() == UniPoly(Rat(1, 2)));

    CHECK(RatFunc(UniPoly(), P({3, 1})) == RatFunc(0));
    CHECK_THROWS_AS(RatFunc(P({1}), UniPoly()), Error);
}

TEST_CASE("rational function arithmetic and field identities") {
    RatFunc k(UniPoly::var());
    RatFunc one(1);
    RatFunc f = one / (k + one);            // 1/(k+1)
    RatFunc g = (k * k - one) / (k + one);  // k-1
    CHECK(g == RatFunc(P({-1, 1})));
    CHECK(f * (k + one) == one);
    CHECK(f - f == RatFunc(0));
    CHECK((f / f) == one);
    CHECK(f.inverse() * f == one);
    CHECK_THROWS_AS(RatFunc(0).inverse(), Error);

    std::mt19937 rng(7);
    auto rnd = [&]() {
        UniPoly n(std::vector<Rat>{Rat((long)(rng() % 11) - 5), Rat((long)(rng() % 7) - 3)});
        UniPoly d(std::vector<Rat>{Rat((long)(rng() % 5) + 1), Rat((long)(rng() % 3))});
        return RatFunc(n, d);
    };
    for (int i = 0; i < 50; ++i) {
        RatFunc a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
}

TEST_CASE("evaluation at integer shifts, poles reported") {
    RatFunc f(P({-4, -6, -2}));  // -2(k+1)(k+2)
    CHECK(f.eval_at(1) == Rat(-12));
    RatFunc g(P({1}), P({0, 1}));  // 1/k
    CHECK(g.eval_at(2) == Rat(1, 2));
    CHECK_THROWS_AS(g.eval_at(0), PoleError);
    try {
        g.eval_at(0);
    } catch (const PoleError& e) {
        CHECK(e.at == 0);
    }
    CHECK(g.to_string() == "(1)/k");
    CHECK(f.to_string() == "(-2*k^2-6*k-4)/1");
}
