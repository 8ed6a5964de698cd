#include <doctest.h>

#include <random>
#include <vector>

#include "ahg/buchberger.hpp"
#include "ahg/errors.hpp"
#include "ahg/poly.hpp"
#include "ahg/term_order.hpp"

using namespace ahg;

namespace {

Poly mono2(const std::vector<int>& e, const Rat& c) {
  return Poly::monomial(static_cast<int>(e.size()), e, c);
}

}  // namespace

TEST_CASE("lex and grevlex comparisons") {
  const TermOrder lex = TermOrder::lex(4);
  const TermOrder grl = TermOrder::grevlex(4);

  // lex: d1 beats any power of later variables.
  CHECK(lex.greater({1, 0, 0, 0}, {0, 5, 0, 0}));
  CHECK(lex.greater({2, 0, 0, 0}, {1, 9, 9, 9}));
  // grevlex: total degree first ...
  CHECK(grl.greater({0, 2, 0, 0}, {1, 0, 0, 0}));
  // ... then, at equal degree, the smaller exponent on the last differing
  // variable wins: d2*d3 > d1*d4.
  CHECK(grl.greater({0, 1, 1, 0}, {1, 0, 0, 1}));
  CHECK(grl.greater({1, 0, 0, 0}, {0, 1, 0, 0}));
  CHECK(grl.greater({0, 0, 1, 0}, {0, 0, 0, 1}));
  CHECK(grl.compare({1, 2, 3, 4}, {1, 2, 3, 4}) == 0);

  // Block (product) order: the leading block dominates, making it an
  // elimination order for those variables.
  const TermOrder elim = TermOrder::grevlex(2).then(TermOrder::grevlex(2));
  CHECK(elim.greater({1, 0, 0, 0}, {0, 0, 7, 7}));
  CHECK(elim.greater({0, 1, 0, 0}, {0, 0, 7, 7}));
  CHECK(elim.less({0, 0, 2, 0}, {1, 0, 0, 0}));
  // Equal leading block: the tail block decides.
  CHECK(elim.greater({1, 0, 1, 0}, {1, 0, 0, 1}));

  CHECK(TermOrder::lex(3).name() == "lex");
  CHECK(TermOrder::grevlex(3).name() == "grevlex");
  CHECK_THROWS_AS(TermOrder::named("degrevlex", 3), ParseError);
  CHECK(TermOrder::named("grevlex", 4).greater({0, 1, 1, 0}, {1, 0, 0, 1}));
}

TEST_CASE("polynomial arithmetic and printing") {
  const TermOrder grl = TermOrder::grevlex(4);
  Poly p = mono2({0, 1, 1, 0}, Rat(2)) + mono2({1, 0, 0, 1}, Rat(-1));
  CHECK(p.to_string(grl, "d") == "2*d2*d3 - d1*d4");
  CHECK(p.total_degree() == 2);
  CHECK(p.coeff({0, 1, 1, 0}) == Rat(2));
  CHECK(p.coeff({0, 0, 0, 0}).is_zero());

  Poly q = p - p;
  CHECK(q.is_zero());
  CHECK(q.to_string(grl, "d") == "0");

  // (d1 + d2)^2 = d1^2 + 2 d1 d2 + d2^2
  Poly lin = Poly::variable(4, 0) + Poly::variable(4, 1);
  Poly sq = lin * lin;
  CHECK(sq.term_count() == 3);
  CHECK(sq.coeff({1, 1, 0, 0}) == Rat(2));
  CHECK(sq.to_string(grl, "d") == "d1^2 + 2*d1*d2 + d2^2");

  // Rational coefficients and constants render with signs folded in.
  Poly r = mono2({1, 0, 0, 0}, Rat(-1, 2)) + mono2({0, 0, 0, 0}, Rat(3));
  CHECK(r.to_string(grl, "x") == "-1/2*x1 + 3");

  // times_monomial shifts exponents and scales.
  Poly t = p.times_monomial({1, 0, 0, 0}, Rat(1, 2));
  CHECK(t.coeff({1, 1, 1, 0}) == Rat(1));
  CHECK(t.coeff({2, 0, 0, 1}) == Rat(-1, 2));

  // Variable relabeling moves exponents to the permuted slots.
  std::vector<int> swap03{3, 1, 2, 0};
  Poly pp = permute_vars(p, swap03);
  CHECK(pp.coeff({0, 1, 1, 0}) == Rat(2));
  CHECK(pp.coeff({1, 0, 0, 1}) == Rat(-1));
  CHECK(permute_vars(pp, swap03) == p);

  const auto* lt = p.leading(grl);
  REQUIRE(lt != nullptr);
  CHECK(lt->first == ExpVec{0, 1, 1, 0});
  CHECK(lt->second == Rat(2));
  CHECK(Poly(4).leading(grl) == nullptr);
}

TEST_CASE("groebner basis of a zero-dimensional lex example") {
  const TermOrder lex = TermOrder::lex(2);
  // x1^2 + x2^2 - 4 and x1 x2 - 1.
  Poly f = mono2({2, 0}, Rat(1)) + mono2({0, 2}, Rat(1)) + mono2({0, 0}, Rat(-4));
  Poly g = mono2({1, 1}, Rat(1)) + mono2({0, 0}, Rat(-1));
  GroebnerBasis gb = buchberger({f, g}, lex);

  REQUIRE(gb.gens.size() == 2);
  // Descending by leading monomial: x1 + x2^3 - 4 x2 first, then
  // x2^4 - 4 x2^2 + 1.
  Poly e1 = mono2({1, 0}, Rat(1)) + mono2({0, 3}, Rat(1)) + mono2({0, 1}, Rat(-4));
  Poly e2 = mono2({0, 4}, Rat(1)) + mono2({0, 2}, Rat(-4)) + mono2({0, 0}, Rat(1));
  CHECK(gb.gens[0] == e1);
  CHECK(gb.gens[1] == e2);

  // Monomials outside the leading-term staircase: exactly 1, x2, x2^2, x2^3
  // among all monomials of degree <= 4.
  std::vector<ExpVec> standard;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      if (!reduces(gb, {a, b})) standard.push_back({a, b});
  CHECK(standard == std::vector<ExpVec>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});

  // Normal forms.
  CHECK(normal_form(Poly::variable(2, 0), gb) ==
        mono2({0, 1}, Rat(4)) + mono2({0, 3}, Rat(-1)));
  CHECK(normal_form(f, gb).is_zero());
  CHECK(normal_form(g, gb).is_zero());

  // A single already-reduced generator is its own basis.
  Poly h = mono2({1, 0}, Rat(1)) + mono2({0, 0}, Rat(-1));
  GroebnerBasis single = buchberger({h}, lex);
  REQUIRE(single.gens.size() == 1);
  CHECK(single.gens[0] == h);

  // Running the algorithm on its own output is a fixed point.
  GroebnerBasis again = buchberger(gb.gens, lex);
  CHECK(again.gens == gb.gens);
}

TEST_CASE("groebner structural invariants and membership") {
  const TermOrder lex = TermOrder::lex(2);
  Poly f = mono2({2, 0}, Rat(1)) + mono2({0, 2}, Rat(1)) + mono2({0, 0}, Rat(-4));
  Poly g = mono2({1, 1}, Rat(1)) + mono2({0, 0}, Rat(-1));
  GroebnerBasis gb = buchberger({f, g}, lex);

  // Every S-polynomial of basis elements reduces to zero.
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
      CHECK(normal_form(spoly(gb.gens[i], gb.gens[j], lex), gb).is_zero());

  // Auto-reduced: no term of one generator is divisible by the leading
  // monomial of another.
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    const auto* li = gb.gens[i].leading(lex);
    CHECK(li->second.is_one());
    for (std::size_t j = 0; j < gb.gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& [e, c] : gb.gens[j].terms()) CHECK(!divides(li->first, e));
    }
  }

  // normal_form(p*f + q*g + r) = normal_form(r) for random p, q, r.
  std::mt19937 rng(2024);
  auto random_poly = [&](int maxdeg) {
    Poly p(2);
    std::uniform_int_distribution<int> dc(-3, 3), de(0, maxdeg);
    for (int t = 0; t < 4; ++t) p.add_term({de(rng), de(rng)}, Rat(dc(rng)));
    return p;
  };
  for (int it = 0; it < 25; ++it) {
    Poly p = random_poly(2), q = random_poly(2), r = random_poly(3);
    CHECK(normal_form(p * f + q * g + r, gb) == normal_form(r, gb));
  }

  // The zero ideal has the empty basis.
  CHECK(buchberger({Poly(2)}, lex).gens.empty());
}
