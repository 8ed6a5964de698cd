#include <doctest.h>

#include <vector>

#include "ahg/errors.hpp"
#include "ahg/fiber.hpp"
#include "ahg/oracle.hpp"
#include "ahg/recurrence.hpp"
#include "ahg/toric.hpp"

using namespace ahg;

namespace {

const ConfigMatrix kA34 = ConfigMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
const ConfigMatrix kA48 = ConfigMatrix::from_rows({{1, 1, 1, 1, 1, 1, 1, 1},
                                                   {0, 1, 0, 0, 1, 1, 0, 1},
                                                   {0, 0, 1, 0, 1, 0, 1, 1},
                                                   {0, 0, 0, 1, 0, 1, 1, 1}});
const std::vector<long> kBeta34{3, 2, 1};
const std::vector<Rat> kX34{Rat(1), Rat(1), Rat(1, 2), Rat(1)};
const std::vector<long> kH111{1, 1, 1};

ExpVec E(std::initializer_list<int> v) { return ExpVec(v); }

std::vector<ExpVec> basis34() { return {E({0, 0, 0, 0}), E({0, 0, 0, 1})}; }

std::vector<long> shifted_beta(const std::vector<long>& beta, const std::vector<long>& H,
                               long k) {
  std::vector<long> out = beta;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += k * H[j];
  return out;
}

}  // namespace

TEST_CASE("direction decomposition") {
  SUBCASE("unique preimage") {
    CHECK(decompose_direction(kA34, {1, 1, 1}) == E({0, 0, 0, 1}));
  }
  SUBCASE("columns decompose to their own unit vector") {
    for (int i = 0; i < 4; ++i)
      CHECK(decompose_direction(kA34, kA34.column(i)) == unit_exp(4, i));
    for (int i = 0; i < 8; ++i)
      CHECK(decompose_direction(kA48, kA48.column(i)) == unit_exp(8, i));
  }
  SUBCASE("minimal weight, ties to the lexicographically greatest") {
    // (3,1,1,1) has five weight-3 preimages (2 a_1 + a_8, a_1 + a_2 + a_7, ...,
    // a_2 + a_3 + a_4); the lexicographically greatest exponent wins.
    CHECK(decompose_direction(kA48, {3, 1, 1, 1}) == E({2, 0, 0, 0, 0, 0, 0, 1}));
  }
  SUBCASE("weights steer the choice") {
    // Penalizing column 1 makes the only a_1-free preimage, a_2 + a_3 + a_4, win.
    CHECK(decompose_direction(kA48, {3, 1, 1, 1}, {5, 1, 1, 1, 1, 1, 1, 1}) ==
          E({0, 1, 1, 1, 0, 0, 0, 0}));
  }
  SUBCASE("zero direction decomposes trivially") {
    CHECK(decompose_direction(kA34, {0, 0, 0}) == E({0, 0, 0, 0}));
  }
  SUBCASE("unreachable directions throw") {
    CHECK_THROWS_AS(decompose_direction(kA34, {0, 1, 0}), NotInSemigroupError);
    CHECK_THROWS_AS(decompose_direction(kA34, {-1, 0, 0}), NotInSemigroupError);
  }
}

TEST_CASE("step matrix for the 3x4 system along (1,1,1)") {
  RecurrenceMatrix R = extract_recurrence(kA34, basis34(), kBeta34, kX34, kH111);
  REQUIRE(R.R.rows == 2);
  REQUIRE(R.R.cols == 2);
  CHECK(R.S == basis34());
  CHECK(R.beta == kBeta34);
  CHECK(R.H == kH111);
  CHECK(R.T_used == 2);

  // [[0, 1], [-2(k+1)(k+2), 3k+5]]
  CHECK(R.R.at(0, 0).is_zero());
  CHECK(R.R.at(0, 1) == RatFunc(1));
  CHECK(R.R.at(1, 0) == RatFunc(UniPoly(std::vector<Rat>{Rat(-4), Rat(-6), Rat(-2)})));
  CHECK(R.R.at(1, 1) == RatFunc(UniPoly(std::vector<Rat>{Rat(5), Rat(3)})));
  CHECK(R.R.at(1, 0).to_string() == "(-2*k^2-6*k-4)/1");

  SUBCASE("value at k = 0 maps the known state across the step") {
    Matrix<Rat> M0 = eval_recurrence(R, 0);
    CHECK(M0.at(0, 0) == Rat(0));
    CHECK(M0.at(0, 1) == Rat(1));
    CHECK(M0.at(1, 0) == Rat(-4));
    CHECK(M0.at(1, 1) == Rat(5));
    // Y(beta) = (5/4, 1), Y(beta - H) = (1, 0).
    std::vector<Rat> y{Rat(5, 4), Rat(1)};
    std::vector<Rat> prev = M0 * y;
    CHECK(prev == std::vector<Rat>{Rat(1), Rat(0)});
  }

  SUBCASE("the recurrence matches the oracle at every checked shift") {
    for (long k = 1; k <= 5; ++k) {
      StateVector at_k = oracle_vector(kA34, R.S, shifted_beta(kBeta34, kH111, k), kX34);
      StateVector at_km1 =
          oracle_vector(kA34, R.S, shifted_beta(kBeta34, kH111, k - 1), kX34);
      CHECK(eval_recurrence(R, k) * at_k.y == at_km1.y);
    }
  }

  SUBCASE("step matrices stay invertible far along the line") {
    for (long k = 0; k <= 50; ++k) CHECK_NOTHROW(invert(eval_recurrence(R, k)));
  }

  SUBCASE("a larger truncation extracts the same matrix") {
    GroebnerBasis G = toric_gb(kA34, TermOrder::grevlex(4));
    RecurrenceMatrix R2 = extract_step(kA34, G, basis34(), kBeta34, kX34, kH111,
                                       E({0, 0, 0, 1}), R.T_used + 1);
    CHECK(R2.T_used == R.T_used + 1);
    CHECK(R2.R == R.R);
  }
}

TEST_CASE("zero direction gives the identity step") {
  RecurrenceMatrix R = extract_recurrence(kA34, basis34(), kBeta34, kX34, {0, 0, 0});
  CHECK(R.R == Matrix<RatFunc>::identity(2));
  CHECK(R.T_used == 0);
}

TEST_CASE("single-column step matrices") {
  SUBCASE("column 4 of the 3x4 system reproduces the direction step") {
    RecurrenceMatrix P = pfaffian_matrix(kA34, basis34(), kBeta34, kX34, 3);
    RecurrenceMatrix R = extract_recurrence(kA34, basis34(), kBeta34, kX34, kH111);
    CHECK(P.R == R.R);  // a_4 = (1,1,1) is the direction itself
    CHECK(P.H == kH111);
  }

  SUBCASE("columns whose shift stays inside the basis give unit rows") {
    // S = {1, d4}: applying d4 to the constant lands on d4.
    RecurrenceMatrix P = pfaffian_matrix(kA34, basis34(), kBeta34, kX34, 3);
    CHECK(P.R.at(0, 0).is_zero());
    CHECK(P.R.at(0, 1) == RatFunc(1));
  }

  SUBCASE("step matrix against the oracle for every column") {
    for (int i = 0; i < 4; ++i) {
      RecurrenceMatrix P = pfaffian_matrix(kA34, basis34(), kBeta34, kX34, i);
      // P(0): Y(beta - a_i) = P(0) Y(beta).
      std::vector<long> down = kBeta34;
      std::vector<long> col = kA34.column(i);
      for (int j = 0; j < 3; ++j) down[j] -= col[j];
      StateVector at = oracle_vector(kA34, P.S, kBeta34, kX34);
      StateVector below = oracle_vector(kA34, P.S, down, kX34);
      CHECK(eval_recurrence(P, 0) * at.y == below.y);
    }
  }

  SUBCASE("out-of-range column") {
    CHECK_THROWS_AS(pfaffian_matrix(kA34, basis34(), kBeta34, kX34, 4), Error);
  }
}

TEST_CASE("evaluating a step matrix at a pole") {
  RecurrenceMatrix R;
  R.R = Matrix<RatFunc>(1, 1);
  R.R.at(0, 0) = RatFunc(UniPoly(1), UniPoly(std::vector<Rat>{Rat(-3), Rat(1)}));  // 1/(k-3)
  CHECK_NOTHROW(eval_recurrence(R, 2));
  CHECK_THROWS_AS(eval_recurrence(R, 3), PoleError);
}

TEST_CASE("reducible or repeated state basis is rejected") {
  GroebnerBasis G = toric_gb(kA34, TermOrder::grevlex(4));
  CHECK_THROWS_AS(extract_step(kA34, G, {E({0, 0, 0, 0}), E({0, 1, 1, 0})}, kBeta34, kX34,
                               kH111, E({0, 0, 0, 1})),
                  BasisError);
  CHECK_THROWS_AS(extract_step(kA34, G, {E({0, 0, 0, 1}), E({0, 0, 0, 1})}, kBeta34, kX34,
                               kH111, E({0, 0, 0, 1})),
                  BasisError);
}

TEST_CASE("parameter descent paths") {
  SUBCASE("the worked 3x4 descent") {
    Path p = find_path(kA34, kBeta34, basis34());
    REQUIRE(p.steps.size() == 2);
    CHECK(p.steps[0] == PathStep{0, 1});
    CHECK(p.steps[1] == PathStep{1, 1});
    CHECK(p.endpoint == std::vector<long>{1, 1, 1});
  }

  SUBCASE("origin needs no steps") {
    Path p = find_path(kA34, {0, 0, 0}, basis34());
    CHECK(p.steps.empty());
    CHECK(p.endpoint == std::vector<long>{0, 0, 0});
  }

  SUBCASE("single-column system walks all the way down") {
    ConfigMatrix A1 = ConfigMatrix::from_rows({{1}});
    Path p = find_path(A1, {3}, {E({0})});
    REQUIRE(p.steps.size() == 1);
    CHECK(p.steps[0] == PathStep{0, 3});
    CHECK(p.endpoint == std::vector<long>{0});
  }

  SUBCASE("unreachable parameters throw") {
    CHECK_THROWS_AS(find_path(kA34, {0, 1, 0}, basis34()), NotInSemigroupError);
  }

  SUBCASE("replay: steps plus endpoint reconstruct the parameter through the semigroup") {
    Path p = find_path(kA34, kBeta34, basis34());
    std::vector<long> cur = p.endpoint;
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
      std::vector<long> col = kA34.column(it->column);
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] += it->mult * col[j];
      CHECK(first_fiber_point(kA34, cur).has_value());
    }
    CHECK(cur == kBeta34);
  }
}
