#include <doctest.h>

#include <vector>

#include "ahg/errors.hpp"
#include "ahg/fiber.hpp"
#include "ahg/hgm.hpp"
#include "ahg/oracle.hpp"
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
const std::vector<Rat> kX48{Rat(1), Rat(1, 2), Rat(1, 3), Rat(2, 3),
                            Rat(1), Rat(1),    Rat(1),    Rat(1)};

ExpVec E(std::initializer_list<int> v) { return ExpVec(v); }

std::vector<ExpVec> basis34() { return {E({0, 0, 0, 0}), E({0, 0, 0, 1})}; }

std::vector<ExpVec> basis48() {
  return {E({0, 0, 0, 0, 0, 0, 0, 0}), E({0, 0, 0, 0, 1, 0, 0, 0}),
          E({0, 0, 0, 0, 0, 1, 0, 0}), E({0, 0, 0, 0, 0, 0, 1, 0}),
          E({0, 0, 0, 0, 0, 0, 0, 1}), E({0, 0, 0, 0, 0, 0, 0, 2})};
}

// All integer points u in [0, box]^n with A u = beta; works for signed A.
std::vector<ExpVec> boxed_fiber(const ConfigMatrix& A, const std::vector<long>& beta,
                                int box) {
  std::vector<ExpVec> out;
  ExpVec u(A.n, 0);
  for (;;) {
    if (A.apply(u) == beta) out.push_back(u);
    int i = 0;
    while (i < A.n && u[i] == box) u[i++] = 0;
    if (i == A.n) break;
    ++u[i];
  }
  return out;
}

}  // namespace

TEST_CASE("recurrence walk reproduces the oracle on the 3x4 system") {
  SUBCASE("one leg") {
    EvalPlan plan{{1, 1, 1}, {Leg{{1, 1, 1}, 2}}, kX34, basis34()};
    StateVector got = hgm_eval(kA34, plan);
    CHECK(got.beta == std::vector<long>{3, 3, 3});
    StateVector want = oracle_vector(kA34, basis34(), {3, 3, 3}, kX34);
    CHECK(got.y == want.y);
  }

  SUBCASE("two legs retrace a descent path upward") {
    // find_path(3,2,1) descends by columns 1 then 2 to (1,1,1); walking the
    // same columns upward reaches the frozen state at (3,2,1).
    EvalPlan plan{{1, 1, 1}, {Leg{{1, 0, 0}, 1}, Leg{{1, 1, 0}, 1}}, kX34, basis34()};
    StateVector got = hgm_eval(kA34, plan);
    CHECK(got.beta == kBeta34);
    CHECK(got.y == std::vector<Rat>{Rat(5, 4), Rat(1)});
    CHECK(got.y == oracle_vector(kA34, basis34(), kBeta34, kX34).y);
  }

  SUBCASE("empty and zero-length legs are no-ops") {
    EvalPlan plan{kBeta34, {}, kX34, basis34()};
    CHECK(hgm_eval(kA34, plan).y == oracle_vector(kA34, basis34(), kBeta34, kX34).y);
    EvalPlan plan0{kBeta34, {Leg{{1, 1, 1}, 0}}, kX34, basis34()};
    CHECK(hgm_eval(kA34, plan0).y == oracle_vector(kA34, basis34(), kBeta34, kX34).y);
  }

  SUBCASE("malformed plans are rejected") {
    CHECK_THROWS_AS(hgm_eval(kA34, EvalPlan{{1, 1}, {}, kX34, basis34()}), Error);
    CHECK_THROWS_AS(hgm_eval(kA34, EvalPlan{kBeta34, {Leg{{1, 1, 1}, -1}}, kX34, basis34()}),
                    Error);
    CHECK_THROWS_AS(
        hgm_eval(kA34, EvalPlan{kBeta34, {}, kX34, {E({0, 0, 0, 1}), E({0, 0, 0, 0})}}),
        BasisError);
  }
}

TEST_CASE("expectations from a state vector") {
  StateVector Y = oracle_vector(kA34, basis34(), kBeta34, kX34);

  SUBCASE("basis column reads off directly") {
    CHECK(expectation(kA34, Y, 3) == Rat(4, 5));  // X4 * 1 / (5/4)
  }

  SUBCASE("non-basis columns synthesize the derivative through a step matrix") {
    for (int i = 0; i < 4; ++i) {
      std::vector<long> down = kBeta34;
      for (int j = 0; j < 3; ++j) down[j] -= kA34.column(i)[j];
      Rat want = kX34[i] * fiber_sum(kA34, down, kX34) / Y.y[0];
      CHECK(expectation(kA34, Y, i) == want);
    }
    CHECK(expectation(kA34, Y, 0) == Rat(4, 5));
  }

  SUBCASE("zero normalizer") {
    StateVector dead{basis34(), {Rat(0), Rat(0)}, kBeta34, kX34};
    CHECK_THROWS_AS(expectation(kA34, dead, 3), ZeroNormalizerError);
  }
}

TEST_CASE("column shift to a nonnegative matrix") {
  SUBCASE("plain shift") {
    ConfigMatrix A = ConfigMatrix::from_rows({{1, 1}, {-1, 0}});
    ShiftResult s = shift_nonnegative(A, {Rat(1), Rat(0)});
    CHECK(s.p == std::vector<long>{0, 1});
    CHECK(s.Aprime == ConfigMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(shift_parameter(s, {2, -1}) == std::vector<long>{2, 1});
  }

  SUBCASE("degenerate shift direction gets bumped off the hyperplane") {
    ConfigMatrix A = ConfigMatrix::from_rows({{0, 1}, {-1, 0}});
    ShiftResult s = shift_nonnegative(A, {Rat(1), Rat(-1)});
    CHECK(s.p == std::vector<long>{1, 1});
    CHECK(s.Aprime == ConfigMatrix::from_rows({{1, 2}, {0, 1}}));
  }

  SUBCASE("form must be 1 on every column") {
    CHECK_THROWS_AS(shift_nonnegative(kA34, {Rat(0), Rat(1), Rat(0)}), NoHyperplaneError);
  }

  SUBCASE("already nonnegative matrices are untouched") {
    ShiftResult s = shift_nonnegative(kA34, {Rat(1), Rat(0), Rat(0)});
    CHECK(s.p == std::vector<long>{0, 0, 0});
    CHECK(s.Aprime == kA34);
  }

  SUBCASE("fibers are carried over point by point") {
    ConfigMatrix A = ConfigMatrix::from_rows({{1, 1}, {-1, 0}});
    ShiftResult s = shift_nonnegative(A, {Rat(1), Rat(0)});
    std::vector<long> beta{2, -1};
    std::vector<long> betap = shift_parameter(s, beta);
    CHECK(boxed_fiber(A, beta, 4) == boxed_fiber(s.Aprime, betap, 4));
    CHECK(boxed_fiber(A, beta, 4) == std::vector<ExpVec>{E({1, 1})});
  }

  SUBCASE("kernel and binomial ideal survive the shift") {
    ConfigMatrix A = ConfigMatrix::from_rows({{1, 1, 1}, {-1, 0, 1}});
    ShiftResult s = shift_nonnegative(A, {Rat(1), Rat(0)});
    CHECK(s.Aprime == ConfigMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}));
    auto k1 = integer_kernel_basis(A);
    auto k2 = integer_kernel_basis(s.Aprime);
    REQUIRE(k1.size() == 1);
    REQUIRE(k2.size() == 1);
    bool same = k1[0] == k2[0];
    bool flipped = true;
    for (std::size_t i = 0; i < k1[0].size(); ++i)
      if (k1[0][i] != -k2[0][i]) flipped = false;
    CHECK((same || flipped));
    TermOrder ord = TermOrder::grevlex(3);
    GroebnerBasis g1 = lattice_gb(A, ord);
    GroebnerBasis g2 = lattice_gb(s.Aprime, ord);
    REQUIRE(g1.gens.size() == g2.gens.size());
    for (std::size_t i = 0; i < g1.gens.size(); ++i) CHECK(g1.gens[i] == g2.gens[i]);
  }
}

TEST_CASE("full walk on the 4x8 system hits the published endpoint") {
  EvalPlan plan{{3, 2, 1, 1},
                {Leg{{1, 1, 1, 1}, 10}, Leg{{1, 0, 0, 0}, 20}},
                kX48,
                basis48()};
  StateVector got = hgm_eval(kA48, plan);
  CHECK(got.beta == std::vector<long>{33, 12, 11, 11});

  Rat z = Rat::from_string(
      "30318066527332447242457/89619251224349337722522492794306560000");
  CHECK(got.y[0] == z);
  CHECK(expectation(kA48, got, 7) ==
        Rat::from_string("52047189429143224956864/30318066527332447242457"));

  // The same state, straight from the enumeration oracle.
  StateVector want = oracle_vector(kA48, basis48(), {33, 12, 11, 11}, kX48);
  CHECK(got.y == want.y);

  // A column outside the basis, synthesized through a 6x6 step matrix.
  Rat zdown = fiber_sum(kA48, {32, 12, 11, 11}, kX48);
  CHECK(expectation(kA48, got, 0) == kX48[0] * zdown / z);
}
