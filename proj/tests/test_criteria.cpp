#include <doctest.h>

#include "qlc/criteria.hpp"
#include "qlc/families.hpp"

using namespace qlc;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const TriangularArray& domb() { return array_for(ArrayKind::domb); }
const TriangularArray& nara() { return array_for(ArrayKind::narayana); }

}  // namespace

TEST_CASE("log-convexity of scalar sequences") {
  CHECK(log_convex_check(ints({1, 4, 28, 256}), true).passed);
  CHECK(log_convex_check(ints({1, 2, 4, 8}), false).passed);
  const auto strict = log_convex_check(ints({1, 2, 4, 8}), true);
  CHECK_FALSE(strict.passed);
  CHECK(strict.first_failure == 1);
  const auto bad = log_convex_check(ints({1, 3, 4, 9}), false);
  CHECK_FALSE(bad.passed);
  CHECK(bad.first_failure == 1);
  CHECK_THROWS_AS(log_convex_check(ints({1, 2}), false), std::invalid_argument);
  CHECK_THROWS_AS(log_convex_check(ints({1, 0, 1}), false), std::invalid_argument);
  std::vector<ExactInt> c;
  for (long k = 0; k <= 40; ++k) c.push_back(central_binom(k));
  CHECK(log_convex_check(c, false).passed);
}

TEST_CASE("q-log-convexity on explicit sequences") {
  const std::vector<IntPoly> d = {family_poly(Family::D, 0), family_poly(Family::D, 1), family_poly(Family::D, 2)};
  const auto w = q_log_convex_sequence(d);
  REQUIRE(w.size() == 1);
  CHECK(w[0].n == 1);
  // D_2 D_0 - D_1^2 = (6 + 16q + 6q^2) - (4 + 8q + 4q^2)
  CHECK(w[0].defect == IntPoly({2, 8, 2}));
  CHECK(w[0].passed());
  // 1, 1 + q, 1 + q: defect -2q - q^2.
  const std::vector<IntPoly> bad = {IntPoly{1}, IntPoly{1, 1}, IntPoly{1, 1}};
  const auto wb = q_log_convex_sequence(bad);
  CHECK_FALSE(wb[0].passed());
  CHECK(wb[0].first_negative_coefficient == 1);
}

TEST_CASE("direct q-log-convexity for all families, serial equals parallel") {
  for (Family f : {Family::D, Family::W, Family::V, Family::F}) {
    const auto serial = q_log_convex_direct(f, 25, 1);
    const auto par = q_log_convex_direct(f, 25, 4);
    REQUIRE(serial.size() == 25);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].passed());
      CHECK(serial[i].n == static_cast<long>(i) + 1);
      CHECK(serial[i].defect == par[i].defect);
    }
  }
  CHECK_THROWS_AS(q_log_convex_direct(Family::D, 0), std::invalid_argument);
}

TEST_CASE("operator L on the Domb array") {
  CHECK(op_L(domb(), 1, 0, 0) == 4);
  CHECK(op_L(domb(), 1, 1, 0) == 4);
  CHECK(op_L(domb(), 2, 2, 0) == 24);
  CHECK(op_L(domb(), 2, 2, 1) == -20);
  CHECK(op_L(domb(), 3, 2, 0) == 646);
  CHECK(op_L(domb(), 4, 4, 0) == 860);
  CHECK_THROWS_AS(op_L(domb(), 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(op_L(domb(), 2, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(op_L(domb(), 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(op_L(domb(), 2, -1, 0), std::invalid_argument);
}

TEST_CASE("operator L-tilde") {
  CHECK(op_L_tilde(nara(), 2, 2, 1) == -7);
  CHECK(op_L_tilde(nara(), 1, 0, 0) == 0);
  CHECK(op_L_tilde(domb(), 2, 2, 0) == 24);
  CHECK(apply(Operator::L_tilde, nara(), 2, 2, 1) == -7);
  CHECK(apply(Operator::L, domb(), 2, 2, 1) == -20);
  // Away from the midpoint both operators agree exactly.
  for (long n = 1; n <= 12; ++n) {
    for (long t = 0; t <= 2 * n; ++t) {
      for (long k = 0; 2 * k < t; ++k) {
        REQUIRE(op_L_tilde(domb(), n, t, k) == op_L(domb(), n, t, k));
        REQUIRE(op_L_tilde(nara(), n, t, k) == op_L(nara(), n, t, k));
      }
    }
  }
}

TEST_CASE("single crossing") {
  auto sc = single_crossing(ints({4, 2, -1}));
  CHECK(sc.kind == SignCrossing::Kind::crossing);
  CHECK(sc.index == 1);
  CHECK(single_crossing(ints({5, 0, 3})).kind == SignCrossing::Kind::all_nonnegative);
  sc = single_crossing(ints({-1, 3}));
  CHECK(sc.kind == SignCrossing::Kind::violation);
  CHECK(sc.index == 1);
  CHECK(sc.value == 3);
  CHECK(single_crossing(ints({})).kind == SignCrossing::Kind::all_nonnegative);
  sc = single_crossing(ints({-2, -1}));
  CHECK(sc.kind == SignCrossing::Kind::crossing);
  CHECK(sc.index == -1);
  // Zeros are bivalent; k' is the last index before the first negative value.
  sc = single_crossing(ints({3, 0, -2, 0, -1}));
  CHECK(sc.kind == SignCrossing::Kind::crossing);
  CHECK(sc.index == 1);
  CHECK(single_crossing(ints({3, -1, 0, 2})).kind == SignCrossing::Kind::violation);
  CHECK(std::string(to_string(SignCrossing::Kind::crossing)) == "crossing");
}

TEST_CASE("C2 sweep cells") {
  const auto cells = criterion_c2_sweep(domb(), 2, 2, 2);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].values == ints({24, -20}));
  CHECK(cells[0].outcome.kind == SignCrossing::Kind::crossing);
  CHECK(cells[0].outcome.index == 0);
  const auto one = criterion_c2_sweep(domb(), 1, 1, 1);
  CHECK(one[0].values == ints({4}));
  CHECK(one[0].outcome.kind == SignCrossing::Kind::all_nonnegative);
  CHECK(criterion_c2_sweep(domb(), 4, 4, 4)[0].values[0] == 860);
}

TEST_CASE("criterion verdicts") {
  const auto d = criterion_verdict(domb(), central_binomial_weights(), 10);
  CHECK(d.passed());
  CHECK(d.c1_passed());
  CHECK(d.c2_passed());
  CHECK(d.conclusion() == "hypotheses verified for n <= 10");
  // Cells ordered by (n, t) with t = 0..n.
  CHECK(d.cells.size() == 65);
  CHECK(d.cells.front().n == 1);
  CHECK(d.cells.back().n == 10);
  CHECK(d.cells.back().t == 10);

  const auto w = criterion_verdict(nara(), unit_weights(), 2);
  CHECK(w.c1_passed());

  const auto d1 = criterion_verdict(domb(), central_binomial_weights(), 1);
  CHECK(d1.passed());
  REQUIRE(d1.cells.size() == 2);
  CHECK(d1.cells[0].outcome.kind == SignCrossing::Kind::all_nonnegative);
  CHECK(d1.cells[1].outcome.kind == SignCrossing::Kind::all_nonnegative);

  const auto lw = criterion_verdict(nara(), unit_weights(), 8, Criterion::liu_wang);
  CHECK(lw.passed());
  CHECK(lw.cells.back().t == 16);

  const auto par = criterion_verdict(domb(), central_binomial_weights(), 10, Criterion::self_reciprocal, 4);
  REQUIRE(par.cells.size() == d.cells.size());
  for (std::size_t i = 0; i < d.cells.size(); ++i) CHECK(par.cells[i].values == d.cells[i].values);
}

TEST_CASE("criterion verdict reports failing hypotheses") {
  // Weights 1, 2, 3, ... are log-concave, so the weight check fails.
  const WeightSequence linear = [](long k) { return ExactInt(k + 1); };
  const auto r = criterion_verdict(domb(), linear, 4);
  CHECK_FALSE(r.weights.passed);
  CHECK_FALSE(r.passed());
  CHECK(r.conclusion() == "hypotheses NOT verified for n <= 4");
}

TEST_CASE("root monotonicity") {
  const auto r = root_monotonicity_check(3, 1);
  CHECK(r.passed());
  CHECK(r.ratio_checked == 3);
  CHECK(r.root_checked == 2);
  CHECK(r.root_ratio_checked == 1);
  // Oracle for the root-ratio step at n = 1: 28^6 > 4^6 * 256^2.
  CHECK(ExactInt(481890304) > ExactInt(268435456));
  CHECK_THROWS_AS(root_monotonicity_check(1, 1), std::invalid_argument);
  CHECK(root_monotonicity_check(60, 30, 4).passed());
}
