#include <doctest.h>

#include "qlc/series.hpp"

using namespace qlc;

namespace {
// 8 / (sqrt(3) pi), computed independently with mpmath at 80 digits.
const char* kReference = "1.4702103877914454653635373288345851770596972809777084074649760541";
}  // namespace

TEST_CASE("partial sums") {
  CHECK(chan_partial_sum(0) == 1);
  CHECK(chan_partial_sum(1) == make_rat(11, 8));
  CHECK(chan_partial_sum(2) == make_rat(1485, 1024));
  CHECK_THROWS_AS(chan_partial_sum(-1), std::invalid_argument);
  CHECK(chan_partial_sum(30) < chan_partial_sum(31));
}

TEST_CASE("constant against frozen digits") {
  const std::string ref(kReference);
  for (unsigned digits : {10u, 25u, 50u, 64u}) {
    const std::string got = to_fixed(chan_constant(digits), digits);
    INFO(digits);
    // floor may trail the rounded reference by one unit in the last place
    const std::string want = ref.substr(0, 2 + digits);
    const ExactInt g = parse_int(std::string(got).erase(1, 1));
    const ExactInt w = parse_int(std::string(want).erase(1, 1));
    CHECK(ExactInt(abs(g - w)) <= 1);
  }
  CHECK(chan_constant_scaled(10) == parse_int("14702103877"));
}

TEST_CASE("series check") {
  const SeriesCheck ok = series_check(100, 40);
  CHECK(ok.passed);
  CHECK(ok.error_bound < ok.tolerance);
  CHECK(ok.tolerance == ExactRat(1) / ExactRat(ExactInt("1" + std::string(kSeriesToleranceExponent, '0'))));
  const SeriesCheck bad = series_check(1, 40);
  CHECK_FALSE(bad.passed);
  // too few reference digits cannot certify the tolerance
  CHECK_FALSE(series_check(100, 20).passed);
  CHECK_THROWS(series_check(-1, 40));
}
