#include <doctest.h>

#include <thread>
#include <vector>

#include "qlc/exact.hpp"

using namespace qlc;

TEST_CASE("binomials match an additive Pascal oracle") {
  // Oracle: rows built by plain addition, independent of the cache.
  std::vector<std::vector<ExactInt>> pascal{{1}};
  for (long n = 1; n <= 120; ++n) {
    std::vector<ExactInt> row(n + 1, 1);
    for (long k = 1; k < n; ++k) row[k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    pascal.push_back(std::move(row));
  }
  for (long n = 0; n <= 120; ++n) {
    for (long k = 0; k <= n; ++k) REQUIRE(binom(n, k) == pascal[n][k]);
  }
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(0, 0) == 1);
}

TEST_CASE("binomial domain errors") {
  CHECK_THROWS_AS(binom(-1, 0), DomainError);
  CHECK_THROWS_AS(central_binom(-1), DomainError);
  CHECK(central_binom(0) == 1);
  CHECK(central_binom(3) == 20);
  CHECK(central_binom(10) == 184756);
}

TEST_CASE("binomial references stay valid while the table grows") {
  const ExactInt& early = binom(10, 5);
  for (long n = 0; n < 400; n += 37) (void)binom(n, n / 2);
  CHECK(early == 252);
}

TEST_CASE("concurrent binomial access agrees with serial values") {
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 1);
  for (int w = 0; w < 8; ++w) {
    pool.emplace_back([&, w] {
      for (long n = 500 + w; n < 700; n += 8) {
        if (binom(n, 2) != ExactInt(n) * (n - 1) / 2) ok[w] = 0;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("rationals are canonical") {
  const ExactRat r = make_rat(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(make_rat(0, 7) == 0);
  CHECK_THROWS_AS(make_rat(1, 0), DomainError);
  CHECK(rat_cmp(make_rat(1, 3), make_rat(2, 6)) == std::strong_ordering::equal);
  CHECK(rat_cmp(make_rat(-1, 2), make_rat(1, 3)) == std::strong_ordering::less);
  CHECK(to_string(make_rat(64, 7)) == "64/7");
  CHECK(to_string(ExactRat(5)) == "5");
}

TEST_CASE("decimal formatting and parsing") {
  CHECK(to_fixed(make_rat(11, 8), 4) == "1.3750");
  CHECK(to_fixed(make_rat(2, 3), 5) == "0.66666");
  CHECK(to_fixed(make_rat(-2, 3), 2) == "-0.66");
  CHECK(to_fixed(ExactRat(7), 0) == "7");
  CHECK(to_fixed(make_rat(1, 1000), 2) == "0.00");
  CHECK(parse_int("-123456789012345678901234567890") == ExactInt("-123456789012345678901234567890"));
  CHECK(parse_int("+42") == 42);
  CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
  CHECK(to_decimal(ExactInt(-5)) == "-5");
}
