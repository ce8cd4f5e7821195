#include <doctest.h>

#include "qlc/criteria.hpp"
#include "qlc/proof_verify.hpp"

using namespace qlc;

namespace {

bool all_passed(const std::vector<ClaimRecord>& rs) {
  for (const auto& r : rs) {
    if (!r.passed) return false;
  }
  return true;
}

const ClaimRecord* by_id(const std::vector<ClaimRecord>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("factorization identity examples") {
  const auto r = factorization_check(2, 2, 1);
  CHECK(r.identity);
  CHECK(r.lhs == -5120);
  CHECK(r.rhs == -5120);
  CHECK(r.psi_value == -80);
  CHECK(r.passed());

  const auto one = factorization_check(1, 0, 0);
  CHECK(one.op_value == 4);
  CHECK(one.passed());

  const auto ex = factorization_check(5, 5, 0);
  CHECK(ex.identity);
  CHECK(ex.excluded_case);
  CHECK(ex.negative_factor);
  CHECK(sign(ex.op_value) == -sign(ex.psi_value));
  CHECK(ex.passed());

  CHECK_THROWS_AS(factorization_check(3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(factorization_check(3, 2, 2), std::invalid_argument);
}

TEST_CASE("factorization sweep and a tampered psi") {
  const ClaimRecord ok = factorization_sweep(12);
  CHECK(ok.passed);
  CHECK(ok.checked > 0);
  const ClaimRecord bad = factorization_sweep(12, psi_source(PsiFault{7, 4, 0, 1}));
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witnesses.size() >= 3);
  CHECK(bad.witnesses[0] == std::pair<std::string, std::string>{"n", "7"});
  CHECK(bad.witnesses[1] == std::pair<std::string, std::string>{"t", "4"});
  CHECK(bad.witnesses[2] == std::pair<std::string, std::string>{"k", "0"});
}

TEST_CASE("prop31 pieces") {
  const auto rs = verify_prop31(12, 12);
  CHECK(all_passed(rs));
  REQUIRE(by_id(rs, "prop31.table") != nullptr);
  CHECK(by_id(rs, "prop31.table")->checked == 14);
  CHECK(kProp31Table[6] == 320);
  CHECK(kProp31Table[7] == 646);
  const ThetaBundle tb = expand_theta(10);
  CHECK(sturm_count_roots(tb.theta[4], ExactRat(0), ExactRat(9)) == 1);
  const ThetaBundle t5 = expand_theta(5);
  for (long t = 0; t <= 4; ++t) CHECK(eval_int(t5.theta[0], t) > 0);
}

TEST_CASE("claims") {
  const auto rs = verify_claims(1, 16);
  CHECK(all_passed(rs));
  CHECK(by_id(rs, "claim1")->checked == 9);
  CHECK(sign_constant_on(expand_theta(8).eta, ExactRat(0), ExactRat(6)) == SignOnInterval::negative);
}

TEST_CASE("prop32 and prop33") {
  CHECK(all_passed(verify_prop32(14)));
  CHECK(all_passed(verify_prop33(14)));
  // (6, 5): psi at k = 1, 2 forms a valid pattern.
  const PsiBundle b = expand_psi(6, 5);
  const std::vector<ExactInt> v = {eval_int(b.psi, 1), eval_int(b.psi, 2)};
  CHECK(single_crossing(v).ok());
}

TEST_CASE("degenerate ranges produce empty passing records") {
  const auto rs = verify_prop31(1, 1);
  CHECK(all_passed(rs));
  CHECK(by_id(rs, "prop31.sturm")->checked == 0);
  CHECK(all_passed(verify_prop33(1)));
  CHECK(factorization_sweep(1).passed);
}

TEST_CASE("grid identities") {
  for (IdentityId id : all_identities()) {
    const GridBounds g = id >= IdentityId::forms_theta ? kEndpointGrid : kIdentityGrid;
    const GridResult r = identity_grid_check(id, g);
    INFO(to_string(id), " ", r.what, " n=", r.n, " t=", r.t);
    CHECK(r.passed);
    CHECK(r.points > 0);
  }
}

TEST_CASE("grid identity rejects grids within the degree bound") {
  CHECK_THROWS_AS(identity_grid_check(IdentityId::cascade, GridBounds{1, 10, 0, 17}), std::invalid_argument);
  CHECK_THROWS_AS(identity_grid_check(IdentityId::cascade, GridBounds{1, 17, 0, 9}), std::invalid_argument);
  // t-free identities ignore the t range.
  CHECK_NOTHROW(identity_grid_check(IdentityId::nn_cascade, GridBounds{1, 11, 0, 0}));
}

TEST_CASE("grid identity pinpoints a tampered coefficient") {
  const GridResult r = identity_grid_check(IdentityId::cascade, kIdentityGrid, psi_source(PsiFault{9, 13, 5, -3}));
  CHECK_FALSE(r.passed);
  CHECK(r.n == 9);
  CHECK(r.t == 13);
  CHECK(r.what.find("x^4") != std::string::npos);
  const ClaimRecord rec = to_claim(r, "cascade", kIdentityGrid);
  CHECK_FALSE(rec.passed);
  CHECK(rec.id == "psi_cascade");
  CHECK(identity_grid_check(IdentityId::specialization, kIdentityGrid, psi_source(PsiFault{9, 9, 0, 1})).n == 9);
}
