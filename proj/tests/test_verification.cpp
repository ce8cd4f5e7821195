#include <doctest.h>

#include "qlc/verification.hpp"

using namespace qlc;

namespace {

VerificationConfig small() {
  VerificationConfig cfg;
  cfg.n_max_direct = 8;
  cfg.n_max_factorization = 8;
  cfg.n_max_sturm = 8;
  cfg.n_max_monotonicity = 10;
  cfg.n_max_root_ratio = 6;
  cfg.series_N = 100;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  VerificationConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n_max_direct = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = VerificationConfig{};
  cfg.series_digits = 9;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = VerificationConfig{};
  cfg.jobs = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_full_verification(cfg), std::invalid_argument);
}

TEST_CASE("small run covers every family in order") {
  const Certificate c = run_full_verification(small());
  CHECK(c.passed);
  const auto fams = c.families();
  std::vector<std::string> names;
  for (const auto& f : fams) names.push_back(f.family);
  CHECK(names == claim_families());
  for (const auto& r : c.claims) {
    INFO(r.id, " ", r.detail);
    CHECK(r.passed);
  }
  CHECK_FALSE(c.timestamp.empty());
  CHECK(c.find("series") != nullptr);
}

TEST_CASE("degenerate bounds still yield a full certificate") {
  VerificationConfig cfg;
  cfg.n_max_direct = cfg.n_max_factorization = cfg.n_max_sturm = 1;
  cfg.n_max_monotonicity = cfg.n_max_root_ratio = 1;
  const Certificate c = run_full_verification(cfg);
  CHECK(c.families().size() == claim_families().size());
  CHECK(c.passed);
}

TEST_CASE("a perturbed psi flips the verdict") {
  VerificationConfig cfg = small();
  cfg.psi_fault = PsiFault{5, 3, 2, 1};
  const Certificate c = run_full_verification(cfg);
  CHECK_FALSE(c.passed);
  const ClaimRecord* f = c.find("factorization");
  REQUIRE(f != nullptr);
  CHECK_FALSE(f->passed);
  CHECK(f->witnesses[0].second == "5");
  CHECK(f->witnesses[1].second == "3");
}

TEST_CASE("unwritable cache reports without touching the verdict") {
  VerificationConfig cfg = small();
  cfg.cache_path = "/proc/definitely/not/here/families.tsv";
  std::string err;
  const Certificate c = run_full_verification(cfg, &err);
  CHECK(c.passed);
  CHECK_FALSE(err.empty());
}
