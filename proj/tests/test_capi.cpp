#include <doctest.h>

#include <cstdlib>
#include <string>

#include "qlc/qlc.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qlc_string_free(s);
  return out;
}

qlc_config* small_config() {
  qlc_config* c = qlc_config_new();
  for (const char* key : {"n_max_direct", "n_max_factorization", "n_max_sturm", "n_max_root_ratio"})
    REQUIRE(qlc_config_set(c, key, "6") == QLC_OK);
  REQUIRE(qlc_config_set(c, "n_max_monotonicity", "10") == QLC_OK);
  REQUIRE(qlc_config_set(c, "jobs", "2") == QLC_OK);
  return c;
}

}  // namespace

TEST_CASE("version") { CHECK(std::string(qlc_version()) == "qlc 1.0.0"); }

TEST_CASE("family polynomials") {
  qlc_poly* p = nullptr;
  REQUIRE(qlc_family_poly('D', 2, &p) == QLC_OK);
  CHECK(qlc_poly_degree(p) == 2);
  char* s = nullptr;
  REQUIRE(qlc_poly_coeff(p, 1, &s) == QLC_OK);
  const std::string mid = take(s);
  REQUIRE(qlc_poly_coeff(p, 0, &s) == QLC_OK);
  const std::string low = take(s);
  REQUIRE(qlc_poly_coeff(p, 2, &s) == QLC_OK);
  const std::string high = take(s);
  CHECK(std::stol(low) + std::stol(mid) + std::stol(high) == 28);
  CHECK(low == high);
  REQUIRE(qlc_poly_coeff(p, 7, &s) == QLC_OK);
  CHECK(take(s) == "0");
  qlc_poly_free(p);

  CHECK(qlc_family_poly('Q', 2, &p) == QLC_ERR_ARGUMENT);
  CHECK(std::string(qlc_last_error()).size() > 0);
  CHECK(qlc_family_poly('D', -1, &p) == QLC_ERR_ARGUMENT);

  qlc_poly** ps = nullptr;
  size_t count = 0;
  REQUIRE(qlc_family_polys('W', 0, 5, nullptr, &ps, &count) == QLC_OK);
  CHECK(count == 6);
  CHECK(qlc_poly_degree(ps[5]) >= 1);
  qlc_poly_array_free(ps, count);
  CHECK(qlc_family_polys('W', 5, 2, nullptr, &ps, &count) == QLC_ERR_ARGUMENT);
}

TEST_CASE("single checks") {
  qlc_report* r = nullptr;
  REQUIRE(qlc_check_qlc('D', 12, 2, nullptr, &r) == QLC_OK);
  CHECK(qlc_report_passed(r) == 1);
  CHECK(qlc_report_checked(r) > 0);
  CHECK(std::string(qlc_report_witness(r)).empty());
  qlc_report_free(r);

  REQUIRE(qlc_check_logconvex('F', 40, &r) == QLC_OK);
  CHECK(qlc_report_passed(r) == 1);
  CHECK(std::string(qlc_report_summary(r)).size() > 0);
  qlc_report_free(r);

  REQUIRE(qlc_check_crossing('D', 10, 1, &r) == QLC_OK);
  CHECK(qlc_report_passed(r) == 1);
  qlc_report_free(r);
  CHECK(qlc_check_crossing('F', 10, 1, &r) == QLC_ERR_ARGUMENT);
  CHECK(qlc_check_qlc('D', 0, 1, nullptr, &r) == QLC_ERR_ARGUMENT);
}

TEST_CASE("config keys") {
  qlc_config* c = qlc_config_new();
  CHECK(qlc_config_set(c, "n_max_direct", "20") == QLC_OK);
  CHECK(qlc_config_set(c, "bogus", "1") == QLC_ERR_ARGUMENT);
  CHECK(qlc_config_set(c, "jobs", "many") == QLC_ERR_ARGUMENT);
  CHECK(qlc_config_set(c, "n_max_direct", nullptr) == QLC_ERR_ARGUMENT);
  qlc_config_free(c);
  qlc_config_free(nullptr);
}

TEST_CASE("verify, serialize, parse") {
  qlc_config* c = small_config();
  qlc_certificate* cert = nullptr;
  REQUIRE(qlc_verify(c, &cert) == QLC_OK);
  CHECK(qlc_certificate_passed(cert) == 1);
  CHECK(qlc_certificate_claim_count(cert) > 20);
  const char* id = nullptr;
  const char* family = nullptr;
  int passed = 0;
  REQUIRE(qlc_certificate_claim(cert, 0, &id, &family, &passed) == QLC_OK);
  CHECK(std::string(family) == "prop31");
  CHECK(qlc_certificate_claim(cert, 100000, &id, &family, &passed) == QLC_ERR_ARGUMENT);
  size_t claims = 0;
  CHECK(qlc_certificate_family_count(cert) == 14);
  REQUIRE(qlc_certificate_family(cert, 13, &family, &passed, &claims) == QLC_OK);
  CHECK(std::string(family) == "monotonicity");
  CHECK(claims == 3);

  char* text = nullptr;
  REQUIRE(qlc_certificate_serialize(cert, "json", &text) == QLC_OK);
  const std::string json = take(text);
  CHECK(qlc_certificate_serialize(cert, "xml", &text) == QLC_ERR_ARGUMENT);
  REQUIRE(qlc_certificate_serialize(cert, "csv", &text) == QLC_OK);
  CHECK(take(text).rfind("id,family", 0) == 0);

  qlc_certificate* back = nullptr;
  REQUIRE(qlc_certificate_parse(json.c_str(), &back) == QLC_OK);
  CHECK(std::string(qlc_certificate_timestamp(back)) == qlc_certificate_timestamp(cert));
  REQUIRE(qlc_certificate_serialize(back, "json", &text) == QLC_OK);
  CHECK(take(text) == json);
  qlc_certificate_free(back);
  CHECK(qlc_certificate_parse("{\"claims\": 3}", &back) == QLC_ERR_PARSE);
  qlc_certificate_free(cert);

  REQUIRE(qlc_config_set_psi_fault(c, 4, 2, 1, 1) == QLC_OK);
  REQUIRE(qlc_verify(c, &cert) == QLC_OK);
  CHECK(qlc_certificate_passed(cert) == 0);
  qlc_certificate_free(cert);
  qlc_config_free(c);
}

TEST_CASE("cache write failure") {
  qlc_config* c = small_config();
  REQUIRE(qlc_config_set(c, "cache_path", "/proc/no/such/dir/families.tsv") == QLC_OK);
  qlc_certificate* cert = nullptr;
  CHECK(qlc_verify(c, &cert) == QLC_ERR_IO);
  REQUIRE(cert != nullptr);
  CHECK(qlc_certificate_passed(cert) == 1);
  qlc_certificate_free(cert);
  qlc_config_free(c);
}

TEST_CASE("series") {
  char* sum = nullptr;
  char* ref = nullptr;
  char* err = nullptr;
  int passed = 0;
  REQUIRE(qlc_series(100, 40, &sum, &ref, &err, &passed) == QLC_OK);
  CHECK(passed == 1);
  CHECK(take(ref).rfind("1.4702103877914454653635373288", 0) == 0);
  take(sum);
  take(err);
  REQUIRE(qlc_series(2, 40, &sum, &ref, &err, &passed) == QLC_OK);
  CHECK(passed == 0);
  CHECK(take(sum).rfind("1.4501953125", 0) == 0);
  take(ref);
  take(err);
  CHECK(qlc_series(-3, 40, &sum, &ref, &err, &passed) == QLC_ERR_ARGUMENT);
}
