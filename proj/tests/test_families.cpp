#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qlc/families.hpp"
#include "qlc/family_cache.hpp"

using namespace qlc;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qlc_test_families";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

}  // namespace

TEST_CASE("family polynomials") {
  CHECK(family_poly(Family::D, 0) == IntPoly({1}));
  CHECK(family_poly(Family::D, 1) == IntPoly({2, 2}));
  CHECK(family_poly(Family::D, 2) == IntPoly({6, 16, 6}));
  CHECK(family_poly(Family::W, 3) == IntPoly({1, 9, 9, 1}));
  CHECK(family_poly(Family::V, 2) == IntPoly({1, 8, 6}));
  CHECK(family_poly(Family::F, 2) == IntPoly({6, 8, 1}));
}

TEST_CASE("Domb numbers match the known sequence") {
  const long expected[] = {1, 4, 28, 256, 2716, 31504, 387136, 4951552, 65218204, 878536624};
  const auto d = domb_numbers(11);
  for (long n = 0; n < 10; ++n) CHECK(d[n] == expected[n]);
  CHECK(d[10] == ExactInt("12046924528"));
  CHECK(d[11] == ExactInt("167595457792"));
  CHECK(domb_number(4) == 2716);
  for (long n = 0; n <= 30; ++n) CHECK(eval_int(family_poly(Family::D, n), 1) == domb_number(n));
}

TEST_CASE("triangular arrays and weighted assembly") {
  const TriangularArray& d = array_for(ArrayKind::domb);
  CHECK(d(2, 1) == 4 * 2);  // C(2,1)^2 C(2,1)
  CHECK(d(3, 0) == 20);
  CHECK(d(3, 4) == 0);
  CHECK(d(3, -1) == 0);
  CHECK_THROWS_AS(d(-1, 0), DomainError);
  const TriangularArray& w = array_for(ArrayKind::narayana);
  CHECK(w(3, 1) == 9);
  CHECK(&array_for(ArrayKind::domb) == &d);
  for (long n = 0; n <= 12; ++n) {
    CHECK(weighted_assembly(d, central_binomial_weights(), n) == family_poly(Family::D, n));
    CHECK(weighted_assembly(w, unit_weights(), n) == family_poly(Family::W, n));
  }
  CHECK(coeff_a(ArrayKind::narayana, 4, 2) == 36);
  CHECK(std::string(to_string(ArrayKind::domb)) == "domb_a");
  CHECK(std::string(to_string(ArrayKind::narayana)) == "narayana_a");
}

TEST_CASE("family tags") {
  CHECK(parse_family("D") == Family::D);
  CHECK(parse_family("F") == Family::F);
  CHECK_FALSE(parse_family("X").has_value());
  CHECK_FALSE(parse_family("").has_value());
  CHECK(to_char(Family::V) == 'V');
}

TEST_CASE("family cache round trip") {
  const fs::path path = temp_file("roundtrip.tsv");
  {
    FamilyCache cache(path);
    CHECK(cache.load());
    CHECK(cache.size() == 0);
    CHECK(cache.get(Family::D, 2) == IntPoly({6, 16, 6}));
    CHECK(cache.get(Family::W, 3) == IntPoly({1, 9, 9, 1}));
    CHECK(cache.dirty());
    cache.save();
    CHECK_FALSE(cache.dirty());
  }
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "qlc-family-cache 1");
  FamilyCache again(path);
  CHECK(again.load());
  CHECK(again.size() == 2);
  CHECK(again.lookup(Family::D, 2) == IntPoly({6, 16, 6}));
  CHECK_FALSE(again.lookup(Family::D, 3).has_value());
  CHECK_FALSE(again.dirty());
}

TEST_CASE("corrupt cache files are discarded") {
  const fs::path path = temp_file("corrupt.tsv");
  {
    std::ofstream out(path);
    out << "qlc-family-cache 1\nD\t2\t6,16\n";  // wrong length
  }
  FamilyCache cache(path);
  CHECK_FALSE(cache.load());
  CHECK(cache.size() == 0);
  CHECK(cache.dirty());
  CHECK_FALSE(FamilyCache::parse("qlc-family-cache 99\n").has_value());
  CHECK_FALSE(FamilyCache::parse("garbage").has_value());
  CHECK_FALSE(FamilyCache::parse("qlc-family-cache 1\nQ\t1\t1,1\n").has_value());
  CHECK(FamilyCache::parse("qlc-family-cache 1\n").has_value());
}

TEST_CASE("cache save fails cleanly on an unwritable path") {
  // a regular file as parent directory cannot be created, even as root
  const fs::path blocker = temp_file("blocker");
  std::ofstream(blocker) << "x";
  FamilyCache cache(blocker / "cache.tsv");
  cache.put(Family::D, 1, IntPoly({2, 2}));
  CHECK_THROWS_AS(cache.save(), std::runtime_error);
}

TEST_CASE("default cache path follows the environment") {
  setenv("QLC_CACHE_DIR", "/tmp/qlc-cache-env", 1);
  const auto p = FamilyCache::default_path();
  REQUIRE(p.has_value());
  CHECK(p->string() == "/tmp/qlc-cache-env/families.v1.tsv");
  unsetenv("QLC_CACHE_DIR");
  CHECK_FALSE(FamilyCache::default_path().has_value());
}
