#include "qlc/qlc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlc/certificate.hpp"
#include "qlc/criteria.hpp"
#include "qlc/families.hpp"
#include "qlc/family_cache.hpp"
#include "qlc/series.hpp"
#include "qlc/verification.hpp"

struct qlc_poly {
  qlc::IntPoly poly;
};

struct qlc_report {
  bool passed = true;
  std::uint64_t checked = 0;
  std::string summary;
  std::string witness;
};

struct qlc_config {
  qlc::VerificationConfig config;
};

struct qlc_certificate {
  qlc::Certificate cert;
};

namespace {

thread_local std::string g_last_error;

qlc_status fail(qlc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<qlc::Family> family_of(char c) { return qlc::parse_family(std::string_view(&c, 1)); }

// Runs body, translating exceptions into status codes.
template <typename Fn>
qlc_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(QLC_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(QLC_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(QLC_ERR_INTERNAL, e.what());
  }
}

std::unique_ptr<qlc::FamilyCache> open_cache(const char* path) {
  if (path == nullptr || *path == '\0') return nullptr;
  auto cache = std::make_unique<qlc::FamilyCache>(path);
  cache->load();
  return cache;
}

qlc_status save_cache(const std::unique_ptr<qlc::FamilyCache>& cache) {
  if (!cache || !cache->dirty()) return QLC_OK;
  try {
    cache->save();
  } catch (const std::exception& e) {
    return fail(QLC_ERR_IO, e.what());
  }
  return QLC_OK;
}

long to_long(const char* key, const char* value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != std::strlen(value)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("config: ") + key + " expects an integer, got '" + value + "'");
  }
}

}  // namespace

extern "C" {

const char* qlc_version(void) { return qlc::kToolVersion; }
const char* qlc_last_error(void) { return g_last_error.c_str(); }
void qlc_string_free(char* s) { std::free(s); }

qlc_status qlc_family_poly(char family, long n, qlc_poly** out) {
  if (out == nullptr) return fail(QLC_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto tag = family_of(family);
    if (!tag) return fail(QLC_ERR_ARGUMENT, std::string("unknown family '") + family + "'");
    if (n < 0) return fail(QLC_ERR_ARGUMENT, "n must be >= 0");
    *out = new qlc_poly{qlc::family_poly(*tag, n)};
    return QLC_OK;
  });
}

qlc_status qlc_family_polys(char family, long n_from, long n_to, const char* cache_path, qlc_poly*** out,
                            size_t* count) {
  if (out == nullptr || count == nullptr) return fail(QLC_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto tag = family_of(family);
    if (!tag) return fail(QLC_ERR_ARGUMENT, std::string("unknown family '") + family + "'");
    if (n_from < 0 || n_from > n_to) return fail(QLC_ERR_ARGUMENT, "need 0 <= n_from <= n_to");
    auto cache = open_cache(cache_path);
    const std::size_t len = static_cast<std::size_t>(n_to - n_from + 1);
    auto** polys = new qlc_poly*[len];
    for (std::size_t i = 0; i < len; ++i) {
      const long n = n_from + static_cast<long>(i);
      polys[i] = new qlc_poly{cache ? cache->get(*tag, n) : qlc::family_poly(*tag, n)};
    }
    *out = polys;
    *count = len;
    return save_cache(cache);
  });
}

void qlc_poly_array_free(qlc_poly** polys, size_t count) {
  if (polys == nullptr) return;
  for (size_t i = 0; i < count; ++i) delete polys[i];
  delete[] polys;
}

long qlc_poly_degree(const qlc_poly* p) { return p == nullptr ? -1 : p->poly.degree(); }

qlc_status qlc_poly_coeff(const qlc_poly* p, long k, char** out) {
  if (p == nullptr || out == nullptr) return fail(QLC_ERR_ARGUMENT, "null argument");
  *out = dup(qlc::to_decimal(p->poly.coeff(k)));
  return QLC_OK;
}

void qlc_poly_free(qlc_poly* p) { delete p; }

qlc_status qlc_check_qlc(char family, long n_max, unsigned jobs, const char* cache_path, qlc_report** out) {
  if (out == nullptr) return fail(QLC_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto tag = family_of(family);
    if (!tag) return fail(QLC_ERR_ARGUMENT, std::string("unknown family '") + family + "'");
    auto cache = open_cache(cache_path);
    const auto ws = qlc::q_log_convex_direct(*tag, n_max, jobs == 0 ? 1 : jobs, cache.get());
    auto* r = new qlc_report;
    for (const auto& w : ws) {
      r->checked += w.defect.size();
      if (!w.passed() && r->passed) {
        r->passed = false;
        const long k = *w.first_negative_coefficient;
        r->witness = "n=" + std::to_string(w.n) + " k=" + std::to_string(k) +
                     " coefficient=" + qlc::to_decimal(w.defect.coeff(k));
      }
    }
    r->summary = std::string("q-log-convexity of ") + family + "_n for 1 <= n <= " + std::to_string(n_max) + ": " +
                 (r->passed ? "pass" : "fail");
    *out = r;
    return save_cache(cache);
  });
}

qlc_status qlc_check_logconvex(char family, long n_max, qlc_report** out) {
  if (out == nullptr) return fail(QLC_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto tag = family_of(family);
    if (!tag) return fail(QLC_ERR_ARGUMENT, std::string("unknown family '") + family + "'");
    if (n_max < 1) return fail(QLC_ERR_ARGUMENT, "n_max must be >= 1");
    std::vector<qlc::ExactInt> values;
    if (*tag == qlc::Family::D) {
      values = qlc::domb_numbers(n_max + 1);
    } else {
      for (long n = 0; n <= n_max + 1; ++n) values.push_back(qlc::eval_int(qlc::family_poly(*tag, n), 1));
    }
    const qlc::LogConvexResult lc = qlc::log_convex_check(values, false);
    auto* r = new qlc_report;
    r->passed = lc.passed;
    r->checked = values.size() - 2;
    if (!lc.passed) r->witness = "n=" + std::to_string(lc.first_failure);
    r->summary = std::string("log-convexity of ") + family + "_n(1) for 0 <= n <= " + std::to_string(n_max + 1) +
                 ": " + (r->passed ? "pass" : "fail");
    *out = r;
    return QLC_OK;
  });
}

qlc_status qlc_check_crossing(char family, long n_max, unsigned jobs, qlc_report** out) {
  if (out == nullptr) return fail(QLC_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    qlc::CriterionReport rep;
    if (family == 'D') {
      rep = qlc::criterion_verdict(qlc::array_for(qlc::ArrayKind::domb), qlc::central_binomial_weights(), n_max,
                                   qlc::Criterion::self_reciprocal, jobs == 0 ? 1 : jobs);
    } else if (family == 'W') {
      rep = qlc::criterion_verdict(qlc::array_for(qlc::ArrayKind::narayana), qlc::unit_weights(), n_max,
                                   qlc::Criterion::liu_wang, jobs == 0 ? 1 : jobs);
    } else {
      return fail(QLC_ERR_ARGUMENT, "crossing sweeps exist for families D and W only");
    }
    auto* r = new qlc_report;
    r->passed = rep.passed();
    r->checked = rep.cells.size();
    if (!rep.weights.passed) {
      r->witness = "weights fail log-convexity at n=" + std::to_string(rep.weights.first_failure);
    } else if (!rep.c1_passed()) {
      r->witness = "C1 fails at n=" + std::to_string(rep.c1_failures.front());
    } else if (!rep.c2_passed()) {
      const auto [n, t] = rep.c2_violations.front();
      r->witness = "C2 fails at n=" + std::to_string(n) + " t=" + std::to_string(t);
    }
    r->summary = std::string("criterion sweep for ") + family + ": " + rep.conclusion();
    *out = r;
    return QLC_OK;
  });
}

int qlc_report_passed(const qlc_report* r) { return r != nullptr && r->passed ? 1 : 0; }
uint64_t qlc_report_checked(const qlc_report* r) { return r == nullptr ? 0 : r->checked; }
const char* qlc_report_summary(const qlc_report* r) { return r == nullptr ? "" : r->summary.c_str(); }
const char* qlc_report_witness(const qlc_report* r) { return r == nullptr ? "" : r->witness.c_str(); }
void qlc_report_free(qlc_report* r) { delete r; }

qlc_config* qlc_config_new(void) { return new qlc_config; }
void qlc_config_free(qlc_config* c) { delete c; }

qlc_status qlc_config_set(qlc_config* c, const char* key, const char* value) {
  if (c == nullptr || key == nullptr || value == nullptr) return fail(QLC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto& cfg = c->config;
    const std::string_view k(key);
    if (k == "cache_path") {
      if (*value == '\0') {
        cfg.cache_path.reset();
      } else {
        cfg.cache_path = value;
      }
      return QLC_OK;
    }
    const long v = to_long(key, value);
    if (k == "n_max_direct") cfg.n_max_direct = v;
    else if (k == "n_max_factorization") cfg.n_max_factorization = v;
    else if (k == "n_max_sturm") cfg.n_max_sturm = v;
    else if (k == "series_N") cfg.series_N = v;
    else if (k == "n_max_monotonicity") cfg.n_max_monotonicity = v;
    else if (k == "n_max_root_ratio") cfg.n_max_root_ratio = v;
    else if (k == "series_digits" || k == "jobs") {
      if (v < 0) return fail(QLC_ERR_ARGUMENT, std::string(key) + " must be >= 0");
      (k == "jobs" ? cfg.jobs : cfg.series_digits) = static_cast<unsigned>(v);
    } else {
      return fail(QLC_ERR_ARGUMENT, std::string("unknown config key '") + key + "'");
    }
    return QLC_OK;
  });
}

qlc_status qlc_config_set_psi_fault(qlc_config* c, long n, long t, long coefficient, long delta) {
  if (c == nullptr) return fail(QLC_ERR_ARGUMENT, "null config");
  if (n < 1 || t < 0 || coefficient < 0 || delta == 0) return fail(QLC_ERR_ARGUMENT, "invalid psi fault");
  c->config.psi_fault = qlc::PsiFault{n, t, coefficient, delta};
  return QLC_OK;
}

qlc_status qlc_verify(const qlc_config* c, qlc_certificate** out) {
  if (c == nullptr || out == nullptr) return fail(QLC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::string cache_error;
    *out = new qlc_certificate{qlc::run_full_verification(c->config, &cache_error)};
    if (!cache_error.empty()) return fail(QLC_ERR_IO, "cache write failed: " + cache_error);
    return QLC_OK;
  });
}

int qlc_certificate_passed(const qlc_certificate* cert) { return cert != nullptr && cert->cert.passed ? 1 : 0; }

const char* qlc_certificate_timestamp(const qlc_certificate* cert) {
  return cert == nullptr ? "" : cert->cert.timestamp.c_str();
}

size_t qlc_certificate_claim_count(const qlc_certificate* cert) { return cert == nullptr ? 0 : cert->cert.claims.size(); }

qlc_status qlc_certificate_claim(const qlc_certificate* cert, size_t i, const char** id, const char** family,
                                 int* passed) {
  if (cert == nullptr || i >= cert->cert.claims.size()) return fail(QLC_ERR_ARGUMENT, "claim index out of range");
  const auto& r = cert->cert.claims[i];
  if (id != nullptr) *id = r.id.c_str();
  if (family != nullptr) *family = r.family.c_str();
  if (passed != nullptr) *passed = r.passed ? 1 : 0;
  return QLC_OK;
}

size_t qlc_certificate_family_count(const qlc_certificate* cert) {
  return cert == nullptr ? 0 : cert->cert.families().size();
}

qlc_status qlc_certificate_family(const qlc_certificate* cert, size_t i, const char** family, int* passed,
                                  size_t* claims) {
  if (cert == nullptr) return fail(QLC_ERR_ARGUMENT, "null certificate");
  const auto fams = cert->cert.families();
  if (i >= fams.size()) return fail(QLC_ERR_ARGUMENT, "family index out of range");
  // Point into the certificate's own claim storage so the string outlives this call.
  if (family != nullptr) {
    for (const auto& r : cert->cert.claims) {
      if (r.family == fams[i].family) {
        *family = r.family.c_str();
        break;
      }
    }
  }
  if (passed != nullptr) *passed = fams[i].passed ? 1 : 0;
  if (claims != nullptr) *claims = fams[i].claims;
  return QLC_OK;
}

qlc_status qlc_certificate_serialize(const qlc_certificate* cert, const char* format, char** out) {
  if (cert == nullptr || format == nullptr || out == nullptr) return fail(QLC_ERR_ARGUMENT, "null argument");
  const std::string_view f(format);
  qlc::OutputFormat fmt;
  if (f == "json") fmt = qlc::OutputFormat::json;
  else if (f == "csv") fmt = qlc::OutputFormat::csv;
  else if (f == "text") fmt = qlc::OutputFormat::text;
  else return fail(QLC_ERR_ARGUMENT, std::string("unknown format '") + format + "'");
  return guarded([&] {
    *out = dup(qlc::serialize(cert->cert, fmt));
    return QLC_OK;
  });
}

qlc_status qlc_certificate_parse(const char* json, qlc_certificate** out) {
  if (json == nullptr || out == nullptr) return fail(QLC_ERR_ARGUMENT, "null argument");
  try {
    *out = new qlc_certificate{qlc::certificate_from_json(json)};
    return QLC_OK;
  } catch (const std::exception& e) {
    return fail(QLC_ERR_PARSE, e.what());
  }
}

void qlc_certificate_free(qlc_certificate* cert) { delete cert; }

qlc_status qlc_series(long N, unsigned digits, char** partial_sum, char** reference, char** error_bound, int* passed) {
  return guarded([&] {
    if (digits < 1) return fail(QLC_ERR_ARGUMENT, "digits must be >= 1");
    const qlc::SeriesCheck s = qlc::series_check(N, digits);
    if (partial_sum != nullptr) *partial_sum = dup(qlc::to_fixed(s.partial_sum, digits));
    if (reference != nullptr) *reference = dup(qlc::to_fixed(s.reference, digits));
    if (error_bound != nullptr) *error_bound = dup(qlc::to_fixed(s.error_bound, digits + 5));
    if (passed != nullptr) *passed = s.passed ? 1 : 0;
    return QLC_OK;
  });
}

}  // extern "C"
