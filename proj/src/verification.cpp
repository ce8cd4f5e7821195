#include "qlc/verification.hpp"

#include <stdexcept>

#include "qlc/criteria.hpp"
#include "qlc/families.hpp"
#include "qlc/family_cache.hpp"
#include "qlc/series.hpp"

namespace qlc {

void VerificationConfig::validate() const {
  const long bounds[] = {n_max_direct, n_max_factorization, n_max_sturm, series_N, n_max_monotonicity,
                         n_max_root_ratio};
  for (long b : bounds) {
    if (b < 1) throw std::invalid_argument("verification config: all bounds must be >= 1");
  }
  if (series_digits < 10) throw std::invalid_argument("verification config: series_digits must be >= 10");
  if (jobs < 1) throw std::invalid_argument("verification config: jobs must be >= 1");
}

const std::vector<std::string>& claim_families() {
  static const std::vector<std::string> families = {
      "prop31", "prop32", "prop33", "claims123", "factorization", "cascade", "endpoints",
      "crossing", "qlc_D",  "qlc_W",  "qlc_V",     "qlc_F",         "series",  "monotonicity"};
  return families;
}

namespace {

using Records = std::vector<ClaimRecord>;

ClaimRecord error_record(const std::string& family, const std::exception& e) {
  ClaimRecord r;
  r.id = family + ".error";
  r.family = family;
  r.fail(std::string("exception: ") + e.what());
  return r;
}

std::string grid_string(const GridBounds& g) {
  return "n=" + std::to_string(g.n_lo) + ".." + std::to_string(g.n_hi) + ",t=" + std::to_string(g.t_lo) + ".." +
         std::to_string(g.t_hi);
}

Records crossing_records(const VerificationConfig& cfg) {
  Records out;
  const CriterionReport d =
      criterion_verdict(array_for(ArrayKind::domb), central_binomial_weights(), cfg.n_max_direct,
                        Criterion::self_reciprocal, cfg.jobs);
  auto add = [&out](const CriterionReport& r, const std::string& prefix) {
    ClaimRecord w;
    w.id = prefix + ".weights";
    w.family = "crossing";
    w.param("n_hi", r.n_max);
    w.checked = 1;
    if (!r.weights.passed) w.fail("weights not log-convex").witness("n", r.weights.first_failure);
    out.push_back(std::move(w));

    if (r.criterion == Criterion::self_reciprocal) {
      ClaimRecord c1;
      c1.id = prefix + ".c1";
      c1.family = "crossing";
      c1.param("n_lo", 0).param("n_hi", r.n_max);
      c1.checked = static_cast<std::uint64_t>(r.n_max + 1);
      if (!r.c1_passed()) c1.fail("assembled polynomial not self-reciprocal").witness("n", r.c1_failures.front());
      out.push_back(std::move(c1));
    }

    ClaimRecord c2;
    c2.id = prefix + ".c2";
    c2.family = "crossing";
    c2.param("n_lo", 1).param("n_hi", r.n_max);
    c2.param("t_range", r.criterion == Criterion::self_reciprocal ? "0..n" : "0..2n");
    c2.checked = r.cells.size();
    if (!r.c2_passed()) {
      const auto [n, t] = r.c2_violations.front();
      c2.fail("operator values not single-crossing").witness("n", n).witness("t", t);
      for (const auto& cell : r.cells) {
        if (cell.n == n && cell.t == t) {
          c2.witness("k", cell.outcome.index).witness("value", to_decimal(cell.outcome.value));
          break;
        }
      }
    }
    c2.detail = c2.passed ? r.conclusion() : c2.detail + "; " + r.conclusion();
    out.push_back(std::move(c2));
  };
  add(d, "crossing.domb");
  const CriterionReport w = criterion_verdict(array_for(ArrayKind::narayana), unit_weights(), cfg.n_max_direct,
                                              Criterion::liu_wang, cfg.jobs);
  add(w, "crossing.narayana_lw");
  return out;
}

ClaimRecord qlc_record(Family tag, const VerificationConfig& cfg, FamilyCache* cache) {
  ClaimRecord r;
  r.family = std::string("qlc_") + to_char(tag);
  r.id = r.family;
  r.param("n_lo", 1).param("n_hi", cfg.n_max_direct);
  const auto witnesses = q_log_convex_direct(tag, cfg.n_max_direct, cfg.jobs, cache);
  for (const auto& w : witnesses) {
    r.checked += static_cast<std::uint64_t>(w.defect.size());
    if (!w.passed() && r.passed) {
      const long k = *w.first_negative_coefficient;
      r.fail("f_{n+1} f_{n-1} - f_n^2 has a negative coefficient");
      r.witness("n", w.n).witness("k", k).witness("coefficient", to_decimal(w.defect.coeff(k)));
    }
  }
  return r;
}

ClaimRecord domb_numbers_record(const VerificationConfig& cfg) {
  ClaimRecord r;
  r.family = "qlc_D";
  r.id = "qlc_D.numbers";
  r.param("n_lo", 1).param("n_hi", cfg.n_max_direct);
  const auto d = domb_numbers(cfg.n_max_direct + 1);
  const LogConvexResult lc = log_convex_check(d, false);
  r.checked = d.size() - 2;
  if (!lc.passed) r.fail("Domb numbers not log-convex").witness("n", lc.first_failure);
  return r;
}

ClaimRecord series_record(const VerificationConfig& cfg) {
  const SeriesCheck s = series_check(cfg.series_N, cfg.series_digits);
  ClaimRecord r;
  r.family = "series";
  r.id = "series";
  r.param("N", s.N).param("digits", static_cast<long>(s.digits));
  r.param("tolerance", "1e-" + std::to_string(kSeriesToleranceExponent));
  r.checked = 1;
  const unsigned shown = s.digits + 5;
  r.witness("partial_sum", to_fixed(s.partial_sum, s.digits));
  r.witness("reference", to_fixed(s.reference, s.digits));
  r.witness("error_bound", to_fixed(s.error_bound, shown));
  if (!s.passed) r.fail("partial sum not within tolerance of 8/(sqrt(3) pi)");
  return r;
}

Records monotonicity_records(const VerificationConfig& cfg) {
  Records out(3);
  out[0].id = "monotonicity.ratio";
  out[1].id = "monotonicity.root";
  out[2].id = "monotonicity.root_ratio";
  for (auto& r : out) r.family = "monotonicity";
  if (cfg.n_max_monotonicity < 2) {
    for (auto& r : out) r.param("n_hi", cfg.n_max_monotonicity).detail = "range empty";
    return out;
  }
  const MonotonicityReport m = root_monotonicity_check(cfg.n_max_monotonicity, cfg.n_max_root_ratio, cfg.jobs);
  out[0].param("n_lo", 0).param("n_hi", m.n_max - 1);
  out[0].checked = m.ratio_checked;
  if (m.ratio_failure) out[0].fail("D_{n+1}/D_n not increasing").witness("n", *m.ratio_failure);
  out[1].param("n_lo", 1).param("n_hi", m.n_max - 1);
  out[1].checked = m.root_checked;
  if (m.root_failure) out[1].fail("n-th roots not increasing").witness("n", *m.root_failure);
  out[2].param("n_lo", 1).param("n_hi", m.root_ratio_max);
  out[2].checked = m.root_ratio_checked;
  if (m.root_ratio_failure) out[2].fail("root ratios not decreasing").witness("n", *m.root_ratio_failure);
  return out;
}

}  // namespace

Certificate run_full_verification(const VerificationConfig& cfg, std::string* cache_error) {
  cfg.validate();
  Certificate cert;
  auto& p = cert.parameters;
  p.emplace_back("n_max_direct", std::to_string(cfg.n_max_direct));
  p.emplace_back("n_max_factorization", std::to_string(cfg.n_max_factorization));
  p.emplace_back("n_max_sturm", std::to_string(cfg.n_max_sturm));
  p.emplace_back("series_N", std::to_string(cfg.series_N));
  p.emplace_back("series_digits", std::to_string(cfg.series_digits));
  p.emplace_back("series_tolerance", "1e-" + std::to_string(kSeriesToleranceExponent));
  p.emplace_back("n_max_monotonicity", std::to_string(cfg.n_max_monotonicity));
  p.emplace_back("n_max_root_ratio", std::to_string(cfg.n_max_root_ratio));
  p.emplace_back("identity_grid", grid_string(cfg.identity_grid));
  p.emplace_back("endpoint_grid", grid_string(cfg.endpoint_grid));
  if (cfg.psi_fault) {
    const PsiFault& f = *cfg.psi_fault;
    p.emplace_back("psi_fault", "n=" + std::to_string(f.n) + ",t=" + std::to_string(f.t) +
                                    ",coefficient=" + std::to_string(f.coefficient) + ",delta=" + std::to_string(f.delta));
  }

  const PsiSource psi = psi_source(cfg.psi_fault);
  std::optional<FamilyCache> cache;
  if (cfg.cache_path) {
    cache.emplace(*cfg.cache_path);
    cache->load();
  }

  auto run = [&](const std::string& family, const std::function<Records()>& body) {
    try {
      for (auto& r : body()) cert.claims.push_back(std::move(r));
    } catch (const std::exception& e) {
      cert.claims.push_back(error_record(family, e));
    }
  };
  auto one = [](ClaimRecord r) { return Records{std::move(r)}; };

  run("prop31", [&] { return verify_prop31(cfg.n_max_direct, cfg.n_max_sturm, cfg.jobs); });
  run("prop32", [&] { return verify_prop32(cfg.n_max_sturm, psi, cfg.jobs); });
  run("prop33", [&] { return verify_prop33(cfg.n_max_sturm, cfg.jobs); });
  run("claims123", [&] { return verify_claims(1, cfg.n_max_sturm, psi); });
  run("factorization", [&] { return one(factorization_sweep(cfg.n_max_factorization, psi, cfg.jobs)); });
  run("cascade", [&] {
    Records out;
    for (IdentityId id : all_identities()) {
      if (id >= IdentityId::forms_theta) continue;
      out.push_back(to_claim(identity_grid_check(id, cfg.identity_grid, psi), "cascade", cfg.identity_grid));
    }
    return out;
  });
  run("endpoints", [&] {
    Records out;
    for (IdentityId id : all_identities()) {
      if (id < IdentityId::forms_theta) continue;
      out.push_back(to_claim(identity_grid_check(id, cfg.endpoint_grid, psi), "endpoints", cfg.endpoint_grid));
    }
    return out;
  });
  run("crossing", [&] { return crossing_records(cfg); });
  for (Family tag : {Family::D, Family::W, Family::V, Family::F}) {
    const std::string family = std::string("qlc_") + to_char(tag);
    run(family, [&] {
      Records out = one(qlc_record(tag, cfg, cache ? &*cache : nullptr));
      if (tag == Family::D) out.push_back(domb_numbers_record(cfg));
      return out;
    });
  }
  run("series", [&] { return one(series_record(cfg)); });
  run("monotonicity", [&] { return monotonicity_records(cfg); });

  if (cache && cache->dirty()) {
    try {
      cache->save();
    } catch (const std::exception& e) {
      if (cache_error != nullptr) *cache_error = e.what();
    }
  }
  cert.timestamp = utc_timestamp();
  cert.finalize();
  return cert;
}

}  // namespace qlc
