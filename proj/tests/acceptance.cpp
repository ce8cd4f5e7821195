// Acceptance suite: one line per criterion, exact checks with pinned runtime
// bounds. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include <json.hpp>

#include "qlc/closed_forms.hpp"
#include "qlc/criteria.hpp"
#include "qlc/parallel.hpp"
#include "qlc/proof_verify.hpp"
#include "qlc/series.hpp"
#include "qlc/verification.hpp"

using namespace qlc;

namespace {

unsigned jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

bool records_pass(const std::vector<ClaimRecord>& rs, Outcome& out) {
  for (const auto& r : rs) {
    out.require(r.passed, r.id + ": " + r.detail);
  }
  return out.ok;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_s) out.require(false, "runtime bound exceeded");
  if (!out.ok) ++failures;
  std::printf("criterion %2d: %s  %s (%.2f s, limit %.0f s)%s%s\n", id, out.ok ? "PASS" : "FAIL", title, secs, limit_s,
              out.note.empty() ? "" : "  -- ", out.note.c_str());
  std::fflush(stdout);
}

void qlc_family(Family f, long n_max, Outcome& out) {
  const auto ws = q_log_convex_direct(f, n_max, jobs());
  out.require(static_cast<long>(ws.size()) == n_max, std::string("wrong witness count for ") + to_char(f));
  for (const auto& w : ws) {
    out.require(w.passed(), std::string(1, to_char(f)) + " fails at n=" + std::to_string(w.n));
  }
}

std::string without_timestamp(const Certificate& c) {
  auto doc = nlohmann::ordered_json::parse(to_json(c));
  doc.erase("timestamp");
  return doc.dump();
}

}  // namespace

int main() {
  criterion(1, "L_t(a(n,0)) table for n <= 4", 1, [](Outcome& out) {
    const long expected[14] = {4, 4, 8, 32, 24, 40, 320, 646, 152, 280, 3808, 14296, 7772, 860};
    const TriangularArray& a = array_for(ArrayKind::domb);
    int idx = 0;
    for (long n = 1; n <= 4; ++n) {
      for (long t = 0; t <= n; ++t, ++idx) {
        out.require(op_L(a, n, t, 0) == expected[idx], "mismatch at n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
    out.require(idx == 14, "table size");
  });

  criterion(2, "q-log-convexity of D_n for n <= 200", 60, [](Outcome& out) { qlc_family(Family::D, 200, out); });

  criterion(3, "q-log-convexity of W_n, V_n, f_n for n <= 150", 60, [](Outcome& out) {
    for (Family f : {Family::W, Family::V, Family::F}) qlc_family(f, 150, out);
  });

  criterion(4, "factorization identity and sign coincidence for n <= 60", 120, [](Outcome& out) {
    const ClaimRecord r = factorization_sweep(60, psi_source(), jobs());
    out.require(r.passed, r.detail);
    // sum over n of sum over t of (floor(t/2) + 1)
    std::uint64_t points = 0;
    for (long n = 1; n <= 60; ++n)
      for (long t = 0; t <= n; ++t) points += t / 2 + 1;
    out.require(r.checked == points, "point count " + std::to_string(r.checked));
  });

  criterion(5, "cascade and specialization identities on the [1..17] grid", 30, [](Outcome& out) {
    for (IdentityId id : all_identities()) {
      if (id >= IdentityId::forms_theta) continue;
      const GridResult r = identity_grid_check(id, kIdentityGrid);
      out.require(r.passed, std::string(to_string(id)) + " at n=" + std::to_string(r.n) + " t=" +
                                std::to_string(r.t) + ": " + r.what);
    }
  });

  criterion(6, "endpoint closed forms on the [1..20] grid", 30, [](Outcome& out) {
    auto endpoints = [](FormGroup g) {
      long count = 0;
      for (const ClosedForm* f : closed_forms_in_group(g)) count += f->id.find(".axis") == std::string::npos;
      return count;
    };
    out.require(endpoints(FormGroup::theta) == 14, "expected 14 theta endpoints");
    out.require(endpoints(FormGroup::psi_nn) == 9, "expected 9 psi^(n,n) endpoints");
    for (FormGroup g : {FormGroup::xi_eta, FormGroup::psi_half}) out.require(endpoints(g) > 0, "empty form group");
    for (IdentityId id : all_identities()) {
      if (id < IdentityId::forms_theta) continue;
      const GridResult r = identity_grid_check(id, kEndpointGrid);
      out.require(r.passed, std::string(to_string(id)) + " at n=" + std::to_string(r.n) + " t=" +
                                std::to_string(r.t) + ": " + r.what);
    }
  });

  criterion(7, "Sturm scaffolding and claims for n <= 100", 120, [](Outcome& out) {
    for (long n = 5; n <= 100; ++n) {
      const IntPoly q = expand_theta(n).theta[4];
      int roots = sturm_count_roots(q, ExactRat(0), ExactRat(n - 1));
      if (eval_int(q, ExactInt(n - 1)) == 0) --roots;
      out.require(roots == 1, "theta'''' root count " + std::to_string(roots) + " at n=" + std::to_string(n));
    }
    std::vector<ClaimRecord> rs = verify_claims(4, 100);
    for (const auto& r : rs) {
      if (r.id == "claim1") out.require(r.checked == 9, "claim1 pair count");
    }
    records_pass(rs, out);
    for (const auto& r : verify_prop31(4, 100, jobs())) {
      if (r.id == "prop31.sturm" || r.id == "prop31.theta_sign") out.require(r.passed, r.id + ": " + r.detail);
    }
  });

  criterion(8, "single-crossing C2 for 2 <= n <= 150, t <= n", 120, [](Outcome& out) {
    const TriangularArray& a = array_for(ArrayKind::domb);
    const auto bad = parallel_map(149, jobs(), [&](std::size_t i) -> std::string {
      const long n = static_cast<long>(i) + 2;
      for (const auto& cell : criterion_c2_sweep(a, n, 0, n)) {
        if (!cell.outcome.ok()) return "violation at n=" + std::to_string(n) + " t=" + std::to_string(cell.t);
      }
      return {};
    });
    for (const auto& b : bad) out.require(b.empty(), b);
  });

  criterion(9, "1/pi series partial sum N = 100 within 1e-28", 5, [](Outcome& out) {
    const SeriesCheck s = series_check(100, 40);
    out.require(s.passed, "error bound " + to_fixed(s.error_bound, 40));
    // independent reference from mpmath
    const std::string frozen = "1.4702103877914454653635373288345851770596972809777084074649760541";
    const ExactRat ref(ExactInt(std::string(frozen).erase(1, 1)), ExactInt("1" + std::string(frozen.size() - 2, '0')));
    ExactRat gap = s.partial_sum - ref;
    if (gap < 0) gap = -gap;
    out.require(gap < ExactRat(1) / ExactRat(ExactInt("1" + std::string(28, '0'))), "frozen reference disagrees");
  });

  criterion(10, "ratio, root and root-ratio monotonicity of D_n(1)", 60, [](Outcome& out) {
    const MonotonicityReport m = root_monotonicity_check(300, 120, jobs());
    out.require(!m.ratio_failure, "ratio at n=" + std::to_string(m.ratio_failure.value_or(-1)));
    out.require(!m.root_failure, "root at n=" + std::to_string(m.root_failure.value_or(-1)));
    out.require(!m.root_ratio_failure, "root ratio at n=" + std::to_string(m.root_ratio_failure.value_or(-1)));
  });

  criterion(11, "certificate determinism and fault detection", 120, [](Outcome& out) {
    VerificationConfig cfg;
    cfg.jobs = jobs();
    const Certificate a = run_full_verification(cfg);
    const Certificate b = run_full_verification(cfg);
    out.require(a.passed, "default run fails");
    out.require(without_timestamp(a) == without_timestamp(b), "runs differ beyond the timestamp");
    cfg.psi_fault = PsiFault{5, 3, 2, 1};
    const Certificate f = run_full_verification(cfg);
    out.require(!f.passed, "fault not detected");
    const ClaimRecord* rec = f.find("factorization");
    out.require(rec != nullptr && !rec->passed, "factorization record did not fail");
    if (rec != nullptr && rec->witnesses.size() >= 2) {
      out.require(rec->witnesses[0].second == "5" && rec->witnesses[1].second == "3", "fault not pinpointed");
    }
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
