#include "qlc/criteria.hpp"

#include <stdexcept>

#include "qlc/family_cache.hpp"
#include "qlc/parallel.hpp"

namespace qlc {

LogConvexResult log_convex_check(std::span<const ExactInt> seq, bool strict) {
  if (seq.size() < 3) throw std::invalid_argument("log_convex_check: need at least 3 terms");
  for (const auto& v : seq) {
    if (sgn(v) <= 0) throw std::invalid_argument("log_convex_check: entries must be positive");
  }
  ExactInt lhs, rhs;
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    lhs = seq[n - 1] * seq[n + 1];
    rhs = seq[n] * seq[n];
    const int c = cmp(lhs, rhs);
    if (c < 0 || (strict && c == 0)) return {false, static_cast<long>(n)};
  }
  return {};
}

std::vector<QlcWitness> q_log_convex_sequence(std::span<const IntPoly> polys, unsigned jobs) {
  const std::size_t count = polys.size() >= 3 ? polys.size() - 2 : 0;
  return parallel_map(count, jobs, [&](std::size_t i) {
    const std::size_t n = i + 1;
    QlcWitness w;
    w.n = static_cast<long>(n);
    w.defect = polys[n + 1] * polys[n - 1] - polys[n] * polys[n];
    const long neg = first_negative_coefficient(w.defect);
    if (neg >= 0) w.first_negative_coefficient = neg;
    return w;
  });
}

std::vector<QlcWitness> q_log_convex_direct(Family tag, long n_max, unsigned jobs, FamilyCache* cache) {
  if (n_max < 1) throw std::invalid_argument("q_log_convex_direct: n_max must be >= 1");
  std::vector<IntPoly> polys(n_max + 2);
  if (cache != nullptr) {
    for (long n = 0; n <= n_max + 1; ++n) polys[n] = cache->get(tag, n);
  } else {
    polys = parallel_map(n_max + 2, jobs, [tag](std::size_t n) { return family_poly(tag, static_cast<long>(n)); });
  }
  return q_log_convex_sequence(polys, jobs);
}

namespace {
void check_operator_args(long n, long t, long k) {
  if (n < 1) throw std::invalid_argument("operator: n must be >= 1");
  if (t < 0 || t > 2 * n) throw std::invalid_argument("operator: t outside 0..2n");
  if (k < 0 || 2 * k > t) throw std::invalid_argument("operator: k outside 0..t/2");
}
}  // namespace

ExactInt op_L(const TriangularArray& a, long n, long t, long k) {
  check_operator_args(n, t, k);
  ExactInt v = a(n + 1, k) * a(n - 1, t - k);
  v += a(n - 1, k) * a(n + 1, t - k);
  v -= 2 * a(n, k) * a(n, t - k);
  return v;
}

ExactInt op_L_tilde(const TriangularArray& a, long n, long t, long k) {
  check_operator_args(n, t, k);
  if (2 * k == t) {
    ExactInt v = a(n + 1, k) * a(n - 1, k);
    v -= a(n, k) * a(n, k);
    return v;
  }
  return op_L(a, n, t, k);
}

ExactInt apply(Operator op, const TriangularArray& a, long n, long t, long k) {
  return op == Operator::L ? op_L(a, n, t, k) : op_L_tilde(a, n, t, k);
}

const char* to_string(SignCrossing::Kind kind) {
  switch (kind) {
    case SignCrossing::Kind::crossing: return "crossing";
    case SignCrossing::Kind::all_nonnegative: return "all_nonnegative";
    case SignCrossing::Kind::violation: return "violation";
  }
  return "?";
}

SignCrossing single_crossing(std::span<const ExactInt> values) {
  long first_negative = -1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int s = sgn(values[i]);
    if (s < 0 && first_negative < 0) first_negative = static_cast<long>(i);
    if (s > 0 && first_negative >= 0) {
      return {SignCrossing::Kind::violation, static_cast<long>(i), values[i]};
    }
  }
  if (first_negative < 0) return {SignCrossing::Kind::all_nonnegative, -1, ExactInt(0)};
  return {SignCrossing::Kind::crossing, first_negative - 1, ExactInt(0)};
}

std::vector<CrossingCell> criterion_c2_sweep(const TriangularArray& a, long n, long t_lo, long t_hi, Operator op) {
  std::vector<CrossingCell> cells;
  for (long t = t_lo; t <= t_hi; ++t) {
    CrossingCell cell;
    cell.n = n;
    cell.t = t;
    for (long k = 0; 2 * k <= t; ++k) cell.values.push_back(apply(op, a, n, t, k));
    cell.outcome = single_crossing(cell.values);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string CriterionReport::conclusion() const {
  const std::string scope = "hypotheses verified for n <= " + std::to_string(n_max);
  if (passed()) return scope;
  return "hypotheses NOT verified for n <= " + std::to_string(n_max);
}

CriterionReport criterion_verdict(const TriangularArray& a, const WeightSequence& u, long n_max,
                                  Criterion criterion, unsigned jobs) {
  if (n_max < 1) throw std::invalid_argument("criterion_verdict: n_max must be >= 1");
  CriterionReport report;
  report.criterion = criterion;
  report.n_max = n_max;

  std::vector<ExactInt> weights;
  for (long k = 0; k <= std::max<long>(n_max + 1, 2); ++k) weights.push_back(u(k));
  report.weights = log_convex_check(weights, false);

  if (criterion == Criterion::self_reciprocal) {
    for (long n = 0; n <= n_max; ++n) {
      const IntPoly g = weighted_assembly(a, u, n);
      if (g.degree() != n || !is_self_reciprocal(g, n)) report.c1_failures.push_back(n);
    }
  }

  auto per_n = parallel_map(n_max, jobs, [&](std::size_t i) {
    const long n = static_cast<long>(i) + 1;
    return criterion == Criterion::self_reciprocal ? criterion_c2_sweep(a, n, 0, n, Operator::L)
                                                   : criterion_c2_sweep(a, n, 0, 2 * n, Operator::L_tilde);
  });
  for (auto& cells : per_n) {
    for (auto& cell : cells) {
      if (!cell.outcome.ok()) report.c2_violations.emplace_back(cell.n, cell.t);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

MonotonicityReport root_monotonicity_check(long n_max, long root_ratio_max, unsigned jobs) {
  if (n_max < 2) throw std::invalid_argument("root_monotonicity_check: n_max must be >= 2");
  MonotonicityReport r;
  r.n_max = n_max;
  r.root_ratio_max = root_ratio_max;
  const long top = std::max(n_max + 1, root_ratio_max + 2);
  const std::vector<ExactInt> d = parallel_map(top + 1, jobs, [](std::size_t n) { return domb_number(static_cast<long>(n)); });

  ExactInt lhs, rhs;
  for (long n = 0; n < n_max; ++n) {
    // D_{n+1}/D_n < D_{n+2}/D_{n+1}  <=>  D_{n+1}^2 < D_n D_{n+2}
    lhs = d[n + 1] * d[n + 1];
    rhs = d[n] * d[n + 2];
    ++r.ratio_checked;
    if (cmp(lhs, rhs) >= 0 && !r.ratio_failure) r.ratio_failure = n;
  }
  for (long n = 1; n < n_max; ++n) {
    mpz_pow_ui(lhs.get_mpz_t(), d[n + 1].get_mpz_t(), n);
    mpz_pow_ui(rhs.get_mpz_t(), d[n].get_mpz_t(), n + 1);
    ++r.root_checked;
    if (cmp(lhs, rhs) <= 0 && !r.root_failure) r.root_failure = n;
  }
  // D_{n+1}^{1/(n+1)} / D_n^{1/n} > D_{n+2}^{1/(n+2)} / D_{n+1}^{1/(n+1)}, cleared of
  // roots by raising to n(n+1)(n+2).
  const auto ok = parallel_map(root_ratio_max > 0 ? root_ratio_max : 0, jobs, [&](std::size_t i) {
    const unsigned long n = i + 1;
    ExactInt left, a, b;
    mpz_pow_ui(left.get_mpz_t(), d[n + 1].get_mpz_t(), 2 * n * (n + 2));
    mpz_pow_ui(a.get_mpz_t(), d[n].get_mpz_t(), (n + 1) * (n + 2));
    mpz_pow_ui(b.get_mpz_t(), d[n + 2].get_mpz_t(), n * (n + 1));
    a *= b;
    return static_cast<int>(cmp(left, a) > 0);
  });
  r.root_ratio_checked = ok.size();
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (!ok[i]) {
      r.root_ratio_failure = static_cast<long>(i) + 1;
      break;
    }
  }
  return r;
}

}  // namespace qlc
