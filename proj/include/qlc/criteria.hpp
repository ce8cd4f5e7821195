#pragma once

// Log-convexity and q-log-convexity checks, the triangular-array operators
// L_t and L~_t, the single-crossing condition, and the criterion pipelines
// built on them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlc/families.hpp"
#include "qlc/polynomial.hpp"

namespace qlc {

class FamilyCache;

struct LogConvexResult {
  bool passed = true;
  long first_failure = -1;  // index n with a_{n-1} a_{n+1} < a_n^2 (or <= when strict)
};

/// Requires length >= 3 and every entry positive (std::invalid_argument).
LogConvexResult log_convex_check(std::span<const ExactInt> seq, bool strict);

struct QlcWitness {
  long n = 0;
  IntPoly defect;  // f_{n+1} f_{n-1} - f_n^2
  std::optional<long> first_negative_coefficient;

  bool passed() const { return !first_negative_coefficient.has_value(); }
};

/// Witnesses for n = 1 .. polys.size()-2 of the given sequence f_0, f_1, ...
std::vector<QlcWitness> q_log_convex_sequence(std::span<const IntPoly> polys, unsigned jobs = 1);

/// Witnesses for 1 <= n <= n_max of the chosen family.
std::vector<QlcWitness> q_log_convex_direct(Family tag, long n_max, unsigned jobs = 1,
                                            FamilyCache* cache = nullptr);

enum class Operator { L, L_tilde };

/// a(n+1,k)a(n-1,t-k) + a(n-1,k)a(n+1,t-k) - 2a(n,k)a(n,t-k).
/// Requires n >= 1, 0 <= t <= 2n and 0 <= k <= t/2 (std::invalid_argument).
ExactInt op_L(const TriangularArray& a, long n, long t, long k);

/// op_L except at the even midpoint k = t/2, where it is
/// a(n+1,k)a(n-1,k) - a(n,k)^2.
ExactInt op_L_tilde(const TriangularArray& a, long n, long t, long k);

ExactInt apply(Operator op, const TriangularArray& a, long n, long t, long k);

struct SignCrossing {
  enum class Kind { crossing, all_nonnegative, violation };

  Kind kind = Kind::all_nonnegative;
  // crossing: k' (values[k] >= 0 for k <= k', <= 0 afterwards; -1 when every
  // value is nonpositive). violation: first index holding a positive value
  // after a strictly negative one. Unused (-1) for all_nonnegative.
  long index = -1;
  ExactInt value;  // values[index] for a violation

  bool ok() const { return kind != Kind::violation; }
};

const char* to_string(SignCrossing::Kind kind);

/// Zeros count as both signs. An empty sequence is vacuously all_nonnegative.
SignCrossing single_crossing(std::span<const ExactInt> values);

struct CrossingCell {
  long n = 0;
  long t = 0;
  std::vector<ExactInt> values;  // operator values for k = 0 .. floor(t/2)
  SignCrossing outcome;
};

/// One cell per t in [t_lo, t_hi].
std::vector<CrossingCell> criterion_c2_sweep(const TriangularArray& a, long n, long t_lo, long t_hi,
                                             Operator op = Operator::L);

enum class Criterion {
  self_reciprocal,  // C1 + C2 with L_t on 0 <= t <= n
  liu_wang,         // L~_t on 0 <= t <= 2n
};

struct CriterionReport {
  Criterion criterion = Criterion::self_reciprocal;
  long n_max = 0;
  LogConvexResult weights;
  std::vector<long> c1_failures;     // n with g_n not self-reciprocal of degree n
  std::vector<CrossingCell> cells;   // ordered by (n, t)
  std::vector<std::pair<long, long>> c2_violations;

  bool c1_passed() const { return c1_failures.empty(); }
  bool c2_passed() const { return c2_violations.empty(); }
  bool passed() const { return weights.passed && c1_passed() && c2_passed(); }
  /// Finite-scale statement of what was checked.
  std::string conclusion() const;
};

CriterionReport criterion_verdict(const TriangularArray& a, const WeightSequence& u, long n_max,
                                  Criterion criterion = Criterion::self_reciprocal,
                                  unsigned jobs = 1);

struct MonotonicityReport {
  long n_max = 0;
  long root_ratio_max = 0;
  std::optional<long> ratio_failure;       // n with D_{n+1}/D_n >= D_{n+2}/D_{n+1}
  std::optional<long> root_failure;        // n with D_{n+1}^n <= D_n^{n+1}
  std::optional<long> root_ratio_failure;  // n breaking the root-ratio decrease
  std::size_t ratio_checked = 0;
  std::size_t root_checked = 0;
  std::size_t root_ratio_checked = 0;

  bool passed() const { return !ratio_failure && !root_failure && !root_ratio_failure; }
};

/// Exact integer comparisons: ratios D_{n+1}/D_n strictly increasing for
/// 0 <= n <= n_max; n-th roots strictly increasing for 1 <= n < n_max; root
/// ratio strictly decreasing for 1 <= n <= root_ratio_max.
MonotonicityReport root_monotonicity_check(long n_max, long root_ratio_max, unsigned jobs = 1);

}  // namespace qlc
