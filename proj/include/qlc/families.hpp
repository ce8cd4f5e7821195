#pragma once

// Triangular arrays a(n,k), weight sequences, and the polynomial families
// D_n (Domb), W_n (Narayana type B), V_n (weighted Narayana), f_n.

#include <deque>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "qlc/exact.hpp"
#include "qlc/polynomial.hpp"

namespace qlc {

enum class ArrayKind {
  domb,      // C(n,k)^2 C(2n-2k, n-k)
  narayana,  // C(n,k)^2
};

enum class Family { D, W, V, F };

const char* to_string(ArrayKind kind);
char to_char(Family f);
/// Accepts "D", "W", "V", "F" (case-insensitive).
std::optional<Family> parse_family(std::string_view s);

// Memoized a(n,k); zero outside 0 <= k <= n. Shared by concurrent sweeps.
class TriangularArray {
 public:
  explicit TriangularArray(ArrayKind kind) : kind_(kind) {}
  TriangularArray(const TriangularArray&) = delete;
  TriangularArray& operator=(const TriangularArray&) = delete;

  ArrayKind kind() const { return kind_; }

  /// Throws DomainError for n < 0.
  const ExactInt& operator()(long n, long k) const;

 private:
  ExactInt compute(long n, long k) const;

  ArrayKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<ExactInt>> rows_;
};

const TriangularArray& array_for(ArrayKind kind);

const ExactInt& coeff_a(ArrayKind kind, long n, long k);

using WeightSequence = std::function<ExactInt(long)>;

WeightSequence central_binomial_weights();
WeightSequence unit_weights();

/// sum_k a(n,k) u_k q^k
IntPoly weighted_assembly(const TriangularArray& a, const WeightSequence& u, long n);

/// Exact defining coefficients; throws DomainError for n < 0.
IntPoly family_poly(Family tag, long n);

/// D_n(1).
ExactInt domb_number(long n);

/// D_0(1), ..., D_{n_max}(1).
std::vector<ExactInt> domb_numbers(long n_max);

}  // namespace qlc
