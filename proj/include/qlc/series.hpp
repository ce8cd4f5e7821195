#pragma once

// The 1/pi series sum_{n>=0} (5n+1) D_n(1) / 64^n = 8 / (sqrt(3) pi).

#include "qlc/exact.hpp"

namespace qlc {

/// Exact partial sum over n = 0..N. Throws std::invalid_argument for N < 0.
ExactRat chan_partial_sum(long N);

/// floor(8 / (sqrt(3) pi) * 10^digits), accurate to within one unit in the
/// last place. pi comes from Machin's formula, sqrt(3) from an integer
/// square root, both carried with guard digits. Requires digits >= 1.
ExactInt chan_constant_scaled(unsigned digits);

/// chan_constant_scaled(digits) / 10^digits.
ExactRat chan_constant(unsigned digits);

struct SeriesCheck {
  long N = 0;
  unsigned digits = 0;
  ExactRat partial_sum;
  ExactRat reference;
  ExactRat error_bound;  // |S_N - R| + 10^-digits, an upper bound on |S_N - 8/(sqrt(3) pi)|
  ExactRat tolerance;
  bool passed = false;
};

inline constexpr int kSeriesToleranceExponent = 28;

/// Passes iff |S_N - R| + 10^-digits < 10^-28.
SeriesCheck series_check(long N, unsigned digits);

}  // namespace qlc
