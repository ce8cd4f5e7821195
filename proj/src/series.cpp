#include "qlc/series.hpp"

#include <stdexcept>

#include "qlc/families.hpp"

namespace qlc {

namespace {

ExactInt pow10(unsigned e) {
  ExactInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

// atan(1/x) * scale, truncated term by term.
ExactInt arctan_inv(long x, const ExactInt& scale) {
  const ExactInt x2 = ExactInt(x) * x;
  ExactInt power = scale / x;  // scale / x^(2k+1)
  ExactInt sum = power;
  for (long k = 1; power != 0; ++k) {
    power /= x2;
    const ExactInt term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

ExactRat chan_partial_sum(long N) {
  if (N < 0) throw std::invalid_argument("chan_partial_sum: N must be >= 0");
  const std::vector<ExactInt> d = domb_numbers(N);
  // Common denominator 64^N.
  ExactInt num = 0;
  ExactInt scale = 1;
  for (long n = N; n >= 0; --n) {
    num += ExactInt(5 * n + 1) * d[n] * scale;
    scale *= 64;
  }
  ExactInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 64, static_cast<unsigned long>(N));
  return make_rat(num, den);
}

ExactInt chan_constant_scaled(unsigned digits) {
  if (digits < 1) throw std::invalid_argument("chan_constant: digits must be >= 1");
  const unsigned guard = 20;
  const ExactInt scale = pow10(digits + guard);
  // pi = 16 atan(1/5) - 4 atan(1/239)
  const ExactInt pi = 16 * arctan_inv(5, scale) - 4 * arctan_inv(239, scale);
  ExactInt sqrt3;
  const ExactInt three_scaled = 3 * scale * scale;
  mpz_sqrt(sqrt3.get_mpz_t(), three_scaled.get_mpz_t());
  // 8 / (sqrt3 pi) at the guarded scale: 8 * scale^3 / (sqrt3 * pi)
  const ExactInt value = 8 * scale * scale * scale / (sqrt3 * pi);
  return value / pow10(guard);
}

ExactRat chan_constant(unsigned digits) { return make_rat(chan_constant_scaled(digits), pow10(digits)); }

SeriesCheck series_check(long N, unsigned digits) {
  SeriesCheck c;
  c.N = N;
  c.digits = digits;
  c.partial_sum = chan_partial_sum(N);
  c.reference = chan_constant(digits);
  c.error_bound = abs(c.partial_sum - c.reference) + make_rat(ExactInt(1), pow10(digits));
  c.tolerance = make_rat(ExactInt(1), pow10(kSeriesToleranceExponent));
  c.passed = c.error_bound < c.tolerance;
  return c;
}

}  // namespace qlc
