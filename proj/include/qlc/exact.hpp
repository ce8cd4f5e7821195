#pragma once

// Exact scalar substrate: arbitrary-precision integers and rationals plus a
// shared memoized binomial table.

#include <compare>
#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qlc {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (negative binomial top index, zero denominator, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline int sign(const ExactInt& v) { return sgn(v); }
inline int sign(const ExactRat& v) { return sgn(v); }

/// Reduced rational num/den. Throws DomainError on a zero denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);
inline ExactRat make_rat(long num, long den) { return make_rat(ExactInt(num), ExactInt(den)); }

/// Exact three-way comparison (cross-multiplication on reduced operands).
std::strong_ordering rat_cmp(const ExactRat& a, const ExactRat& b);

std::string to_decimal(const ExactInt& v);
std::string to_string(const ExactRat& v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
ExactInt parse_int(std::string_view text);

/// Decimal expansion of v truncated toward zero after `digits` fractional
/// digits, e.g. "1.4702103877".
std::string to_fixed(const ExactRat& v, unsigned digits);

// Memoized Pascal triangle. Rows are appended under a unique lock and never
// move afterwards (std::deque), so handed-out references stay valid. Reads of
// existing rows take a shared lock only.
class BinomialCache {
 public:
  /// C(n, k); zero for k < 0 or k > n. Throws DomainError for n < 0.
  const ExactInt& get(long n, long k);

  std::size_t rows() const;

  static BinomialCache& shared();

 private:
  void grow_to(long n);

  mutable std::shared_mutex mutex_;
  std::deque<std::vector<ExactInt>> rows_;
};

const ExactInt& binom(long n, long k);

/// C(2k, k). Throws DomainError for k < 0.
const ExactInt& central_binom(long k);

}  // namespace qlc
