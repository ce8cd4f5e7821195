#include "qlc/exact.hpp"

#include <mutex>

namespace qlc {

namespace {
const ExactInt kZero{0};
}

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

std::strong_ordering rat_cmp(const ExactRat& a, const ExactRat& b) {
  // mpq_cmp cross-multiplies reduced operands; no rounding is involved.
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_decimal(const ExactInt& v) { return v.get_str(10); }

std::string to_string(const ExactRat& v) { return v.get_str(10); }

ExactInt parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(s, 10);
}

std::string to_fixed(const ExactRat& v, unsigned digits) {
  ExactInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  ExactInt mag = abs(v.get_num()) * scale;
  ExactInt q;
  mpz_tdiv_q(q.get_mpz_t(), mag.get_mpz_t(), v.get_den().get_mpz_t());
  std::string s = q.get_str(10);
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = (sgn(v) < 0) ? "-" : "";
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - digits);
  }
  return out;
}

BinomialCache& BinomialCache::shared() {
  static BinomialCache cache;
  return cache;
}

std::size_t BinomialCache::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void BinomialCache::grow_to(long n) {
  std::unique_lock lock(mutex_);
  while (static_cast<long>(rows_.size()) <= n) {
    const std::size_t r = rows_.size();
    std::vector<ExactInt> row(r + 1);
    row[0] = 1;
    row[r] = 1;
    if (r > 0) {
      const auto& prev = rows_.back();
      for (std::size_t k = 1; k < r; ++k) row[k] = prev[k - 1] + prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

const ExactInt& BinomialCache::get(long n, long k) {
  if (n < 0) throw DomainError("binom: negative n = " + std::to_string(n));
  if (k < 0 || k > n) return kZero;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<long>(rows_.size()) > n) return rows_[n][k];
  }
  grow_to(n);
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

const ExactInt& binom(long n, long k) { return BinomialCache::shared().get(n, k); }

const ExactInt& central_binom(long k) {
  if (k < 0) throw DomainError("central_binom: negative k = " + std::to_string(k));
  return binom(2 * k, k);
}

}  // namespace qlc
