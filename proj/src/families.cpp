#include "qlc/families.hpp"

#include <mutex>
#include <string>

namespace qlc {

const char* to_string(ArrayKind kind) {
  return kind == ArrayKind::domb ? "domb_a" : "narayana_a";
}

char to_char(Family f) {
  switch (f) {
    case Family::D: return 'D';
    case Family::W: return 'W';
    case Family::V: return 'V';
    case Family::F: return 'F';
  }
  return '?';
}

std::optional<Family> parse_family(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'D': case 'd': return Family::D;
    case 'W': case 'w': return Family::W;
    case 'V': case 'v': return Family::V;
    case 'F': case 'f': return Family::F;
    default: return std::nullopt;
  }
}

namespace {
const ExactInt kZero{0};
}

ExactInt TriangularArray::compute(long n, long k) const {
  ExactInt sq = binom(n, k) * binom(n, k);
  if (kind_ == ArrayKind::narayana) return sq;
  return sq * binom(2 * n - 2 * k, n - k);
}

const ExactInt& TriangularArray::operator()(long n, long k) const {
  if (n < 0) throw DomainError("a(n,k): negative n = " + std::to_string(n));
  if (k < 0 || k > n) return kZero;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<long>(rows_.size()) > n) return rows_[n][k];
  }
  std::unique_lock lock(mutex_);
  while (static_cast<long>(rows_.size()) <= n) {
    const long r = static_cast<long>(rows_.size());
    std::vector<ExactInt> row(r + 1);
    for (long j = 0; j <= r; ++j) row[j] = compute(r, j);
    rows_.push_back(std::move(row));
  }
  return rows_[n][k];
}

const TriangularArray& array_for(ArrayKind kind) {
  static const TriangularArray domb(ArrayKind::domb);
  static const TriangularArray narayana(ArrayKind::narayana);
  return kind == ArrayKind::domb ? domb : narayana;
}

const ExactInt& coeff_a(ArrayKind kind, long n, long k) { return array_for(kind)(n, k); }

WeightSequence central_binomial_weights() {
  return [](long k) { return central_binom(k); };
}

WeightSequence unit_weights() {
  return [](long) { return ExactInt(1); };
}

IntPoly weighted_assembly(const TriangularArray& a, const WeightSequence& u, long n) {
  if (n < 0) throw DomainError("weighted_assembly: negative n");
  std::vector<ExactInt> c(n + 1);
  for (long k = 0; k <= n; ++k) c[k] = a(n, k) * u(k);
  return IntPoly(std::move(c));
}

IntPoly family_poly(Family tag, long n) {
  if (n < 0) throw DomainError("family_poly: negative n = " + std::to_string(n));
  std::vector<ExactInt> c(n + 1);
  for (long k = 0; k <= n; ++k) {
    ExactInt v = binom(n, k) * binom(n, k);
    switch (tag) {
      case Family::D: v *= central_binom(k) * binom(2 * n - 2 * k, n - k); break;
      case Family::W: break;
      case Family::V: v *= central_binom(k); break;
      case Family::F: v *= binom(2 * n - 2 * k, n - k); break;
    }
    c[k] = std::move(v);
  }
  return IntPoly(std::move(c));
}

ExactInt domb_number(long n) {
  IntPoly d = family_poly(Family::D, n);
  ExactInt s(0);
  for (const auto& c : d.coeffs()) s += c;
  return s;
}

std::vector<ExactInt> domb_numbers(long n_max) {
  std::vector<ExactInt> out;
  out.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(domb_number(n));
  return out;
}

}  // namespace qlc
