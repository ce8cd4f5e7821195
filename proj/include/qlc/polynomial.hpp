#pragma once

// Dense univariate polynomials over ExactInt / ExactRat, exact evaluation,
// self-reciprocity, and Sturm-sequence root counting on rational intervals.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qlc/exact.hpp"

namespace qlc {

// Coefficients ascend by exponent; trailing zeros are always stripped, so the
// zero polynomial is the empty sequence and degree() == -1 for it.
template <typename Coeff>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Coeff v) { return Poly(std::vector<Coeff>{std::move(v)}); }
  /// The polynomial x.
  static Poly identity() { return Poly(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
  /// a*x + b
  static Poly linear(Coeff a, Coeff b) { return Poly(std::vector<Coeff>{std::move(b), std::move(a)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  std::span<const Coeff> coeffs() const { return c_; }

  /// Coefficient of x^k (zero beyond the stored range).
  Coeff coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Coeff(0);
    return c_[k];
  }
  const Coeff& leading() const { return c_.back(); }

  /// Test hook: adds `delta` to the coefficient of x^k.
  void perturb(long k, const Coeff& delta) {
    if (k < 0) return;
    if (k >= static_cast<long>(c_.size())) c_.resize(k + 1, Coeff(0));
    c_[k] += delta;
    trim();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
  friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    Coeff tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        tmp = a.c_[i] * b.c_[j];
        out[i + j] += tmp;
      }
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<ExactInt>;
using RatPoly = Poly<ExactRat>;

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_scale(const IntPoly& p, const ExactInt& c);

/// p^e by repeated multiplication.
IntPoly poly_pow(const IntPoly& p, unsigned e);

IntPoly derivative(const IntPoly& p);
RatPoly derivative(const RatPoly& p);

/// k-th derivative.
IntPoly derivative(const IntPoly& p, unsigned k);

ExactRat eval_rat(const IntPoly& p, const ExactRat& x);
ExactRat eval_rat(const RatPoly& p, const ExactRat& x);
ExactInt eval_int(const IntPoly& p, const ExactInt& x);

RatPoly to_rat(const IntPoly& p);

/// a_k == a_{n-k} for 0 <= k <= n with missing coefficients read as 0.
/// Throws std::invalid_argument when n < degree(p).
bool is_self_reciprocal(const IntPoly& p, long n);

/// Index of the first negative coefficient, or -1.
long first_negative_coefficient(const IntPoly& p);

/// Euclidean division over the rationals; throws DomainError on divisor 0.
void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem);

/// Monic gcd (zero when both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// p / gcd(p, p'), i.e. the product of the distinct irreducible factors.
RatPoly squarefree_part(const IntPoly& p);

// p0 = squarefree part, p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i), terminating in
// a nonzero constant. Elements have strictly decreasing degrees.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  /// Sign variations at x, zeros skipped.
  int variations(const ExactRat& x) const;

  /// Distinct real roots in the half-open interval (a, b]. Requires a < b.
  int count_roots(const ExactRat& a, const ExactRat& b) const;

  std::span<const RatPoly> chain() const { return chain_; }
  const IntPoly& input() const { return input_; }

 private:
  IntPoly input_;
  std::vector<RatPoly> chain_;
};

/// Distinct real roots of p in (a, b]. Throws DomainError for p == 0 and
/// std::invalid_argument unless a < b.
int sturm_count_roots(const IntPoly& p, const ExactRat& a, const ExactRat& b);

enum class SignOnInterval { positive, negative, not_constant };

const char* to_string(SignOnInterval s);

/// positive/negative iff p has no root in the closed interval [a, b];
/// endpoint roots yield not_constant. Requires a < b and p != 0.
SignOnInterval sign_constant_on(const IntPoly& p, const ExactRat& a, const ExactRat& b);

std::string to_string(const IntPoly& p, char var = 'x');

}  // namespace qlc
