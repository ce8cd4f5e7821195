#include "qlc/polynomial.hpp"

#include <stdexcept>

namespace qlc {

IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return p - q; }
IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly poly_scale(const IntPoly& p, const ExactInt& c) { return p * c; }

IntPoly poly_pow(const IntPoly& p, unsigned e) {
  IntPoly out = IntPoly::constant(ExactInt(1));
  for (unsigned i = 0; i < e; ++i) out *= p;
  return out;
}

namespace {

template <typename Coeff>
Poly<Coeff> derive(const Poly<Coeff>& p) {
  if (p.degree() < 1) return {};
  std::vector<Coeff> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly<Coeff>(std::move(out));
}

template <typename Coeff>
ExactRat horner(const Poly<Coeff>& p, const ExactRat& x) {
  ExactRat acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

}  // namespace

IntPoly derivative(const IntPoly& p) { return derive(p); }
RatPoly derivative(const RatPoly& p) { return derive(p); }

IntPoly derivative(const IntPoly& p, unsigned k) {
  IntPoly out = p;
  for (unsigned i = 0; i < k; ++i) out = derive(out);
  return out;
}

ExactRat eval_rat(const IntPoly& p, const ExactRat& x) { return horner(p, x); }
ExactRat eval_rat(const RatPoly& p, const ExactRat& x) { return horner(p, x); }

ExactInt eval_int(const IntPoly& p, const ExactInt& x) {
  ExactInt acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RatPoly to_rat(const IntPoly& p) {
  std::vector<ExactRat> c(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(c));
}

bool is_self_reciprocal(const IntPoly& p, long n) {
  if (n < p.degree()) throw std::invalid_argument("is_self_reciprocal: n below degree");
  for (long k = 0; k <= n / 2; ++k) {
    if (p.coeff(k) != p.coeff(n - k)) return false;
  }
  return true;
}

long first_negative_coefficient(const IntPoly& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sgn(p.coeffs()[k]) < 0) return static_cast<long>(k);
  }
  return -1;
}

void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<ExactRat> r(num.coeffs().begin(), num.coeffs().end());
  const long dd = den.degree();
  const long nd = num.degree();
  std::vector<ExactRat> q(nd >= dd ? nd - dd + 1 : 0);
  const ExactRat& lead = den.leading();
  ExactRat tmp;
  for (long i = nd; i >= dd; --i) {
    if (r[i] == 0) continue;
    ExactRat f = r[i] / lead;
    q[i - dd] = f;
    for (long j = 0; j <= dd; ++j) {
      tmp = f * den.coeffs()[j];
      r[i - dd + j] -= tmp;
    }
  }
  quot = RatPoly(std::move(q));
  if (dd >= 0 && static_cast<long>(r.size()) > dd) r.resize(dd);
  rem = RatPoly(std::move(r));
}

namespace {
RatPoly monic(RatPoly p) {
  if (p.is_zero()) return p;
  ExactRat inv = 1 / p.leading();
  return p * inv;
}
}  // namespace

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

RatPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
  RatPoly rp = to_rat(p);
  RatPoly g = poly_gcd(rp, derivative(rp));
  RatPoly q, r;
  divmod(rp, g, q, r);
  return q;
}

SturmChain::SturmChain(const IntPoly& p) : input_(p) {
  RatPoly p0 = squarefree_part(p);
  chain_.push_back(p0);
  if (p0.degree() < 1) return;
  chain_.push_back(derivative(p0));
  while (chain_.back().degree() > 0) {
    RatPoly q, r;
    divmod(chain_[chain_.size() - 2], chain_.back(), q, r);
    // Squarefree input: the remainder sequence reaches a nonzero constant
    // before it could vanish.
    if (r.is_zero()) throw std::logic_error("Sturm chain: squarefree reduction failed");
    chain_.push_back(-r);
  }
}

int SturmChain::variations(const ExactRat& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sgn(eval_rat(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count_roots(const ExactRat& a, const ExactRat& b) const {
  if (!(a < b)) throw std::invalid_argument("Sturm count needs a < b");
  return variations(a) - variations(b);
}

int sturm_count_roots(const IntPoly& p, const ExactRat& a, const ExactRat& b) {
  if (p.is_zero()) throw DomainError("sturm_count_roots: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("sturm_count_roots: needs a < b");
  return SturmChain(p).count_roots(a, b);
}

const char* to_string(SignOnInterval s) {
  switch (s) {
    case SignOnInterval::positive: return "positive";
    case SignOnInterval::negative: return "negative";
    case SignOnInterval::not_constant: return "not_constant";
  }
  return "?";
}

SignOnInterval sign_constant_on(const IntPoly& p, const ExactRat& a, const ExactRat& b) {
  if (p.is_zero()) throw DomainError("sign_constant_on: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("sign_constant_on: needs a < b");
  const int sa = sgn(eval_rat(p, a));
  const int sb = sgn(eval_rat(p, b));
  if (sa == 0 || sb == 0) return SignOnInterval::not_constant;
  if (sturm_count_roots(p, a, b) != 0) return SignOnInterval::not_constant;
  return sa > 0 ? SignOnInterval::positive : SignOnInterval::negative;
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const ExactInt& c = p.coeffs()[k];
    if (c == 0) continue;
    std::string term = ExactInt(abs(c)).get_str();
    if (k >= 1) {
      if (abs(c) == 1) term.clear();
      term += var;
      if (k >= 2) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace qlc
