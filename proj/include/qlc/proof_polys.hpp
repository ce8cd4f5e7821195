#pragma once

// Explicit polynomials from the sign analysis of L_t(a(n,k)) for the Domb
// array: psi^(n,t)(x) with its derivative cascade psi1..psi3, the sextic
// theta(x) driving L_t(a(n,0)), the auxiliary xi(t) = psi1(0)/(n+1)^2 and
// eta(t) = psi2(0)/(n+1), and the t = n specialization.
//
// Every polynomial here is expanded from its displayed closed form for
// concrete integers (n, t); none is derived automatically from another. The
// relations between them are checked separately (construction asserts,
// grid identities, the factorization against op_L).

#include <array>
#include <stdexcept>
#include <string>

#include "qlc/polynomial.hpp"

namespace qlc {

/// A displayed identity failed for concrete parameters.
class IdentityError : public std::runtime_error {
 public:
  IdentityError(const std::string& what, long coefficient_index)
      : std::runtime_error(what + " (coefficient " + std::to_string(coefficient_index) + ")"),
        index_(coefficient_index) {}
  long coefficient_index() const { return index_; }

 private:
  long index_;
};

ExactInt ipow(const ExactInt& base, unsigned e);

struct PsiBundle {
  long n = 0;
  long t = 0;
  IntPoly psi;   // degree 8 in x
  IntPoly psi1;  // psi' = (2x - t) psi1
  IntPoly psi2;  // psi1' = 2(2x - t) psi2
  IntPoly psi3;  // psi2' = 6(2x - t) psi3
};

/// Expands the four displayed polynomials without checking anything.
/// Accepts any integers n, t (used by grid identities beyond t <= n).
PsiBundle expand_psi(long n, long t);

/// Index of the first nonzero coefficient of each cascade residual, or -1:
/// {psi' - (2x-t)psi1, psi1' - 2(2x-t)psi2, psi2' - 6(2x-t)psi3}.
std::array<long, 3> cascade_residuals(const PsiBundle& b);

/// expand_psi plus the cascade assertions. Requires n >= 1, 0 <= t <= n
/// (std::invalid_argument); throws IdentityError if a cascade breaks.
PsiBundle build_psi(long n, long t);

struct ThetaBundle {
  long n = 0;
  std::array<IntPoly, 5> theta;  // theta and its derivatives of order 1..4
  IntPoly xi;                    // polynomial in t
  IntPoly eta;                   // polynomial in t
};

/// Displayed theta, xi and eta; derivatives are formal derivatives.
ThetaBundle expand_theta(long n);

/// expand_theta plus the displayed endpoint forms (throws IdentityError
/// reporting the first mismatching endpoint). Requires n >= 1.
ThetaBundle build_theta(long n);

/// Displayed theta', theta'', theta''', theta'''' (index 0..3) for checking
/// against the formal derivatives.
std::array<IntPoly, 4> displayed_theta_derivatives(long n);
/// Displayed xi', xi'', xi''' (index 0..2) and eta', eta'' (index 3..4).
std::array<IntPoly, 5> displayed_xi_eta_derivatives(long n);

struct NnBundle {
  long n = 0;
  IntPoly psi;
  IntPoly psi1;
  IntPoly psi2;
  IntPoly psi3;
};

/// Displayed psi^(n,n) family, expanded.
NnBundle expand_nn(long n);
std::array<long, 3> cascade_residuals(const NnBundle& b);
/// expand_nn plus cascade assertions; requires n >= 1.
NnBundle build_nn(long n);

/// Axis of symmetry -b/(2a) of a quadratic. Throws std::invalid_argument if
/// the degree is not 2.
ExactRat quadratic_axis(const IntPoly& q);

}  // namespace qlc
