#pragma once

// Displayed endpoint values of the proof polynomials, each paired with a
// direct evaluation of the corresponding expanded polynomial.
//
// Every form is a polynomial in (n, t) with rational coefficients on both
// sides, so agreement on a product grid larger than the degree bounds is a
// proof of the identity. The sign fields carry the inequality asserted for
// that value on its stated domain.

#include <functional>
#include <string>
#include <vector>

#include "qlc/exact.hpp"

namespace qlc {

enum class FormGroup {
  theta,       // theta and its derivatives at 0, 1, n/2, n-1, n
  xi_eta,      // xi, eta and their derivatives at 0, 3n/4, n-1
  psi_half,    // psi1/psi2/psi3 at t/2 and at 0
  small_n,     // psi1(t/2) factored forms for n = 2, 3
  psi_nn,      // psi^(n,n) family endpoints
};

const char* to_string(FormGroup g);

struct ClosedForm {
  std::string id;
  FormGroup group;
  bool uses_t = false;
  long fixed_n = 0;  // nonzero: the form is stated for this n only
  std::function<ExactRat(long n, long t)> direct;
  std::function<ExactRat(long n, long t)> displayed;
  int sign = 0;     // asserted sign on the domain; 0 when no inequality is stated
  long n_min = 1;   // domain: n >= n_min
  long t_slack = 0; // domain: 0 <= t <= n - t_slack
};

const std::vector<ClosedForm>& closed_forms();
std::vector<const ClosedForm*> closed_forms_in_group(FormGroup g);

// Every side of every form has total degree <= 10 in (n, t): psi^(n,t)(x) has
// total degree 10 in (n, t, x), and its cascade and theta/xi/eta are lower.
// Grids must exceed these bounds.
inline constexpr long kFormDegreeN = 10;
inline constexpr long kFormDegreeT = 10;

}  // namespace qlc
