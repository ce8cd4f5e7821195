#include "qlc/proof_polys.hpp"

#include <algorithm>
#include <initializer_list>

#include "qlc/closed_forms.hpp"

namespace qlc {

ExactInt ipow(const ExactInt& base, unsigned e) {
  ExactInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

namespace {

// Value of a polynomial written with descending coefficients, so that
// desc(n, {8, 92, 92, 40, 11}) reads like 8n^4 + 92n^3 + 92n^2 + 40n + 11.
ExactInt desc(const ExactInt& v, std::initializer_list<long> coeffs) {
  ExactInt acc(0);
  for (long c : coeffs) {
    acc *= v;
    acc += c;
  }
  return acc;
}

// Polynomial in x from descending coefficients.
IntPoly from_desc(std::initializer_list<ExactInt> coeffs) {
  std::vector<ExactInt> c(coeffs.begin(), coeffs.end());
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

// c0 + c1 x
IntPoly lin(const ExactInt& c0, long c1) { return IntPoly::linear(ExactInt(c1), c0); }

IntPoly cube(const IntPoly& p) { return p * p * p; }

long first_nonzero(const IntPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coeffs()[i] != 0) return static_cast<long>(i);
  }
  return -1;
}

std::array<long, 3> residuals(const IntPoly& p0, const IntPoly& p1, const IntPoly& p2, const IntPoly& p3,
                              const ExactInt& t) {
  const IntPoly twox_t = IntPoly::linear(ExactInt(2), ExactInt(-t));
  return {first_nonzero(derivative(p0) - twox_t * p1),
          first_nonzero(derivative(p1) - twox_t * p2 * ExactInt(2)),
          first_nonzero(derivative(p2) - twox_t * p3 * ExactInt(6))};
}

void assert_cascade(const std::array<long, 3>& r, const std::string& where) {
  static const char* names[3] = {"psi' = (2x-t) psi1", "psi1' = 2(2x-t) psi2", "psi2' = 6(2x-t) psi3"};
  for (int i = 0; i < 3; ++i) {
    if (r[i] >= 0) throw IdentityError(where + ": " + names[i] + " fails", r[i]);
  }
}

}  // namespace

PsiBundle expand_psi(long n_, long t_) {
  const ExactInt n(n_), t(t_);
  const ExactInt n1 = n + 1;
  PsiBundle b;
  b.n = n_;
  b.t = t_;

  const IntPoly n_minus_x = lin(n, -1);            // n - x
  const IntPoly n_minus_x_1 = lin(n + 1, -1);      // n - x + 1
  const IntPoly n_t_x = lin(n - t, 1);             // n - t + x
  const IntPoly n_t_x_1 = lin(n - t + 1, 1);       // n - t + x + 1
  const IntPoly a_plus = lin(2 * n - 2 * t + 1, 2);   // 2n - 2t + 2x + 1
  const IntPoly a_minus = lin(2 * n - 2 * t - 1, 2);  // 2n - 2t + 2x - 1
  const IntPoly b_minus = lin(2 * n - 1, -2);         // 2n - 2x - 1
  const IntPoly b_plus = lin(2 * n + 1, -2);          // 2n - 2x + 1

  b.psi = ExactInt(n1 * n1) * cube(n_minus_x) * cube(n_minus_x_1) * a_plus * a_minus +
          ExactInt(n1 * n1) * cube(n_t_x) * cube(n_t_x_1) * b_minus * b_plus -
          ExactInt(2 * n * n) * cube(n_minus_x_1) * cube(n_t_x_1) * b_minus * a_minus;

  const ExactInt n2 = n * n, n3 = ipow(n, 3), n4 = ipow(n, 4), n5 = ipow(n, 5), n6 = ipow(n, 6);
  const ExactInt t2 = t * t;
  const ExactInt two_n1 = 2 * n + 1;

  // 32n^4 - 8n^3(4t-11) + 4n^2(2t-7)(t-4) + 2n(a t^2 - 26t + 29) + a t^2 - 18t + 11
  auto quartic_bracket = [&](long a) -> ExactInt {
    ExactInt v = 32 * n4;
    v -= 8 * n3 * (4 * t - 11);
    v += 4 * n2 * (2 * t - 7) * (t - 4);
    v += 2 * n * (a * t2 - 26 * t + 29);
    v += a * t2 - 18 * t + 11;
    return v;
  };

  // 128n^5 - 16n^4(16t-17) + 4n^3(36t^2-106t+57) - 2n^2(8t^3-72t^2+138t-53)
  //   - n(4t^4+4t^3-33t^2+65t-28) - 4t^4 + 12t^3 - 3t^2 - 11t + 6
  ExactInt quintic_bracket = 128 * n5;
  quintic_bracket -= 16 * n4 * (16 * t - 17);
  quintic_bracket += 4 * n3 * desc(t, {36, -106, 57});
  quintic_bracket -= 2 * n2 * desc(t, {8, -72, 138, -53});
  quintic_bracket -= n * desc(t, {4, 4, -33, 65, -28});
  quintic_bracket += desc(t, {-4, 12, -3, -11, 6});

  ExactInt c4 = 6 * quartic_bracket(24);

  ExactInt c3 = 96 * n4;
  c3 -= 24 * n3 * (4 * t - 11);
  c3 += 12 * n2 * (2 * t - 7) * (t - 4);
  c3 += 2 * n * desc(t, {32, -78, 87});
  c3 += desc(t, {32, -54, 33});
  c3 *= -4 * t;

  ExactInt c2 = 128 * n6;
  c2 -= 16 * n5 * (16 * t - 25);
  c2 += 4 * n4 * desc(t, {12, -170, 125});
  c2 += 2 * n3 * (2 * t - 1) * desc(t, {20, 16, -167});
  c2 -= n2 * desc(t, {28, -160, 159, 341, -134});
  c2 -= 2 * n * desc(t, {28, -82, 72, 38, -17});
  c2 += desc(t, {-28, 66, -36, -11, 6});
  c2 *= -2;

  ExactInt c1 = 2 * t * n1 * quintic_bracket;

  ExactInt c0 = 64 * n6;
  c0 -= 16 * n5 * (12 * t - 5);
  c0 += 8 * n4 * desc(t, {22, -21, -3});
  c0 -= 8 * n3 * desc(t, {4, -6, -9, 7});
  c0 -= 2 * n2 * desc(t, {12, -32, 51, -45, 11});
  c0 += 2 * n * (t - 1) * desc(t, {4, -8, 19, -15, 3});
  c0 += desc(t, {-6, 15, -12, 3, 0});
  c0 *= n1 * n1;

  b.psi1 = from_desc({ExactInt(32 * two_n1), ExactInt(-96 * two_n1 * t), c4, c3, c2, c1, c0});

  b.psi2 = from_desc({ExactInt(48 * two_n1), ExactInt(-96 * t * two_n1), ExactInt(6 * quartic_bracket(16)),
                      ExactInt(-6 * t * quartic_bracket(8)), ExactInt(-n1 * quintic_bracket)});

  b.psi3 = from_desc({ExactInt(16 * two_n1), ExactInt(-16 * t * two_n1), quartic_bracket(8)});
  return b;
}

std::array<long, 3> cascade_residuals(const PsiBundle& b) {
  return residuals(b.psi, b.psi1, b.psi2, b.psi3, ExactInt(b.t));
}

PsiBundle build_psi(long n, long t) {
  if (n < 1 || t < 0 || t > n) throw std::invalid_argument("build_psi: needs n >= 1 and 0 <= t <= n");
  PsiBundle b = expand_psi(n, t);
  assert_cascade(cascade_residuals(b), "psi^(" + std::to_string(n) + "," + std::to_string(t) + ")");
  return b;
}

ThetaBundle expand_theta(long n_) {
  const ExactInt n(n_);
  const ExactInt m = 2 * n - 1, p = 2 * n + 1, n1 = n + 1;
  ThetaBundle b;
  b.n = n_;
  b.theta[0] = from_desc({
      ExactInt(m * p),
      ExactInt(-3 * m * p * p),
      ExactInt(m * desc(n, {26, 41, 21, 3})),
      ExactInt(-m * desc(n, {24, 54, 44, 14, 1})),
      ExactInt(n * (4 * n + 1) * n1 * desc(n, {4, 7, 3, -3})),
      ExactInt(-n * n * desc(n, {8, 12, -5}) * n1 * n1),
      ExactInt(2 * n * n * m * ipow(n1, 3)),
  });
  for (int i = 1; i < 5; ++i) b.theta[i] = derivative(b.theta[i - 1]);

  b.xi = from_desc({
      ExactInt(8 * n),
      ExactInt(-6 * p * p),
      ExactInt(-desc(n, {32, -64, -54, -15})),
      ExactInt(2 * desc(n, {88, 24, -51, -34, -6})),
      ExactInt(-3 * desc(n, {64, 56, -24, -30, -12, -1})),
      ExactInt(2 * n * n1 * desc(n, {32, 8, -20, -8, -3})),
  });
  b.eta = from_desc({
      ExactInt(4 * n1),
      ExactInt(4 * n1 * (4 * n - 3)),
      ExactInt(-3 * desc(n, {48, 48, 11, -1})),
      desc(n, {256, 424, 276, 65, 11}),
      ExactInt(-2 * n1 * desc(n, {64, 72, 42, 11, 3})),
  });
  return b;
}

ThetaBundle build_theta(long n) {
  if (n < 1) throw std::invalid_argument("build_theta: needs n >= 1");
  ThetaBundle b = expand_theta(n);
  const auto forms = closed_forms_in_group(FormGroup::theta);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const ClosedForm& f = *forms[i];
    const ExactRat direct = f.direct(n, 0);
    const ExactRat shown = f.displayed(n, 0);
    if (direct != shown) {
      throw IdentityError(f.id + " at n=" + std::to_string(n) + ": direct " + to_string(direct) +
                              " vs displayed " + to_string(shown),
                          static_cast<long>(i));
    }
  }
  return b;
}

std::array<IntPoly, 4> displayed_theta_derivatives(long n_) {
  const ExactInt n(n_);
  const ExactInt m = 2 * n - 1, p = 2 * n + 1, n1 = n + 1;
  std::array<IntPoly, 4> d;
  d[0] = from_desc({
      ExactInt(6 * m * p),
      ExactInt(-15 * m * p * p),
      ExactInt(4 * m * desc(n, {26, 41, 21, 3})),
      ExactInt(-3 * m * desc(n, {24, 54, 44, 14, 1})),
      ExactInt(2 * n * (4 * n + 1) * n1 * desc(n, {4, 7, 3, -3})),
      ExactInt(-n * n * desc(n, {8, 12, -5}) * n1 * n1),
  });
  d[1] = from_desc({
      ExactInt(30 * m * p),
      ExactInt(-60 * m * p * p),
      ExactInt(12 * m * desc(n, {26, 41, 21, 3})),
      ExactInt(-6 * m * desc(n, {24, 54, 44, 14, 1})),
      ExactInt(2 * n * (4 * n + 1) * n1 * desc(n, {4, 7, 3, -3})),
  });
  d[2] = from_desc({
             ExactInt(20 * p),
             ExactInt(-30 * p * p),
             ExactInt(4 * desc(n, {26, 41, 21, 3})),
             ExactInt(-desc(n, {24, 54, 44, 14, 1})),
         }) *
         ExactInt(6 * m);
  d[3] = from_desc({
             ExactInt(15 * p),
             ExactInt(-15 * p * p),
             desc(n, {26, 41, 21, 3}),
         }) *
         ExactInt(24 * m);
  return d;
}

std::array<IntPoly, 5> displayed_xi_eta_derivatives(long n_) {
  const ExactInt n(n_);
  const ExactInt p = 2 * n + 1, n1 = n + 1;
  std::array<IntPoly, 5> d;
  d[0] = from_desc({
      ExactInt(40 * n),
      ExactInt(-24 * p * p),
      ExactInt(-3 * desc(n, {32, -64, -54, -15})),
      ExactInt(4 * desc(n, {88, 24, -51, -34, -6})),
      desc(n, {-192, -168, 72, 90, 36, 3}),
  });
  d[1] = from_desc({
      ExactInt(160 * n),
      ExactInt(-72 * p * p),
      ExactInt(-6 * desc(n, {32, -64, -54, -15})),
      desc(n, {352, 96, -204, -136, -24}),
  });
  d[2] = from_desc({
      ExactInt(480 * n),
      ExactInt(-144 * p * p),
      desc(n, {-192, 384, 324, 90}),
  });
  d[3] = from_desc({
      ExactInt(16 * n1),
      ExactInt(12 * n1 * (4 * n - 3)),
      ExactInt(-6 * desc(n, {48, 48, 11, -1})),
      desc(n, {256, 424, 276, 65, 11}),
  });
  d[4] = from_desc({
      ExactInt(48 * n1),
      ExactInt(24 * n1 * (4 * n - 3)),
      desc(n, {-288, -288, -66, 6}),
  });
  return d;
}

NnBundle expand_nn(long n_) {
  const ExactInt n(n_);
  const ExactInt p = 2 * n + 1, n1 = n + 1;
  NnBundle b;
  b.n = n_;
  b.psi = from_desc({
      ExactInt(8 * p),
      ExactInt(-32 * n * p),
      ExactInt(2 * desc(n, {8, 92, 92, 40, 11})),
      ExactInt(-2 * n * desc(n, {24, 164, 220, 120, 33})),
      desc(n, {52, 300, 435, 205, 11, -23, -6}),
      ExactInt(-2 * n * desc(n, {12, 64, 87, 5, -44, -23, -6})),
      ExactInt(n * n1 * desc(n, {4, 16, -3, -63, -34, -7, -3})),
      ExactInt(n * n * desc(n, {6, 19, -2, 3}) * n1 * n1),
      ExactInt(-n * n * desc(n, {1, 2, -3, 2}) * ipow(n1, 3)),
  });
  b.psi1 = from_desc({
      ExactInt(32 * p),
      ExactInt(-96 * n * p),
      ExactInt(6 * desc(n, {8, 76, 84, 40, 11})),
      ExactInt(-4 * n * desc(n, {24, 148, 212, 120, 33})),
      ExactInt(2 * desc(n, {28, 152, 223, 85, -22, -23, -6})),
      ExactInt(-2 * n * n1 * desc(n, {4, 16, 3, -38, -17, -6})),
      ExactInt(-n * desc(n, {6, 19, -2, 3}) * n1 * n1),
  });
  b.psi2 = from_desc({
      ExactInt(48 * p),
      ExactInt(-96 * n * p),
      ExactInt(6 * desc(n, {8, 60, 76, 40, 11})),
      ExactInt(-6 * n * desc(n, {8, 44, 68, 40, 11})),
      ExactInt(n1 * desc(n, {4, 16, 3, -38, -17, -6})),
  });
  b.psi3 = from_desc({
      ExactInt(16 * p),
      ExactInt(-16 * n * p),
      desc(n, {8, 44, 68, 40, 11}),
  });
  return b;
}

std::array<long, 3> cascade_residuals(const NnBundle& b) {
  return residuals(b.psi, b.psi1, b.psi2, b.psi3, ExactInt(b.n));
}

NnBundle build_nn(long n) {
  if (n < 1) throw std::invalid_argument("build_nn: needs n >= 1");
  NnBundle b = expand_nn(n);
  assert_cascade(cascade_residuals(b), "psi^(" + std::to_string(n) + "," + std::to_string(n) + ")");
  return b;
}

ExactRat quadratic_axis(const IntPoly& q) {
  if (q.degree() != 2) throw std::invalid_argument("quadratic_axis: degree must be 2");
  return make_rat(-q.coeff(1), 2 * q.coeff(2));
}

}  // namespace qlc
