#include "qlc/closed_forms.hpp"

#include <initializer_list>

#include "qlc/polynomial.hpp"
#include "qlc/proof_polys.hpp"

namespace qlc {

const char* to_string(FormGroup g) {
  switch (g) {
    case FormGroup::theta: return "theta";
    case FormGroup::xi_eta: return "xi_eta";
    case FormGroup::psi_half: return "psi_half";
    case FormGroup::small_n: return "small_n";
    case FormGroup::psi_nn: return "psi_nn";
  }
  return "?";
}

namespace {

ExactRat q(long num, long den = 1) { return make_rat(num, den); }

// Descending-coefficient evaluation with rational coefficients.
ExactRat rdesc(const ExactRat& v, std::initializer_list<ExactRat> coeffs) {
  ExactRat acc(0);
  for (const auto& c : coeffs) {
    acc *= v;
    acc += c;
  }
  return acc;
}

ExactRat rpow(const ExactRat& v, unsigned e) {
  ExactRat out(1);
  for (unsigned i = 0; i < e; ++i) out *= v;
  return out;
}

using Fn = std::function<ExactRat(long, long)>;

ExactRat N(long n) { return ExactRat(n); }

// theta^{(order)} evaluated at a point depending on n.
Fn theta_at(int order, std::function<ExactRat(long)> point) {
  return [order, point](long n, long) -> ExactRat { return eval_rat(expand_theta(n).theta[order], point(n)); };
}

Fn xi_at(int order, std::function<ExactRat(long)> point) {
  return [order, point](long n, long) -> ExactRat {
    return eval_rat(derivative(expand_theta(n).xi, static_cast<unsigned>(order)), point(n));
  };
}

Fn eta_at(int order, std::function<ExactRat(long)> point) {
  return [order, point](long n, long) -> ExactRat {
    return eval_rat(derivative(expand_theta(n).eta, static_cast<unsigned>(order)), point(n));
  };
}

ExactRat at_zero(long) { return ExactRat(0); }
ExactRat at_one(long) { return ExactRat(1); }
ExactRat at_half(long n) { return q(n, 2); }
ExactRat at_three_quarters(long n) { return q(3 * n, 4); }
ExactRat at_n_minus_1(long n) { return ExactRat(n - 1); }
ExactRat at_n(long n) { return ExactRat(n); }

ExactRat psi_component_at(long n, long t, int which, const ExactRat& x) {
  const PsiBundle b = expand_psi(n, t);
  const IntPoly* polys[4] = {&b.psi, &b.psi1, &b.psi2, &b.psi3};
  return eval_rat(*polys[which], x);
}

ExactRat nn_component_at(long n, int which, const ExactRat& x) {
  const NnBundle b = expand_nn(n);
  const IntPoly* polys[4] = {&b.psi, &b.psi1, &b.psi2, &b.psi3};
  return eval_rat(*polys[which], x);
}

std::vector<ClosedForm> make_forms() {
  std::vector<ClosedForm> f;
  auto add = [&f](std::string id, FormGroup g, Fn direct, Fn displayed, int sign, long n_min,
                  bool uses_t = false, long t_slack = 0, long fixed_n = 0) {
    ClosedForm c;
    c.id = std::move(id);
    c.group = g;
    c.uses_t = uses_t;
    c.fixed_n = fixed_n;
    c.direct = std::move(direct);
    c.displayed = std::move(displayed);
    c.sign = sign;
    c.n_min = n_min;
    c.t_slack = t_slack;
    f.push_back(std::move(c));
  };

  // theta endpoints, stated for n >= 5.
  const auto G = FormGroup::theta;
  add("theta(0)", G, theta_at(0, at_zero),
      [](long n, long) -> ExactRat { return 2 * N(n) * N(n) * (2 * N(n) - 1) * rpow(N(n) + 1, 3); }, +1, 5);
  add("theta(1)", G, theta_at(0, at_one),
      [](long n, long) -> ExactRat { return 2 * rpow(N(n), 3) * (2 * N(n) - 1) * rdesc(N(n), {3, -3, -2}); }, +1, 5);
  add("theta(n-1)", G, theta_at(0, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {3, 3, -2}) * rdesc(N(n), {1, 2, -9, 6, 4}); }, +1, 5);
  add("theta(n)", G, theta_at(0, at_n),
      [](long n, long) -> ExactRat { return -N(n) * N(n) * (N(n) + 1) * rdesc(N(n), {1, 2, -3, 2}); }, -1, 5);
  add("theta'(0)", G, theta_at(1, at_zero),
      [](long n, long) -> ExactRat { return -N(n) * N(n) * rpow(N(n) + 1, 2) * rdesc(N(n), {8, 12, -5}); }, -1, 5);
  add("theta'(1)", G, theta_at(1, at_one),
      [](long n, long) -> ExactRat { return N(n) * N(n) * rdesc(N(n), {8, -4, -3}) * rdesc(N(n), {3, -8, 1}); }, +1, 5);
  add("theta'(n-1)", G, theta_at(1, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {-8, -24, 88, 48, -200, 0, 36}); }, -1, 5);
  add("theta''(0)", G, theta_at(2, at_zero),
      [](long n, long) -> ExactRat { return 2 * N(n) * (4 * N(n) + 1) * (N(n) + 1) * rdesc(N(n), {4, 7, 3, -3}); }, +1, 5);
  add("theta''(n/2)", G, theta_at(2, at_half),
      [](long n, long) -> ExactRat { return -rdesc(N(n), {68, 144, -129, -244, -24, 24}) * N(n) / 8; }, -1, 5);
  add("theta''(n-1)", G, theta_at(2, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {8, 24, -216, -112, 648, 0, -132}); }, +1, 5);
  add("theta'''(0)", G, theta_at(3, at_zero),
      [](long n, long) -> ExactRat { return -6 * (2 * N(n) - 1) * rdesc(N(n), {24, 54, 44, 14, 1}); }, -1, 5);
  add("theta'''(n-1)", G, theta_at(3, at_n_minus_1),
      [](long n, long) -> ExactRat { return 6 * (2 * N(n) - 1) * rdesc(N(n), {26, 26, -126, -63}); }, +1, 5);
  add("theta''''(0)", G, theta_at(4, at_zero),
      [](long n, long) -> ExactRat { return 24 * (2 * N(n) - 1) * rdesc(N(n), {26, 41, 21, 3}); }, +1, 5);
  add("theta''''(n-1)", G, theta_at(4, at_n_minus_1),
      [](long n, long) -> ExactRat { return -24 * (2 * N(n) - 1) * rdesc(N(n), {4, 4, -66, -33}); }, -1, 5);
  add("theta''''.axis", G, [](long n, long) -> ExactRat { return quadratic_axis(expand_theta(n).theta[4]); },
      [](long n, long) -> ExactRat { return N(n) + q(1, 2); }, 0, 5);

  // xi and eta; Claim 2 scaffolding is stated for n >= 8, the rest for n >= 4.
  const auto X = FormGroup::xi_eta;
  add("xi(n-1)", X, xi_at(0, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {-8, -14, 119, 75, -100, -36}); }, -1, 4);
  add("xi(3n/4)", X, xi_at(0, at_three_quarters),
      [](long n, long) -> ExactRat { return -N(n) / 128 * rdesc(N(n), {25, -52, 831, 2614, 224, 480}); }, -1, 8);
  add("xi'(3n/4)", X, xi_at(1, at_three_quarters),
      [](long n, long) -> ExactRat { return rdesc(N(n), {q(-315, 32), q(-57, 2), 0, q(213, 16), 18, 3}); }, -1, 8);
  add("xi'(n-1)", X, xi_at(1, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {8, -8, -330, -209, 284, 96}); }, +1, 8);
  add("xi''(n-1)", X, xi_at(2, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {32, 480, 432, -674, -186}); }, +1, 8);
  add("xi'''(n-1)", X, xi_at(3, at_n_minus_1),
      [](long n, long) -> ExactRat { return rdesc(N(n), {-288, -576, 1236, 234}); }, -1, 8);
  add("xi'''.axis", X,
      [](long n, long) -> ExactRat { return quadratic_axis(derivative(expand_theta(n).xi, 3)); },
      [](long n, long) -> ExactRat { return 3 * rpow(2 * N(n) + 1, 2) / (20 * N(n)); }, 0, 8);
  add("eta(0)", X, eta_at(0, at_zero),
      [](long n, long) -> ExactRat { return -2 * (N(n) + 1) * rdesc(N(n), {64, 72, 42, 11, 3}); }, -1, 4);
  add("eta(3n/4)", X, eta_at(0, at_three_quarters),
      [](long n, long) -> ExactRat {
        return rdesc(N(n), {q(-575, 64), q(-2051, 64), q(-357, 8), q(-889, 16), q(-79, 4), -6});
      },
      -1, 4);
  add("eta'(3n/4)", X, eta_at(1, at_three_quarters),
      [](long n, long) -> ExactRat { return (N(n) + 1) / 4 * rdesc(N(n), {295, 591, 234, 44}); }, +1, 4);
  add("eta''(3n/4)", X, eta_at(2, at_three_quarters),
      [](long n, long) -> ExactRat { return rdesc(N(n), {-189, -243, -120, 6}); }, -1, 4);
  add("eta''.axis", X,
      [](long n, long) -> ExactRat { return quadratic_axis(derivative(expand_theta(n).eta, 2)); },
      [](long n, long) -> ExactRat { return -(N(n) - q(3, 4)); }, 0, 4);

  // psi^(n,t) components at x = t/2 and x = 0.
  const auto P = FormGroup::psi_half;
  add("psi3(t/2)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 3, q(t, 2)); },
      [](long n, long t) -> ExactRat {
        const ExactRat m = N(n) - t;
        return rdesc(N(n), {8, 8, 4}) * m * m + rdesc(N(n), {16, 44, 44, 18}) * m +
               rdesc(N(n), {8, 36, 64, 40, 11});
      },
      +1, 1, true, 0);
  add("psi2(t/2)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 2, q(t, 2)); },
      [](long n, long t) -> ExactRat {
        const ExactRat m = N(n) - t;
        return -rdesc(N(n), {8, 10, 5}) * rpow(m, 4) - rdesc(N(n), {32, 70, 50, 15}) * rpow(m, 3) -
               rdesc(N(n), {48, 150, 165, 72, q(27, 2)}) * m * m -
               rdesc(N(n), {32, 130, 200, 152, 49, 11}) * m -
               rdesc(N(n), {8, 40, 80, 95, q(143, 2), 23, 6});
      },
      -1, 1, true, 1);
  add("psi1(t/2)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 1, q(t, 2)); },
      [](long n, long t) -> ExactRat {
        const ExactRat s = 2 * N(n) - t;
        const ExactRat nn = N(n);
        return (4 * rpow(s, 5) * rdesc(nn, {2, 2, 1}) + 2 * rpow(s, 4) * rdesc(nn, {10, -2, -1}) +
                rpow(s, 3) * rdesc(nn, {20, -46, -23}) + 10 * s * s * rdesc(nn, {2, -6, -3}) +
                4 * s * rdesc(nn, {14, -6, -3}) + 56 * nn * nn) *
               (2 * nn - t + 2) / 8;
      },
      +1, 4, true, 1);
  add("psi2(0)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 2, ExactRat(0)); },
      [](long n, long t) -> ExactRat {
        const ExactRat tt(t), nn = N(n);
        return (nn + 1) * (4 * rpow(tt, 4) * (nn + 1) + 4 * rpow(tt, 3) * (nn + 1) * (4 * nn - 3) -
                           3 * tt * tt * rdesc(nn, {48, 48, 11, -1}) + tt * rdesc(nn, {256, 424, 276, 65, 11}) -
                           2 * (nn + 1) * rdesc(nn, {64, 72, 42, 11, 3}));
      },
      0, 1, true, 0);
  add("psi1(0)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 1, ExactRat(0)); },
      [](long n, long t) -> ExactRat {
        const ExactRat tt(t), nn = N(n);
        return rpow(nn + 1, 2) *
               (8 * nn * rpow(tt, 5) - 6 * rpow(tt, 4) * rpow(2 * nn + 1, 2) -
                rpow(tt, 3) * rdesc(nn, {32, -64, -54, -15}) + 2 * tt * tt * rdesc(nn, {88, 24, -51, -34, -6}) -
                3 * tt * rdesc(nn, {64, 56, -24, -30, -12, -1}) + 2 * nn * (nn + 1) * rdesc(nn, {32, 8, -20, -8, -3}));
      },
      0, 1, true, 0);
  add("psi2(0)=(n+1)eta(t)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 2, ExactRat(0)); },
      [](long n, long t) -> ExactRat { return (N(n) + 1) * eval_rat(expand_theta(n).eta, ExactRat(t)); }, 0, 1, true, 0);
  add("psi1(0)=(n+1)^2xi(t)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 1, ExactRat(0)); },
      [](long n, long t) -> ExactRat { return rpow(N(n) + 1, 2) * eval_rat(expand_theta(n).xi, ExactRat(t)); }, 0, 1, true, 0);
  add("psi(0)=(n+1)^2theta(t)", P, [](long n, long t) -> ExactRat { return psi_component_at(n, t, 0, ExactRat(0)); },
      [](long n, long t) -> ExactRat { return rpow(N(n) + 1, 2) * eval_rat(expand_theta(n).theta[0], ExactRat(t)); }, 0, 1, true,
      0);
  add("psi3.axis", P, [](long n, long t) -> ExactRat { return quadratic_axis(expand_psi(n, t).psi3); },
      [](long, long t) -> ExactRat { return q(t, 2); }, 0, 1, true, 0);

  const auto S = FormGroup::small_n;
  add("psi1(t/2)|n=2", S, [](long, long t) -> ExactRat { return psi_component_at(2, t, 1, q(t, 2)); },
      [](long, long t) -> ExactRat {
        const ExactRat u = ExactRat(4 - t);
        return (52 * rpow(u, 5) + 70 * rpow(u, 4) - 35 * rpow(u, 3) - 70 * u * u + 880 - 164 * ExactRat(t)) *
               ExactRat(6 - t) / 8;
      },
      +1, 2, true, 1, 2);
  add("psi1(t/2)|n=3", S, [](long, long t) -> ExactRat { return psi_component_at(3, t, 1, q(t, 2)); },
      [](long, long t) -> ExactRat {
        const ExactRat u = ExactRat(6 - t);
        return (100 * rpow(u, 5) + 166 * rpow(u, 4) + 19 * rpow(u, 3) - 30 * u * u - 420 * ExactRat(t) + 3024) *
               ExactRat(8 - t) / 8;
      },
      +1, 3, true, 1, 3);

  // psi^(n,n) family, stated for n >= 2.
  const auto M = FormGroup::psi_nn;
  add("psi_nn3(0)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 3, ExactRat(0)); },
      [](long n, long) -> ExactRat { return rdesc(N(n), {8, 44, 68, 40, 11}); }, +1, 2);
  add("psi_nn3(n/2)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 3, q(n, 2)); },
      [](long n, long) -> ExactRat { return rdesc(N(n), {8, 36, 64, 40, 11}); }, +1, 2);
  add("psi_nn2(0)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 2, ExactRat(0)); },
      [](long n, long) -> ExactRat { return rdesc(N(n), {4, 20, 19, -35, -55, -23, -6}); }, +1, 2);
  add("psi_nn2(n/2)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 2, q(n, 2)); },
      [](long n, long) -> ExactRat { return rdesc(N(n), {-8, -40, -80, -95, q(-143, 2), -23, -6}); }, -1, 2);
  add("psi_nn1(0)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 1, ExactRat(0)); },
      [](long n, long) -> ExactRat { return rdesc(N(n), {-6, -31, -42, -18, -4, -3, 0}); }, -1, 2);
  add("psi_nn1(n/2)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 1, q(n, 2)); },
      [](long n, long) -> ExactRat {
        return rdesc(N(n), {1, q(11, 2), q(19, 2), q(3, 2), q(-83, 8), q(-13, 2), -1, -3, 0});
      },
      +1, 2);
  add("psi_nn(0)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 0, ExactRat(0)); },
      [](long n, long) -> ExactRat { return -N(n) * N(n) * rdesc(N(n), {1, 2, -3, 2}) * rpow(N(n) + 1, 3); }, -1, 2);
  add("psi_nn(1)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 0, ExactRat(1)); },
      [](long n, long) -> ExactRat {
        const ExactRat nn = N(n);
        return rpow(nn, 6) * rdesc(nn, {3, -3, -38}) + 3 * nn * nn * rdesc(nn, {18, 0, -1, -24}) +
               35 * rpow(nn, 4) - 16 * nn + 24;
      },
      // Positive from n = 3 on; psi^(2,2)(1) = -80.
      +1, 3);
  add("psi_nn(n/2)", M, [](long n, long) -> ExactRat { return nn_component_at(n, 0, q(n, 2)); },
      [](long n, long) -> ExactRat {
        const ExactRat nn = N(n);
        return -q(1, 32) * nn * nn * (nn - 1) * rdesc(nn, {2, 3, -5, -8}) * rpow(nn + 2, 3);
      },
      -1, 2);
  add("psi_nn3.axis", M, [](long n, long) -> ExactRat { return quadratic_axis(expand_nn(n).psi3); },
      [](long n, long) -> ExactRat { return q(n, 2); }, 0, 2);
  return f;
}

}  // namespace

const std::vector<ClosedForm>& closed_forms() {
  static const std::vector<ClosedForm> forms = make_forms();
  return forms;
}

std::vector<const ClosedForm*> closed_forms_in_group(FormGroup g) {
  std::vector<const ClosedForm*> out;
  for (const auto& f : closed_forms()) {
    if (f.group == g) out.push_back(&f);
  }
  return out;
}

}  // namespace qlc
