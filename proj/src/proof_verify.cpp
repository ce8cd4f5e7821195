#include "qlc/proof_verify.hpp"

#include <stdexcept>

#include "qlc/closed_forms.hpp"
#include "qlc/criteria.hpp"
#include "qlc/families.hpp"
#include "qlc/parallel.hpp"

namespace qlc {

namespace {

using Witnesses = std::vector<std::pair<std::string, std::string>>;

// Outcome of one sweep cell; merged in index order.
struct Cell {
  std::uint64_t checked = 0;
  bool ok = true;
  std::string detail;
  Witnesses witnesses;

  void fail(std::string why, Witnesses w) {
    if (!ok) return;
    ok = false;
    detail = std::move(why);
    witnesses = std::move(w);
  }
};

std::string str(long v) { return std::to_string(v); }
std::string str(const ExactInt& v) { return to_decimal(v); }
std::string str(const ExactRat& v) { return to_string(v); }

ClaimRecord record(std::string id, std::string family) {
  ClaimRecord r;
  r.id = std::move(id);
  r.family = std::move(family);
  return r;
}

void merge(ClaimRecord& rec, const Cell& c) {
  rec.checked += c.checked;
  if (!c.ok && rec.passed) {
    rec.fail(c.detail);
    for (const auto& [k, v] : c.witnesses) rec.witness(k, v);
  }
}

// Runs body(n, cell) for n in [lo, hi] and folds the cells into rec.
void sweep(ClaimRecord& rec, long lo, long hi, unsigned jobs, const std::function<void(long, Cell&)>& body) {
  rec.param("n_lo", lo).param("n_hi", hi);
  if (hi < lo) return;
  const auto cells = parallel_map(static_cast<std::size_t>(hi - lo + 1), jobs, [&](std::size_t i) {
    Cell c;
    body(lo + static_cast<long>(i), c);
    return c;
  });
  for (const auto& c : cells) merge(rec, c);
}

// Checks every form of `group` whose id starts with `prefix` at parameter n:
// equality of both sides at each t, and the asserted sign when n >= n_min.
void check_forms(FormGroup group, const std::string& prefix, long n, Cell& cell) {
  for (const ClosedForm* f : closed_forms_in_group(group)) {
    if (f->id.rfind(prefix, 0) != 0) continue;
    if (f->fixed_n != 0 && f->fixed_n != n) continue;
    const long t_hi = f->uses_t ? n - f->t_slack : 0;
    for (long t = 0; t <= t_hi; ++t) {
      const ExactRat direct = f->direct(n, t);
      const ExactRat shown = f->displayed(n, t);
      ++cell.checked;
      if (direct != shown) {
        cell.fail(f->id + ": direct evaluation differs from displayed form",
                  {{"form", f->id}, {"n", str(n)}, {"t", str(t)}, {"direct", str(direct)}, {"displayed", str(shown)}});
        return;
      }
      if (f->sign != 0 && n >= f->n_min) {
        ++cell.checked;
        if (sign(shown) != f->sign) {
          cell.fail(f->id + ": sign differs from the asserted sign",
                    {{"form", f->id}, {"n", str(n)}, {"t", str(t)}, {"value", str(shown)}});
          return;
        }
      }
    }
  }
}

// Requires the value at x to be nonzero with the given sign.
bool expect_sign(const IntPoly& p, const ExactRat& x, int want, const std::string& what, long n, Cell& cell) {
  const ExactRat v = eval_rat(p, x);
  ++cell.checked;
  if (sign(v) == want) return true;
  cell.fail(what + " has the wrong sign", {{"n", str(n)}, {"x", str(x)}, {"value", str(v)}});
  return false;
}

bool expect_roots(const IntPoly& p, const ExactRat& a, const ExactRat& b, int want, const std::string& what, long n,
                  Cell& cell) {
  const int got = sturm_count_roots(p, a, b);
  ++cell.checked;
  if (got == want) return true;
  cell.fail(what + ": unexpected root count",
            {{"n", str(n)}, {"a", str(a)}, {"b", str(b)}, {"expected", str(long{want})}, {"roots", str(long{got})}});
  return false;
}

void sturm_scaffolding(long n, Cell& cell) {
  const ThetaBundle tb = expand_theta(n);
  const auto& th = tb.theta;
  const ExactRat zero(0), one(1), half = make_rat(n, 2), last(n - 1);

  // theta'''' > 0 at 0, < 0 at n-1, one root between.
  if (!expect_sign(th[4], zero, +1, "theta''''(0)", n, cell)) return;
  if (!expect_sign(th[4], last, -1, "theta''''(n-1)", n, cell)) return;
  if (!expect_roots(th[4], zero, last, 1, "theta''''", n, cell)) return;

  if (!expect_sign(th[3], zero, -1, "theta'''(0)", n, cell)) return;
  if (!expect_sign(th[3], last, +1, "theta'''(n-1)", n, cell)) return;
  if (!expect_roots(th[3], zero, last, 1, "theta'''", n, cell)) return;

  if (!expect_sign(th[2], zero, +1, "theta''(0)", n, cell)) return;
  if (!expect_sign(th[2], half, -1, "theta''(n/2)", n, cell)) return;
  if (!expect_sign(th[2], last, +1, "theta''(n-1)", n, cell)) return;
  if (!expect_roots(th[2], zero, half, 1, "theta'' on (0, n/2)", n, cell)) return;
  if (!expect_roots(th[2], half, last, 1, "theta'' on (n/2, n-1)", n, cell)) return;

  if (!expect_sign(th[1], zero, -1, "theta'(0)", n, cell)) return;
  if (!expect_sign(th[1], one, +1, "theta'(1)", n, cell)) return;
  if (!expect_sign(th[1], last, -1, "theta'(n-1)", n, cell)) return;
  if (!expect_roots(th[1], zero, one, 1, "theta' on (0, 1)", n, cell)) return;
  if (!expect_roots(th[1], one, last, 1, "theta' on (1, n-1)", n, cell)) return;

  const SignOnInterval s = sign_constant_on(th[0], zero, last);
  ++cell.checked;
  if (s != SignOnInterval::positive) {
    cell.fail("theta not positive on [0, n-1]", {{"n", str(n)}, {"sign", to_string(s)}});
  }
}

}  // namespace

PsiSource psi_source(std::optional<PsiFault> fault) {
  if (!fault) return [](long n, long t) { return expand_psi(n, t); };
  const PsiFault f = *fault;
  return [f](long n, long t) {
    PsiBundle b = expand_psi(n, t);
    if (n == f.n && t == f.t) b.psi.perturb(f.coefficient, ExactInt(f.delta));
    return b;
  };
}

std::vector<ClaimRecord> verify_prop31(long n_max, long sturm_max, unsigned jobs) {
  const TriangularArray& a = array_for(ArrayKind::domb);
  std::vector<ClaimRecord> out;

  ClaimRecord table = record("prop31.table", "prop31");
  table.param("n_lo", 1).param("n_hi", 4);
  std::size_t idx = 0;
  for (long n = 1; n <= 4; ++n) {
    for (long t = 0; t <= n; ++t, ++idx) {
      const ExactInt v = op_L(a, n, t, 0);
      ++table.checked;
      if (v != kProp31Table[idx] && table.passed) {
        table.fail("L_t(a(n,0)) differs from the tabulated value");
        table.witness("n", n).witness("t", t).witness("value", str(v)).witness("expected", kProp31Table[idx]);
      }
    }
  }
  out.push_back(std::move(table));

  ClaimRecord direct = record("prop31.direct", "prop31");
  sweep(direct, 1, n_max, jobs, [&](long n, Cell& c) {
    for (long t = 0; t <= n; ++t) {
      const ExactInt v = op_L(a, n, t, 0);
      ++c.checked;
      if (sign(v) < 0) {
        c.fail("L_t(a(n,0)) < 0", {{"n", str(n)}, {"t", str(t)}, {"value", str(v)}});
        return;
      }
    }
  });
  out.push_back(std::move(direct));

  ClaimRecord theta_sign = record("prop31.theta_sign", "prop31");
  sweep(theta_sign, 5, n_max, jobs, [](long n, Cell& c) {
    const IntPoly theta = expand_theta(n).theta[0];
    if (!expect_sign(theta, ExactRat(n), -1, "theta(n)", n, c)) return;
    for (long t = 0; t <= n - 1; ++t) {
      if (!expect_sign(theta, ExactRat(t), +1, "theta(t)", n, c)) return;
    }
  });
  out.push_back(std::move(theta_sign));

  ClaimRecord endpoints = record("prop31.endpoints", "prop31");
  sweep(endpoints, 5, n_max, jobs, [](long n, Cell& c) {
    check_forms(FormGroup::theta, "theta", n, c);
    if (!c.ok) return;
    // theta'''' is a quadratic with axis n + 1/2, so it is monotone on [0, n-1].
    const ExactRat axis = quadratic_axis(expand_theta(n).theta[4]);
    ++c.checked;
    if (!(axis > n - 1)) c.fail("theta'''' axis inside [0, n-1]", {{"n", str(n)}, {"axis", str(axis)}});
  });
  out.push_back(std::move(endpoints));

  ClaimRecord sturm = record("prop31.sturm", "prop31");
  sweep(sturm, 5, sturm_max, jobs, sturm_scaffolding);
  out.push_back(std::move(sturm));
  return out;
}

std::vector<ClaimRecord> verify_claims(long n_lo, long n_hi, const PsiSource& psi) {
  std::vector<ClaimRecord> out;

  ClaimRecord c1 = record("claim1", "claims123");
  static constexpr std::array<std::pair<long, long>, 9> kPairs = {
      {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}};
  c1.param("pairs", static_cast<long>(kPairs.size()));
  for (const auto& [n, t] : kPairs) {
    const ExactInt v = psi(n, t).psi2.coeff(0);
    ++c1.checked;
    if (sign(v) >= 0 && c1.passed) {
      c1.fail("psi2(0) >= 0 at an exceptional pair");
      c1.witness("n", n).witness("t", t).witness("psi2(0)", str(v));
    }
  }
  out.push_back(std::move(c1));

  const long lo = std::max(n_lo, 4L);

  ClaimRecord c2 = record("claim2.interval", "claims123");
  sweep(c2, lo, n_hi, 1, [](long n, Cell& c) {
    const IntPoly xi = expand_theta(n).xi;
    const ExactRat a = make_rat(3 * n, 4), b(n - 1);
    ++c.checked;
    if (a < b) {
      const SignOnInterval s = sign_constant_on(xi, a, b);
      if (s != SignOnInterval::negative)
        c.fail("xi not negative on [3n/4, n-1]", {{"n", str(n)}, {"sign", to_string(s)}});
    } else if (sign(eval_rat(xi, a)) >= 0) {
      c.fail("xi(3n/4) >= 0", {{"n", str(n)}, {"value", str(eval_rat(xi, a))}});
    }
  });
  out.push_back(std::move(c2));

  ClaimRecord c2e = record("claim2.endpoints", "claims123");
  sweep(c2e, lo, n_hi, 1, [](long n, Cell& c) { check_forms(FormGroup::xi_eta, "xi", n, c); });
  out.push_back(std::move(c2e));

  ClaimRecord c3 = record("claim3.interval", "claims123");
  sweep(c3, lo, n_hi, 1, [](long n, Cell& c) {
    const IntPoly eta = expand_theta(n).eta;
    const SignOnInterval s = sign_constant_on(eta, ExactRat(0), make_rat(3 * n, 4));
    ++c.checked;
    if (s != SignOnInterval::negative) c.fail("eta not negative on [0, 3n/4]", {{"n", str(n)}, {"sign", to_string(s)}});
  });
  out.push_back(std::move(c3));

  ClaimRecord c3e = record("claim3.endpoints", "claims123");
  sweep(c3e, lo, n_hi, 1, [](long n, Cell& c) {
    check_forms(FormGroup::xi_eta, "eta", n, c);
    if (!c.ok) return;
    // eta'' opens upward with its axis left of 0, so it increases on [0, 3n/4].
    const IntPoly eta2 = derivative(expand_theta(n).eta, 2);
    const ExactRat axis = quadratic_axis(eta2);
    c.checked += 2;
    if (!(axis < 0) || sign(eta2.leading()) <= 0)
      c.fail("eta'' not increasing on [0, 3n/4]", {{"n", str(n)}, {"axis", str(axis)}});
  });
  out.push_back(std::move(c3e));

  ClaimRecord imp = record("claims123.implication", "claims123");
  sweep(imp, std::max(n_lo, 1L), n_hi, 1, [&](long n, Cell& c) {
    for (long t = 0; t <= n - 1; ++t) {
      const PsiBundle b = psi(n, t);
      ++c.checked;
      if (sign(b.psi2.coeff(0)) > 0 && sign(b.psi1.coeff(0)) >= 0) {
        c.fail("psi2(0) > 0 but psi1(0) >= 0",
               {{"n", str(n)}, {"t", str(t)}, {"psi2(0)", str(b.psi2.coeff(0))}, {"psi1(0)", str(b.psi1.coeff(0))}});
        return;
      }
    }
  });
  out.push_back(std::move(imp));
  return out;
}

std::vector<ClaimRecord> verify_prop32(long n_max, const PsiSource& psi, unsigned jobs) {
  std::vector<ClaimRecord> out;

  ClaimRecord crossing = record("prop32.crossing", "prop32");
  sweep(crossing, 2, n_max, jobs, [&](long n, Cell& c) {
    for (long t = 0; t <= n - 1; ++t) {
      const PsiBundle b = psi(n, t);
      std::vector<ExactInt> values;
      for (long k = 1; k <= t / 2; ++k) values.push_back(eval_int(b.psi, ExactInt(k)));
      const SignCrossing sc = single_crossing(values);
      ++c.checked;
      if (!sc.ok()) {
        c.fail("psi^(n,t)(k) over k = 1..t/2 is not single-crossing",
               {{"n", str(n)}, {"t", str(t)}, {"k", str(sc.index + 1)}, {"value", str(sc.value)}});
        return;
      }
    }
  });
  out.push_back(std::move(crossing));

  ClaimRecord half = record("prop32.midpoint", "prop32");
  sweep(half, 1, n_max, jobs, [](long n, Cell& c) { check_forms(FormGroup::psi_half, "", n, c); });
  out.push_back(std::move(half));

  ClaimRecord small = record("prop32.small_n", "prop32");
  sweep(small, 2, std::min(n_max, 3L), 1, [](long n, Cell& c) { check_forms(FormGroup::small_n, "", n, c); });
  out.push_back(std::move(small));
  return out;
}

std::vector<ClaimRecord> verify_prop33(long n_max, unsigned jobs) {
  std::vector<ClaimRecord> out;

  ClaimRecord cascade = record("prop33.cascade", "prop33");
  sweep(cascade, 2, n_max, jobs, [](long n, Cell& c) {
    const auto res = cascade_residuals(expand_nn(n));
    for (std::size_t i = 0; i < res.size(); ++i) {
      ++c.checked;
      if (res[i] >= 0) {
        c.fail("psi^(n,n) derivative cascade broken",
               {{"n", str(n)}, {"cascade", str(static_cast<long>(i + 1))}, {"coefficient", str(res[i])}});
        return;
      }
    }
  });
  out.push_back(std::move(cascade));

  ClaimRecord endpoints = record("prop33.endpoints", "prop33");
  sweep(endpoints, 2, n_max, jobs, [](long n, Cell& c) { check_forms(FormGroup::psi_nn, "", n, c); });
  out.push_back(std::move(endpoints));

  ClaimRecord crossing = record("prop33.crossing", "prop33");
  sweep(crossing, 2, n_max, jobs, [](long n, Cell& c) {
    const IntPoly p = expand_nn(n).psi;
    std::vector<ExactInt> values;
    for (long k = 1; k <= n / 2; ++k) values.push_back(eval_int(p, ExactInt(k)));
    const SignCrossing sc = single_crossing(values);
    ++c.checked;
    if (!sc.ok())
      c.fail("psi^(n,n)(k) over k = 1..n/2 is not single-crossing",
             {{"n", str(n)}, {"k", str(sc.index + 1)}, {"value", str(sc.value)}});
  });
  out.push_back(std::move(crossing));
  return out;
}

FactorizationResult factorization_check(long n, long t, long k) {
  if (n < 1 || t < 0 || t > n || k < 0 || 2 * k > t)
    throw std::invalid_argument("factorization_check: needs n >= 1, 0 <= t <= n, 0 <= k <= t/2");
  return factorization_check(expand_psi(n, t), k);
}

FactorizationResult factorization_check(const PsiBundle& b, long k) {
  const long n = b.n, t = b.t;
  if (n < 1 || t < 0 || t > n || k < 0 || 2 * k > t)
    throw std::invalid_argument("factorization_check: needs n >= 1, 0 <= t <= n, 0 <= k <= t/2");
  FactorizationResult r;
  r.n = n;
  r.t = t;
  r.k = k;
  r.op_value = op_L(array_for(ArrayKind::domb), n, t, k);
  r.psi_value = eval_int(b.psi, ExactInt(k));
  const ExactInt last = ExactInt(2 * n - 2 * t + 2 * k - 1);
  ExactInt denom = ExactInt(n) * n;
  denom *= ipow(ExactInt(n - k + 1), 3);
  denom *= ipow(ExactInt(n - t + k + 1), 3);
  denom *= 2 * n - 2 * k - 1;
  denom *= last;
  r.lhs = r.op_value * denom;
  ExactInt pre = binom(n, k) * binom(n, k);
  pre *= binom(2 * n - 2 * k, n - k);
  pre *= binom(n, t - k) * binom(n, t - k);
  pre *= binom(2 * n - 2 * t + 2 * k, n - t + k);
  r.rhs = pre * r.psi_value;
  r.identity = r.lhs == r.rhs;
  r.excluded_case = t == n && k == 0;
  r.negative_factor = sign(last) < 0;
  if (r.excluded_case) {
    r.sign_ok = sign(r.op_value) == -sign(r.psi_value);
  } else {
    r.sign_ok = sign(r.op_value) == sign(r.psi_value);
  }
  return r;
}

ClaimRecord factorization_sweep(long n_max, const PsiSource& psi, unsigned jobs) {
  ClaimRecord rec = record("factorization", "factorization");
  std::uint64_t negative_factor_cases = 0;
  std::vector<long> negative_counts(std::max(n_max, 0L) + 1, 0);
  sweep(rec, 1, n_max, jobs, [&](long n, Cell& c) {
    for (long t = 0; t <= n; ++t) {
      const PsiBundle b = psi(n, t);
      for (long k = 0; 2 * k <= t; ++k) {
        const FactorizationResult r = factorization_check(b, k);
        ++c.checked;
        if (r.negative_factor) ++negative_counts[n];
        if (!r.passed()) {
          c.fail(r.identity ? "sign coincidence broken" : "factorization identity broken",
                 {{"n", str(n)}, {"t", str(t)}, {"k", str(k)}, {"lhs", str(r.lhs)}, {"rhs", str(r.rhs)},
                  {"L", str(r.op_value)}, {"psi(k)", str(r.psi_value)}});
          return;
        }
      }
    }
  });
  for (long v : negative_counts) negative_factor_cases += v;
  rec.param("negative_factor_cases", static_cast<long>(negative_factor_cases));
  return rec;
}

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::cascade: return "psi_cascade";
    case IdentityId::nn_cascade: return "nn_cascade";
    case IdentityId::specialization: return "nn_specialization";
    case IdentityId::xi_extraction: return "xi_extraction";
    case IdentityId::eta_extraction: return "eta_extraction";
    case IdentityId::psi0_theta: return "psi0_theta";
    case IdentityId::theta_derivatives: return "theta_derivatives";
    case IdentityId::xi_eta_derivatives: return "xi_eta_derivatives";
    case IdentityId::forms_theta: return "forms.theta";
    case IdentityId::forms_xi_eta: return "forms.xi_eta";
    case IdentityId::forms_psi_half: return "forms.psi_half";
    case IdentityId::forms_small_n: return "forms.small_n";
    case IdentityId::forms_psi_nn: return "forms.psi_nn";
  }
  return "?";
}

std::vector<IdentityId> all_identities() {
  return {IdentityId::cascade,         IdentityId::nn_cascade,        IdentityId::specialization,
          IdentityId::xi_extraction,   IdentityId::eta_extraction,    IdentityId::psi0_theta,
          IdentityId::theta_derivatives, IdentityId::xi_eta_derivatives, IdentityId::forms_theta,
          IdentityId::forms_xi_eta,    IdentityId::forms_psi_half,    IdentityId::forms_small_n,
          IdentityId::forms_psi_nn};
}

bool uses_t(IdentityId id) {
  switch (id) {
    case IdentityId::cascade:
    case IdentityId::xi_extraction:
    case IdentityId::eta_extraction:
    case IdentityId::psi0_theta:
    case IdentityId::forms_psi_half:
    case IdentityId::forms_small_n:
      return true;
    default:
      return false;
  }
}

std::pair<long, long> degree_bounds(IdentityId id) {
  // psi^(n,t)(x) has total degree 10 in (n, t, x); all derived objects are lower.
  if (id == IdentityId::forms_small_n) return {0, kFormDegreeT};
  if (id == IdentityId::forms_psi_half) return {kFormDegreeN, kFormDegreeT};
  return {10, uses_t(id) ? 10 : 0};
}

namespace {

// Compares coefficientwise; records the first mismatch.
bool same_poly(const IntPoly& lhs, const IntPoly& rhs, const std::string& what, long n, long t, GridResult& r) {
  if (lhs == rhs) return true;
  const long deg = std::max(lhs.degree(), rhs.degree());
  for (long i = 0; i <= deg; ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      r.passed = false;
      r.n = n;
      r.t = t;
      r.what = what + " at x^" + std::to_string(i);
      r.lhs = to_decimal(lhs.coeff(i));
      r.rhs = to_decimal(rhs.coeff(i));
      break;
    }
  }
  return false;
}

bool same_value(const ExactRat& lhs, const ExactRat& rhs, const std::string& what, long n, long t, GridResult& r) {
  if (lhs == rhs) return true;
  r.passed = false;
  r.n = n;
  r.t = t;
  r.what = what;
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  return false;
}

IntPoly two_x_minus_t(long t) { return IntPoly::linear(ExactInt(2), ExactInt(-t)); }

bool check_cascade(const IntPoly& psi, const IntPoly& psi1, const IntPoly& psi2, const IntPoly& psi3, long n, long t,
                   GridResult& r) {
  const IntPoly f = two_x_minus_t(t);
  return same_poly(derivative(psi), f * psi1, "psi' = (2x-t) psi1", n, t, r) &&
         same_poly(derivative(psi1), ExactInt(2) * (f * psi2), "psi1' = 2(2x-t) psi2", n, t, r) &&
         same_poly(derivative(psi2), ExactInt(6) * (f * psi3), "psi2' = 6(2x-t) psi3", n, t, r);
}

bool check_point(IdentityId id, long n, long t, const PsiSource& psi, GridResult& r) {
  switch (id) {
    case IdentityId::cascade: {
      const PsiBundle b = psi(n, t);
      return check_cascade(b.psi, b.psi1, b.psi2, b.psi3, n, t, r);
    }
    case IdentityId::nn_cascade: {
      const NnBundle b = expand_nn(n);
      return check_cascade(b.psi, b.psi1, b.psi2, b.psi3, n, n, r);
    }
    case IdentityId::specialization: {
      const NnBundle nn = expand_nn(n);
      const PsiBundle b = psi(n, n);
      return same_poly(nn.psi, b.psi, "psi^(n,n) vs psi^(n,t) at t=n", n, n, r) &&
             same_poly(nn.psi1, b.psi1, "psi1^(n,n) vs psi1 at t=n", n, n, r) &&
             same_poly(nn.psi2, b.psi2, "psi2^(n,n) vs psi2 at t=n", n, n, r) &&
             same_poly(nn.psi3, b.psi3, "psi3^(n,n) vs psi3 at t=n", n, n, r);
    }
    case IdentityId::xi_extraction: {
      const ExactInt n1 = ExactInt(n + 1);
      const ExactRat lhs(psi(n, t).psi1.coeff(0));
      const ExactRat rhs = ExactRat(n1 * n1) * eval_rat(expand_theta(n).xi, ExactRat(t));
      return same_value(lhs, rhs, "psi1(0) = (n+1)^2 xi(t)", n, t, r);
    }
    case IdentityId::eta_extraction: {
      const ExactRat lhs(psi(n, t).psi2.coeff(0));
      const ExactRat rhs = ExactRat(n + 1) * eval_rat(expand_theta(n).eta, ExactRat(t));
      return same_value(lhs, rhs, "psi2(0) = (n+1) eta(t)", n, t, r);
    }
    case IdentityId::psi0_theta: {
      const ExactInt n1 = ExactInt(n + 1);
      const ExactRat lhs(psi(n, t).psi.coeff(0));
      const ExactRat rhs = ExactRat(n1 * n1) * eval_rat(expand_theta(n).theta[0], ExactRat(t));
      return same_value(lhs, rhs, "psi(0) = (n+1)^2 theta(t)", n, t, r);
    }
    case IdentityId::theta_derivatives: {
      const ThetaBundle tb = expand_theta(n);
      const auto shown = displayed_theta_derivatives(n);
      for (std::size_t i = 0; i < shown.size(); ++i) {
        if (!same_poly(tb.theta[i + 1], shown[i], "theta derivative of order " + std::to_string(i + 1), n, -1, r))
          return false;
      }
      return true;
    }
    case IdentityId::xi_eta_derivatives: {
      const ThetaBundle tb = expand_theta(n);
      const auto shown = displayed_xi_eta_derivatives(n);
      for (unsigned i = 0; i < 3; ++i) {
        if (!same_poly(derivative(tb.xi, i + 1), shown[i], "xi derivative of order " + std::to_string(i + 1), n, -1, r))
          return false;
      }
      for (unsigned i = 0; i < 2; ++i) {
        if (!same_poly(derivative(tb.eta, i + 1), shown[3 + i], "eta derivative of order " + std::to_string(i + 1), n,
                       -1, r))
          return false;
      }
      return true;
    }
    default: break;
  }
  return true;
}

FormGroup group_of(IdentityId id) {
  switch (id) {
    case IdentityId::forms_theta: return FormGroup::theta;
    case IdentityId::forms_xi_eta: return FormGroup::xi_eta;
    case IdentityId::forms_psi_half: return FormGroup::psi_half;
    case IdentityId::forms_small_n: return FormGroup::small_n;
    default: return FormGroup::psi_nn;
  }
}

bool is_form_group(IdentityId id) {
  return id == IdentityId::forms_theta || id == IdentityId::forms_xi_eta || id == IdentityId::forms_psi_half ||
         id == IdentityId::forms_small_n || id == IdentityId::forms_psi_nn;
}

}  // namespace

GridResult identity_grid_check(IdentityId id, const GridBounds& grid, const PsiSource& psi) {
  const auto [deg_n, deg_t] = degree_bounds(id);
  const bool with_t = uses_t(id);
  if (deg_n > 0 && grid.n_hi - grid.n_lo + 1 <= deg_n)
    throw std::invalid_argument(std::string("identity_grid_check: n grid too small for ") + to_string(id));
  if (with_t && grid.t_hi - grid.t_lo + 1 <= deg_t)
    throw std::invalid_argument(std::string("identity_grid_check: t grid too small for ") + to_string(id));
  if (grid.n_lo < 1 || grid.t_lo < 0) throw std::invalid_argument("identity_grid_check: needs n >= 1, t >= 0");

  GridResult r;
  r.id = id;
  if (is_form_group(id)) {
    for (const ClosedForm* f : closed_forms_in_group(group_of(id))) {
      const long n_lo = f->fixed_n ? f->fixed_n : grid.n_lo;
      const long n_hi = f->fixed_n ? f->fixed_n : grid.n_hi;
      const long t_lo = f->uses_t ? grid.t_lo : 0;
      const long t_hi = f->uses_t ? grid.t_hi : 0;
      for (long n = n_lo; n <= n_hi; ++n) {
        for (long t = t_lo; t <= t_hi; ++t) {
          ++r.points;
          try {
            if (!same_value(f->direct(n, t), f->displayed(n, t), f->id, n, t, r)) return r;
          } catch (const std::exception& e) {
            r.passed = false;
            r.n = n;
            r.t = t;
            r.what = f->id + ": " + e.what();
            return r;
          }
        }
      }
    }
    return r;
  }
  for (long n = grid.n_lo; n <= grid.n_hi; ++n) {
    const long t_lo = with_t ? grid.t_lo : 0;
    const long t_hi = with_t ? grid.t_hi : 0;
    for (long t = t_lo; t <= t_hi; ++t) {
      ++r.points;
      if (!check_point(id, n, t, psi, r)) return r;
    }
  }
  return r;
}

ClaimRecord to_claim(const GridResult& r, const std::string& family, const GridBounds& grid) {
  ClaimRecord rec = record(to_string(r.id), family);
  const auto [deg_n, deg_t] = degree_bounds(r.id);
  if (deg_n > 0) rec.param("n_lo", grid.n_lo).param("n_hi", grid.n_hi).param("degree_n", deg_n);
  if (uses_t(r.id)) rec.param("t_lo", grid.t_lo).param("t_hi", grid.t_hi).param("degree_t", deg_t);
  rec.checked = r.points;
  if (!r.passed) {
    rec.fail(r.what);
    rec.witness("n", r.n);
    if (r.t >= 0) rec.witness("t", r.t);
    if (!r.lhs.empty()) rec.witness("lhs", r.lhs).witness("rhs", r.rhs);
  }
  return rec;
}

}  // namespace qlc
