#pragma once

// Machine checks of the sign analysis for the Domb array. Each verify_*
// returns claim records in a fixed order; nothing here throws on a failed
// check, failures land in the records.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlc/certificate.hpp"
#include "qlc/proof_polys.hpp"

namespace qlc {

/// L_t(a(n,0)) for n = 1..4, t = 0..n, row by row.
inline constexpr std::array<long, 14> kProp31Table = {4, 4, 8, 32, 24, 40, 320, 646, 152, 280, 3808, 14296, 7772, 860};

/// Test fixture: add `delta` to coefficient `coefficient` of psi^(n,t).
struct PsiFault {
  long n = 0;
  long t = 0;
  long coefficient = 0;
  long delta = 1;
};

using PsiSource = std::function<PsiBundle(long n, long t)>;

/// expand_psi, optionally with one perturbed coefficient.
PsiSource psi_source(std::optional<PsiFault> fault = std::nullopt);

std::vector<ClaimRecord> verify_prop31(long n_max, long sturm_max, unsigned jobs = 1);
std::vector<ClaimRecord> verify_claims(long n_lo, long n_hi, const PsiSource& psi = psi_source());
std::vector<ClaimRecord> verify_prop32(long n_max, const PsiSource& psi = psi_source(), unsigned jobs = 1);
std::vector<ClaimRecord> verify_prop33(long n_max, unsigned jobs = 1);

struct FactorizationResult {
  long n = 0, t = 0, k = 0;
  ExactInt op_value;    // L_t(a(n,k))
  ExactInt psi_value;   // psi^(n,t)(k)
  ExactInt lhs;         // L times the denominator product
  ExactInt rhs;         // binomial prefactor times psi(k)
  bool identity = false;
  bool excluded_case = false;    // (t, k) == (n, 0)
  bool negative_factor = false;  // 2n - 2t + 2k - 1 < 0
  bool sign_ok = false;          // sign coincidence, or its reversal in the excluded case
  bool passed() const { return identity && sign_ok; }
};

/// Requires n >= 1, 0 <= t <= n, 0 <= k <= t/2 (std::invalid_argument).
FactorizationResult factorization_check(long n, long t, long k);
FactorizationResult factorization_check(const PsiBundle& b, long k);

ClaimRecord factorization_sweep(long n_max, const PsiSource& psi = psi_source(), unsigned jobs = 1);

enum class IdentityId {
  cascade,             // the three derivative cascades of psi^(n,t)
  nn_cascade,          // same for psi^(n,n), grid in n only
  specialization,      // psi^(n,n) == psi^(n,t) at t = n
  xi_extraction,       // psi1(0) == (n+1)^2 xi(t)
  eta_extraction,      // psi2(0) == (n+1) eta(t)
  psi0_theta,          // psi(0) == (n+1)^2 theta(t)
  theta_derivatives,   // displayed theta' .. theta'''' vs formal derivatives
  xi_eta_derivatives,  // displayed xi', xi'', xi''', eta', eta''
  forms_theta,
  forms_xi_eta,
  forms_psi_half,
  forms_small_n,
  forms_psi_nn,
};

const char* to_string(IdentityId id);
std::vector<IdentityId> all_identities();

/// Degree bound of the identity's two sides in n (first) and t (second; 0
/// when t does not occur).
std::pair<long, long> degree_bounds(IdentityId id);
bool uses_t(IdentityId id);

struct GridBounds {
  long n_lo = 1, n_hi = 17;
  long t_lo = 0, t_hi = 17;
};

inline constexpr GridBounds kIdentityGrid{1, 17, 0, 17};
inline constexpr GridBounds kEndpointGrid{1, 20, 0, 20};

struct GridResult {
  IdentityId id{};
  bool passed = true;
  std::uint64_t points = 0;
  long n = -1, t = -1;  // first failing point
  std::string what;     // failing component
  std::string lhs, rhs;
};

/// Exhaustive exact check on the grid. Throws std::invalid_argument unless
/// the grid has more points than the degree bound in every parameter.
GridResult identity_grid_check(IdentityId id, const GridBounds& grid, const PsiSource& psi = psi_source());

ClaimRecord to_claim(const GridResult& r, const std::string& family, const GridBounds& grid);

}  // namespace qlc
