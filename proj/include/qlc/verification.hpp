#pragma once

// Full verification run: every claim family, assembled into one certificate.

#include <filesystem>
#include <optional>
#include <string>

#include "qlc/certificate.hpp"
#include "qlc/proof_verify.hpp"

namespace qlc {

struct VerificationConfig {
  long n_max_direct = 150;         // q-log-convexity, L_t(a(n,0)) >= 0, C2 sweeps
  long n_max_factorization = 60;
  long n_max_sturm = 100;          // Sturm scaffolding, claims, psi sweeps
  long series_N = 100;
  unsigned series_digits = 40;
  long n_max_monotonicity = 300;
  long n_max_root_ratio = 120;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_path;
  OutputFormat format = OutputFormat::json;
  GridBounds identity_grid = kIdentityGrid;
  GridBounds endpoint_grid = kEndpointGrid;
  std::optional<PsiFault> psi_fault;

  /// Throws std::invalid_argument unless all bounds are >= 1 and
  /// series_digits >= 10.
  void validate() const;
};

/// Claim families in certificate order.
const std::vector<std::string>& claim_families();

/// Runs everything in `config`. Exceptions inside one family become failed
/// records of that family; the run itself only throws for an invalid config.
/// A failed cache write does not touch the certificate; its message goes to
/// `cache_error` when given.
Certificate run_full_verification(const VerificationConfig& config, std::string* cache_error = nullptr);

}  // namespace qlc
