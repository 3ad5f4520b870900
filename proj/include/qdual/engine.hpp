/**
 * @file engine.hpp
 * @brief Batch drivers behind the CLI: single-case verification, grid sweeps,
 *        residue-oracle comparisons, the unity identity, and the fixed-point
 *        level-correspondence check.
 *
 * Trials are independent: trial t uses the derived seed derive_seed(seed, t),
 * so verdicts are identical at any parallelism and reports are reproducible
 * for a fixed (config, seed).
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qdual/report.hpp"

namespace qdual {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  // single-case shape (verify / residue / ifunction; unity uses n=3, d)
  int n = 3, r = 2, d = 1, l = 0;
  // sweep bounds
  int n_max = 5, d_max = 3;
  int trials = 10;
  std::string field = "rational";
  std::uint64_t seed = 1;
  int jobs = 1;
  // residue numeric cross-check
  bool numeric = false;
  int grid = 512;
  // zero elapsed_ms for byte-identical reports
  bool no_timing = false;
};

/// Regime-dispatched duality check on `trials` sampled points. The A-side
/// subset is the prefix {1..r}. Out-of-range l raises ConfigError quoting the
/// admissible window.
VerificationReport run_verify(const RunConfig& cfg);

/// Every (n <= n_max, 1 <= r < n, d <= d_max, l in [-r, n-r]); one report per
/// case.
std::vector<VerificationReport> run_sweep(const RunConfig& cfg);

/// Exact assemble_E vs a_sum and (-1)^d assemble_F vs b_sum; optional numeric
/// quadrature comparison (d <= 3; gates pass/fail for d <= 2 at 1e-8).
VerificationReport run_residue(const RunConfig& cfg);

/// Corollary unity sum == 1 at n = 3.
VerificationReport run_unity(const RunConfig& cfg);

/// Level correspondence at every fixed point of Gr(r,n).
VerificationReport run_ifunction(const RunConfig& cfg);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace qdual
