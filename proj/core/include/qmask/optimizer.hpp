#pragma once

// Multi-start search over two-qubit unitary maskers, and brute-force grid
// oracles for the masking solutions of the Walgate-form pairs.

#include <cstdint>
#include <utility>
#include <vector>

#include "qmask/masking.hpp"

namespace qmask {

/// `points` uniformly spaced values on [lo, hi], both ends included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

struct OptimizerConfig {
  std::size_t restarts = 64;
  /// Per local-search run.
  std::size_t max_iterations = 2000;
  std::uint64_t seed = 0;
  double masking_tolerance = 1e-8;
  double penalty_weight = 1e4;
  double simplex_scale = 0.3;
  std::vector<double> p_grid = uniform_grid(0.0, 1.0, 21);
  /// Worker threads for restarts; 0 picks the hardware concurrency. The
  /// result does not depend on this value.
  std::size_t threads = 1;

  /// Throws DomainError when any field is out of range.
  void validate() const;
};

using EofTable = std::vector<std::pair<double, double>>;

struct OptimizationResult {
  MaskerParams params;
  double residual = 0.0;
  EofTable eof_by_p;
  double min_eof = 0.0;
  double argmin_p = 0.0;
  bool converged = false;
  std::size_t restart_index = 0;
  /// Value of the objective the winning restart minimised.
  double objective = 0.0;
};

/// Residual of the masked pure states U(psi_i x |0>).
double masker_residual(const ComplexMatrix& u, const QubitState& input1, const QubitState& input2);

/// E_F of U(mix(p) x |0><0|)U^dagger for each p. Throws PreconditionError
/// when the unitary's masking residual on the pure inputs exceeds
/// `tolerance`.
EofTable entanglement_scan(const ComplexMatrix& u, const QubitState& input1, const QubitState& input2,
                           std::span<const double> p_grid, double tolerance = 1e-8);
EofTable entanglement_scan(const MaskerParams& params, const QubitState& input1, const QubitState& input2,
                           std::span<const double> p_grid, double tolerance = 1e-8);

/// Best-of-restarts minimiser of the masking residual. Throws DomainError for
/// identical inputs or an invalid config; a search where no restart reaches
/// masking_tolerance returns its best attempt with converged = false.
OptimizationResult find_masker(const QubitState& input1, const QubitState& input2, const OptimizerConfig& config);

/// Best-of-restarts minimiser of
///   penalty_weight * residual + sum_{p in p_grid} E_F(eps'(p)).
/// Each restart first drives the residual down, then descends on the
/// penalised objective from there.
OptimizationResult min_entanglement_masker(const QubitState& input1, const QubitState& input2,
                                           const OptimizerConfig& config);

inline constexpr double kOracleResidualThreshold = 1e-6;

struct OrthogonalGridPoint {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double theta_prime = 0.0;
  double residual = 0.0;
};

/// Exhaustive grid over (alpha1, alpha2, theta_prime) in [0,1]^2 x [0, 2pi]
/// with `steps` points per axis; returns the points whose orthogonal
/// Walgate pair has residual <= kOracleResidualThreshold.
std::vector<OrthogonalGridPoint> lemma2_grid_oracle(double theta, std::size_t steps);

struct NonorthogonalGridPoint {
  double t0 = 0.0;
  double theta_prime = 0.0;
  double residual = 0.0;
};

/// Grid over (t0, theta_prime) in [0,1] x [0, 2pi] for the non-orthogonal
/// Walgate pair. Points where the two states coincide up to phase (nothing
/// to mask) are skipped.
std::vector<NonorthogonalGridPoint> lemma3_grid_oracle(double theta, std::size_t steps);

}  // namespace qmask
