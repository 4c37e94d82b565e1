#pragma once

// State families: Bloch qubits, Walgate-form masked pairs and their mixtures.

#include <array>
#include <span>
#include <utility>

#include "qmask/linalg.hpp"

namespace qmask {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kNormTolerance = 1e-10;
/// Slack admitted on closed angle/probability ranges so grid endpoints
/// computed in floating point are not rejected.
inline constexpr double kRangeSlack = 1e-12;

struct BlochAngles {
  double polar = 0.0;    ///< [0, pi]
  double azimuth = 0.0;  ///< [0, 2 pi)
};

/// Normalized single-qubit pure state.
class QubitState {
 public:
  /// Throws InvalidStateError when not normalized within kNormTolerance.
  QubitState(Complex a0, Complex a1);

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }

  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  ComplexMatrix projector() const { return ComplexMatrix::projector(amps_); }

 private:
  std::array<Complex, 2> amps_;
};

/// Normalized two-qubit pure state in basis (00, 01, 10, 11).
class PureState2Q {
 public:
  explicit PureState2Q(std::array<Complex, 4> amplitudes);
  PureState2Q(Complex a00, Complex a01, Complex a10, Complex a11)
      : PureState2Q(std::array<Complex, 4>{a00, a01, a10, a11}) {}

  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  ComplexMatrix projector() const { return ComplexMatrix::projector(amps_); }

 private:
  std::array<Complex, 4> amps_;
};

/// Hermitian, unit-trace, positive semidefinite 2x2 or 4x4 matrix.
class DensityMatrix {
 public:
  inline static constexpr double kHermitianTol = 1e-10;
  inline static constexpr double kTraceTol = 1e-10;
  inline static constexpr double kEigenFloor = -1e-9;

  /// Validates all invariants; throws InvalidStateError / DimensionError.
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix from_pure(const PureState2Q& psi) { return DensityMatrix(psi.projector()); }
  static DensityMatrix from_pure(const QubitState& psi) { return DensityMatrix(psi.projector()); }

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

using PurePair = std::pair<PureState2Q, PureState2Q>;

/// cos(x/2)|0> + e^{iy} sin(x/2)|1>. Throws DomainError outside the ranges.
QubitState bloch_to_pure(const BlochAngles& angles);

/// The two orthogonal Walgate-form states with eta_0 at theta_prime and
/// eta_1 at theta (both in the XZ plane):
///   chi1 = sqrt(a1)(c'|00> + s'|01>) + sqrt(1-a1)(c|10> + s|11>)
///   chi2 = sqrt(a2)(s'|00> - c'|01>) + sqrt(1-a2)(s|10> - c|11>)
/// with c = cos(theta/2), s = sin(theta/2) and primes likewise.
/// Angles in [0, 2 pi], weights in [0, 1].
PurePair walgate_orthogonal_pair(double theta, double theta_prime, double alpha1, double alpha2);

/// walgate_orthogonal_pair(theta, theta + pi, 1/2, 1/2); theta in [0, pi].
PurePair canonical_orthogonal_pair(double theta);

/// Non-orthogonal Walgate form on a common Schmidt weight t0 (t1 = 1 - t0):
///   Sigma1 = sqrt(t0)|0 tau0> + sqrt(t1)|1 tau1>
///   Sigma2 = sqrt(t0)|0 nu0>  + sqrt(t1)|1 nu1>
/// where tau0 = (cos theta/2, sin theta/2), tau1 = (sin theta/2, cos theta/2)
/// and nu built the same way from theta_prime. Angles in [0, 2 pi].
PurePair walgate_nonorthogonal_pair(double t0, double theta, double theta_prime);

/// walgate_nonorthogonal_pair(1/2, theta, pi - theta), i.e.
/// ((|0 tau0> + |1 tau1>)/sqrt2, (|0 tau1> + |1 tau0>)/sqrt2); theta in [0, pi/2].
PurePair canonical_nonorthogonal_pair(double theta);

/// p a + (1 - p) b. Throws DomainError for p outside [0, 1] and
/// DimensionError on mismatched dimensions.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double p);

/// Mixture of canonical_orthogonal_pair(theta); p in [0, 1], theta in [0, pi].
DensityMatrix masked_mixture_orthogonal(double p, double theta);

/// Mixture of canonical_nonorthogonal_pair(theta); p in [0, 1], theta in [0, pi/2].
DensityMatrix masked_mixture_nonorthogonal(double p, double theta);

/// Throws DomainError unless lo - kRangeSlack <= value <= hi + kRangeSlack.
void require_in_range(double value, double lo, double hi, const char* name);

}  // namespace qmask
