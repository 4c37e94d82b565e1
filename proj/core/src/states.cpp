#include "qmask/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmask/errors.hpp"

namespace qmask {

void require_in_range(double value, double lo, double hi, const char* name) {
  if (!std::isfinite(value) || value < lo - kRangeSlack || value > hi + kRangeSlack) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
}

QubitState::QubitState(Complex a0, Complex a1) : amps_{a0, a1} {
  const double n = norm(amps_);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw InvalidStateError("QubitState: norm " + std::to_string(n) + " is not 1");
  }
}

PureState2Q::PureState2Q(std::array<Complex, 4> amplitudes) : amps_(amplitudes) {
  const double n = norm(amps_);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw InvalidStateError("PureState2Q: norm " + std::to_string(n) + " is not 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.is_square() || (mat_.rows() != 2 && mat_.rows() != 4)) {
    throw DimensionError("DensityMatrix: expected 2x2 or 4x4");
  }
  if (!mat_.all_finite()) throw InvalidStateError("DensityMatrix: non-finite entry");
  const double herm = hermiticity_defect(mat_);
  if (herm > kHermitianTol) throw InvalidStateError("DensityMatrix: not Hermitian (" + std::to_string(herm) + ")");
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvalidStateError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const double lowest = hermitian_eigensystem(mat_, kHermitianTol).eigenvalues.front();
  if (lowest < kEigenFloor) {
    throw InvalidStateError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

QubitState bloch_to_pure(const BlochAngles& angles) {
  require_in_range(angles.polar, 0.0, kPi, "polar angle");
  if (!std::isfinite(angles.azimuth) || angles.azimuth < -kRangeSlack || angles.azimuth >= 2.0 * kPi) {
    throw DomainError("azimuth " + std::to_string(angles.azimuth) + " outside [0, 2pi)");
  }
  return {std::cos(angles.polar / 2.0), std::polar(1.0, angles.azimuth) * std::sin(angles.polar / 2.0)};
}

PurePair walgate_orthogonal_pair(double theta, double theta_prime, double alpha1, double alpha2) {
  require_in_range(theta, 0.0, 2.0 * kPi, "theta");
  require_in_range(theta_prime, 0.0, 2.0 * kPi, "theta_prime");
  require_in_range(alpha1, 0.0, 1.0, "alpha1");
  require_in_range(alpha2, 0.0, 1.0, "alpha2");
  alpha1 = std::clamp(alpha1, 0.0, 1.0);
  alpha2 = std::clamp(alpha2, 0.0, 1.0);

  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const double cp = std::cos(theta_prime / 2.0), sp = std::sin(theta_prime / 2.0);
  const double r1 = std::sqrt(alpha1), q1 = std::sqrt(1.0 - alpha1);
  const double r2 = std::sqrt(alpha2), q2 = std::sqrt(1.0 - alpha2);
  return {PureState2Q(r1 * cp, r1 * sp, q1 * c, q1 * s), PureState2Q(r2 * sp, -r2 * cp, q2 * s, -q2 * c)};
}

PurePair canonical_orthogonal_pair(double theta) {
  require_in_range(theta, 0.0, kPi, "theta");
  return walgate_orthogonal_pair(theta, theta + kPi, 0.5, 0.5);
}

PurePair walgate_nonorthogonal_pair(double t0, double theta, double theta_prime) {
  require_in_range(t0, 0.0, 1.0, "t0");
  require_in_range(theta, 0.0, 2.0 * kPi, "theta");
  require_in_range(theta_prime, 0.0, 2.0 * kPi, "theta_prime");
  t0 = std::clamp(t0, 0.0, 1.0);

  const double a = std::sqrt(t0), b = std::sqrt(1.0 - t0);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const double cp = std::cos(theta_prime / 2.0), sp = std::sin(theta_prime / 2.0);
  // |0 tau0> + |1 tau1> with tau1 the XZ reflection of tau0.
  return {PureState2Q(a * c, a * s, b * s, b * c), PureState2Q(a * cp, a * sp, b * sp, b * cp)};
}

PurePair canonical_nonorthogonal_pair(double theta) {
  require_in_range(theta, 0.0, kPi / 2.0, "theta");
  return walgate_nonorthogonal_pair(0.5, theta, kPi - theta);
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double p) {
  require_in_range(p, 0.0, 1.0, "p");
  if (a.dim() != b.dim()) throw DimensionError("mix: dimension mismatch");
  p = std::clamp(p, 0.0, 1.0);
  return DensityMatrix(p * a.matrix() + (1.0 - p) * b.matrix());
}

DensityMatrix masked_mixture_orthogonal(double p, double theta) {
  require_in_range(p, 0.0, 1.0, "p");
  const auto [chi1, chi2] = canonical_orthogonal_pair(theta);
  return mix(DensityMatrix::from_pure(chi1), DensityMatrix::from_pure(chi2), p);
}

DensityMatrix masked_mixture_nonorthogonal(double p, double theta) {
  require_in_range(p, 0.0, 1.0, "p");
  const auto [s1, s2] = canonical_nonorthogonal_pair(theta);
  return mix(DensityMatrix::from_pure(s1), DensityMatrix::from_pure(s2), p);
}

}  // namespace qmask
