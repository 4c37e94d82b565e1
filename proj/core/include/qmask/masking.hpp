#pragma once

// Masking condition, masker application and two-qubit unitary maskers.

#include <array>
#include <span>

#include "qmask/states.hpp"

namespace qmask {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Two-qubit unitary U = U_d (V_A x V_B), with
/// U_d = exp(-i (ax XX + ay YY + az ZZ)) and V = Rz(e0) Ry(e1) Rz(e2).
struct MaskerParams {
  double alpha_x = 0.0;
  double alpha_y = 0.0;
  double alpha_z = 0.0;
  std::array<double, 3> euler_a{};
  std::array<double, 3> euler_b{};
  /// Set once the Cartan coefficients were reduced into [0, pi/2).
  bool canonical_form = false;

  static constexpr std::size_t kDimension = 9;
  std::array<double, kDimension> to_vector() const;
  static MaskerParams from_vector(std::span<const double> v);

  friend bool operator==(const MaskerParams&, const MaskerParams&) = default;
};

struct MaskingVerdict {
  double residual = 0.0;
  bool masked = false;
  double tolerance = 0.0;
};

/// ||Tr_1 L1 - Tr_1 L2||_F^2 + ||Tr_2 L1 - Tr_2 L2||_F^2.
double masking_residual(const DensityMatrix& lambda1, const DensityMatrix& lambda2);
double masking_residual(const PureState2Q& psi1, const PureState2Q& psi2);

MaskingVerdict check_masking(const DensityMatrix& lambda1, const DensityMatrix& lambda2, double tolerance);

/// U (input x ancilla) U^dagger. Throws NotUnitaryError when
/// ||U^dagger U - I||_F > kUnitarityTolerance.
DensityMatrix apply_masker(const ComplexMatrix& u, const DensityMatrix& input, const DensityMatrix& ancilla);

/// U (psi x ancilla) for pure inputs.
PureState2Q apply_masker(const ComplexMatrix& u, const QubitState& input, const QubitState& ancilla);

/// Z-Y-Z single-qubit rotation Rz(a) Ry(b) Rz(c).
ComplexMatrix euler_zyz(const std::array<double, 3>& angles);

/// Angles (a, b, c) with u = e^{i phase} Rz(a) Ry(b) Rz(c).
std::array<double, 3> euler_zyz_angles(const ComplexMatrix& u);

/// exp(-i (ax XX + ay YY + az ZZ)), evaluated in the Bell basis where the
/// three commuting terms are simultaneously diagonal.
ComplexMatrix cartan_core(double alpha_x, double alpha_y, double alpha_z);

ComplexMatrix cartan_unitary(const MaskerParams& params);

/// Equivalent parameters (up to a global phase of the unitary) with each
/// Cartan coefficient in [0, pi/2); shifts by pi/2 are absorbed into the
/// local factors.
MaskerParams canonicalize(const MaskerParams& params);

/// I x diag(1, e^{iy}).
ComplexMatrix phase_unitary(double y);

/// Maps |00> -> (|01>+|10>)/sqrt2, |10> -> (|00>-|11>)/sqrt2,
/// |01> -> (|01>-|10>)/sqrt2, |11> -> (|00>+|11>)/sqrt2.
const ComplexMatrix& canonical_orthogonal_masker();

inline constexpr double kConvexMaskingTolerance = 1e-10;

/// True iff for every p in p_grid both reduced states of
/// U(mix(p) x ancilla)U^dagger match the common reduced states of the masked
/// pure inputs within `tolerance` per entry. Throws PreconditionError when u
/// does not mask psi1, psi2 in the first place (residual > tolerance).
bool verify_convex_masking(const ComplexMatrix& u, const QubitState& psi1, const QubitState& psi2,
                           const DensityMatrix& ancilla, std::span<const double> p_grid,
                           double tolerance = kConvexMaskingTolerance);

}  // namespace qmask
