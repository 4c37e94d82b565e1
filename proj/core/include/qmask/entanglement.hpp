#pragma once

// Entropies (bits), concurrence, entanglement of formation (ebits),
// negativity and the PPT decision for two-qubit states.

#include "qmask/states.hpp"

namespace qmask {

/// Negativity at or below this is a separable (PPT) verdict.
inline constexpr double kPptTolerance = 1e-9;
/// Eigenvalues of rho at or below this are treated as outside its support
/// when forming the concurrence matrix.
inline constexpr double kSupportCutoff = 1e-13;

struct EntanglementReport {
  double entropy_global = 0.0;
  double entropy_local_1 = 0.0;  ///< S(Tr_1 rho), the reduced state of party 2
  double entropy_local_2 = 0.0;  ///< S(Tr_2 rho), the reduced state of party 1
  double delta_s = 0.0;          ///< entropy_global - entropy_local_1
  double concurrence = 0.0;
  double eof = 0.0;
  double negativity = 0.0;
  bool ppt = true;
};

/// h(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// -sum lambda log2 lambda over the spectrum; in [0, log2 dim].
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho) - S(Tr_1 rho). Negative values certify entanglement.
double entropic_gap(const DensityMatrix& rho);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), the l_i being square roots
/// of the spectrum of sqrt(rho) rho~ sqrt(rho), rho~ = (Y x Y) rho* (Y x Y).
/// The Hermitian product is compressed onto the support of rho before
/// diagonalising, so the zero eigenvalues of rank-deficient states stay
/// exactly zero instead of picking up sqrt(round-off).
double concurrence(const DensityMatrix& rho);

/// Concurrence of p|psi1><psi1| + (1-p)|psi2><psi2| from the two-element
/// ensemble directly: with tau_ij = v_i^T (Y x Y) v_j over v = (sqrt p psi1,
/// sqrt(1-p) psi2), C = s1 - s2 for the singular values of tau. No
/// eigensolver, so this is the cheap path for optimizer objectives.
double mixture_concurrence(const PureState2Q& psi1, const PureState2Q& psi2, double p);

/// h((1 + sqrt(1 - C^2)) / 2), C clamped to [0, 1].
double eof_from_concurrence(double c);

double entanglement_of_formation(const DensityMatrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose over party 2.
double negativity(const DensityMatrix& rho);

bool is_ppt(const DensityMatrix& rho, double tol = kPptTolerance);

/// det(rho^{T_2}).
double partial_transpose_determinant(const DensityMatrix& rho);

/// S(Tr_1 |psi><psi|).
double pure_entanglement_entropy(const PureState2Q& psi);

EntanglementReport analyze(const DensityMatrix& rho, double ppt_tol = kPptTolerance);

}  // namespace qmask
