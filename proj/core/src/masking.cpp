#include "qmask/masking.hpp"

#include <cmath>
#include <string>

#include "qmask/errors.hpp"

namespace qmask {

namespace {

double reduced_mismatch(const ComplexMatrix& l1, const ComplexMatrix& l2) {
  double r = 0.0;
  for (int party : {1, 2}) {
    const double d = frobenius_norm(partial_trace(l1, party) - partial_trace(l2, party));
    r += d * d;
  }
  return r;
}

void require_unitary(const ComplexMatrix& u, std::size_t n, const char* what) {
  if (u.rows() != n || u.cols() != n) throw DimensionError(std::string(what) + ": wrong unitary size");
  const double defect = unitarity_defect(u);
  if (defect > kUnitarityTolerance) {
    throw NotUnitaryError(std::string(what) + ": ||U^dagger U - I|| = " + std::to_string(defect));
  }
}

ComplexMatrix rz(double angle) {
  return {{std::polar(1.0, -angle / 2.0), 0.0}, {0.0, std::polar(1.0, angle / 2.0)}};
}

ComplexMatrix ry(double angle) {
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  return {{c, -s}, {s, c}};
}

}  // namespace

std::array<double, MaskerParams::kDimension> MaskerParams::to_vector() const {
  return {alpha_x,    alpha_y,    alpha_z,    euler_a[0], euler_a[1],
          euler_a[2], euler_b[0], euler_b[1], euler_b[2]};
}

MaskerParams MaskerParams::from_vector(std::span<const double> v) {
  if (v.size() != kDimension) throw DimensionError("MaskerParams::from_vector: expected 9 values");
  MaskerParams p;
  p.alpha_x = v[0];
  p.alpha_y = v[1];
  p.alpha_z = v[2];
  p.euler_a = {v[3], v[4], v[5]};
  p.euler_b = {v[6], v[7], v[8]};
  return p;
}

double masking_residual(const DensityMatrix& lambda1, const DensityMatrix& lambda2) {
  if (lambda1.dim() != 4 || lambda2.dim() != 4) throw DimensionError("masking_residual: expected 4x4 states");
  return reduced_mismatch(lambda1.matrix(), lambda2.matrix());
}

double masking_residual(const PureState2Q& psi1, const PureState2Q& psi2) {
  return reduced_mismatch(psi1.projector(), psi2.projector());
}

MaskingVerdict check_masking(const DensityMatrix& lambda1, const DensityMatrix& lambda2, double tolerance) {
  const double r = masking_residual(lambda1, lambda2);
  return {r, r <= tolerance, tolerance};
}

DensityMatrix apply_masker(const ComplexMatrix& u, const DensityMatrix& input, const DensityMatrix& ancilla) {
  require_unitary(u, 4, "apply_masker");
  if (input.dim() != 2 || ancilla.dim() != 2) throw DimensionError("apply_masker: expected qubit input and ancilla");
  ComplexMatrix out = u * kron(input.matrix(), ancilla.matrix()) * dagger(u);
  out = 0.5 * (out + dagger(out));
  return DensityMatrix(std::move(out));
}

PureState2Q apply_masker(const ComplexMatrix& u, const QubitState& input, const QubitState& ancilla) {
  require_unitary(u, 4, "apply_masker");
  const auto v = apply(u, kron(input.amplitudes(), ancilla.amplitudes()));
  return PureState2Q(v[0], v[1], v[2], v[3]);
}

ComplexMatrix euler_zyz(const std::array<double, 3>& angles) {
  return rz(angles[0]) * ry(angles[1]) * rz(angles[2]);
}

std::array<double, 3> euler_zyz_angles(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("euler_zyz_angles: expected 2x2");
  constexpr double eps = 1e-14;
  // Work in SU(2): w00 = e^{-i(a+c)/2} cos(b/2), w10 = e^{i(a-c)/2} sin(b/2).
  // Reading the half-angles off directly keeps a and c exact; the sign of
  // the square root only flips the global phase.
  const Complex root = std::sqrt(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0));
  const Complex w00 = u(0, 0) / root, w10 = u(1, 0) / root;
  const double cb = std::abs(w00), sb = std::abs(w10);
  const double b = 2.0 * std::atan2(sb, cb);
  const double half_sum = cb > eps ? -std::arg(w00) : 0.0;
  const double half_diff = sb > eps ? std::arg(w10) : 0.0;
  return {half_sum + half_diff, b, half_sum - half_diff};
}

ComplexMatrix cartan_core(double alpha_x, double alpha_y, double alpha_z) {
  const double r = 1.0 / std::sqrt(2.0);
  struct BellTerm {
    std::array<Complex, 4> vec;
    double xx, yy, zz;
  };
  const std::array<BellTerm, 4> bell{{
      {{r, 0.0, 0.0, r}, +1.0, -1.0, +1.0},
      {{r, 0.0, 0.0, -r}, -1.0, +1.0, +1.0},
      {{0.0, r, r, 0.0}, +1.0, +1.0, -1.0},
      {{0.0, r, -r, 0.0}, -1.0, -1.0, -1.0},
  }};
  ComplexMatrix u(4, 4);
  for (const auto& b : bell) {
    const double phase = alpha_x * b.xx + alpha_y * b.yy + alpha_z * b.zz;
    u += std::polar(1.0, -phase) * ComplexMatrix::projector(b.vec);
  }
  return u;
}

ComplexMatrix cartan_unitary(const MaskerParams& params) {
  return cartan_core(params.alpha_x, params.alpha_y, params.alpha_z) *
         kron(euler_zyz(params.euler_a), euler_zyz(params.euler_b));
}

MaskerParams canonicalize(const MaskerParams& params) {
  constexpr double quarter_turn = kPi / 2.0;
  MaskerParams out = params;
  ComplexMatrix va = euler_zyz(params.euler_a);
  ComplexMatrix vb = euler_zyz(params.euler_b);
  const std::array<double*, 3> alphas{&out.alpha_x, &out.alpha_y, &out.alpha_z};
  const std::array<const ComplexMatrix*, 3> paulis{&pauli_x(), &pauli_y(), &pauli_z()};
  for (std::size_t k = 0; k < 3; ++k) {
    const double turns = std::floor(*alphas[k] / quarter_turn);
    *alphas[k] -= turns * quarter_turn;
    // exp(-i n pi/2 s x s) = (-i)^n (s x s)^n; s x s commutes with the core.
    if (std::fmod(std::abs(turns), 2.0) == 1.0) {
      va = *paulis[k] * va;
      vb = *paulis[k] * vb;
    }
  }
  out.euler_a = euler_zyz_angles(va);
  out.euler_b = euler_zyz_angles(vb);
  out.canonical_form = true;
  return out;
}

ComplexMatrix phase_unitary(double y) {
  const Complex e = std::polar(1.0, y);
  const std::array<Complex, 4> d{1.0, e, 1.0, e};
  return ComplexMatrix::diagonal(std::span<const Complex>(d));
}

const ComplexMatrix& canonical_orthogonal_masker() {
  static const ComplexMatrix u = [] {
    const double r = 1.0 / std::sqrt(2.0);
    // Columns are the images of |00>, |01>, |10>, |11>.
    return ComplexMatrix{
        {0.0, 0.0, r, r},
        {r, r, 0.0, 0.0},
        {r, -r, 0.0, 0.0},
        {0.0, 0.0, -r, r},
    };
  }();
  return u;
}

bool verify_convex_masking(const ComplexMatrix& u, const QubitState& psi1, const QubitState& psi2,
                           const DensityMatrix& ancilla, std::span<const double> p_grid, double tolerance) {
  const DensityMatrix in1 = DensityMatrix::from_pure(psi1);
  const DensityMatrix in2 = DensityMatrix::from_pure(psi2);
  const DensityMatrix out1 = apply_masker(u, in1, ancilla);
  const DensityMatrix out2 = apply_masker(u, in2, ancilla);
  const double residual = masking_residual(out1, out2);
  if (residual > tolerance) {
    throw PreconditionError("verify_convex_masking: unitary does not mask the inputs (residual " +
                            std::to_string(residual) + ")");
  }
  const ComplexMatrix common1 = partial_trace(out1.matrix(), 1);
  const ComplexMatrix common2 = partial_trace(out1.matrix(), 2);
  for (double p : p_grid) {
    const DensityMatrix out = apply_masker(u, mix(in1, in2, p), ancilla);
    if (max_abs_diff(partial_trace(out.matrix(), 1), common1) > tolerance) return false;
    if (max_abs_diff(partial_trace(out.matrix(), 2), common2) > tolerance) return false;
  }
  return true;
}

}  // namespace qmask
