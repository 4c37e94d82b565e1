#include "qmask/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "qmask/errors.hpp"

namespace qmask {

namespace {

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4) throw DimensionError(std::string(what) + ": expected a two-qubit state");
}

double entropy_of_spectrum(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double x : spectrum)
    if (x > 0.0) s -= x * std::log2(x);
  return std::max(s, 0.0);
}

double entropy_of_matrix(const ComplexMatrix& m) {
  return entropy_of_spectrum(hermitian_eigensystem(m, DensityMatrix::kHermitianTol).eigenvalues);
}

const ComplexMatrix& spin_flip() {
  static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  return yy;
}

}  // namespace

double binary_entropy(double x) {
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of_matrix(rho.matrix()); }

double entropic_gap(const DensityMatrix& rho) {
  require_two_qubit(rho, "entropic_gap");
  return von_neumann_entropy(rho) - entropy_of_matrix(partial_trace(rho.matrix(), 1));
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  const EigenSystem es = hermitian_eigensystem(rho.matrix(), DensityMatrix::kHermitianTol);

  // W = V_r D_r^{1/2}: columns span the support of rho. W^dagger rho~ W is the
  // restriction of sqrt(rho) rho~ sqrt(rho) to that support.
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < 4; ++k)
    if (es.eigenvalues[k] > kSupportCutoff) support.push_back(k);
  if (support.empty()) return 0.0;

  const std::size_t r = support.size();
  ComplexMatrix w(4, r);
  for (std::size_t c = 0; c < r; ++c) {
    const double scale = std::sqrt(es.eigenvalues[support[c]]);
    for (std::size_t i = 0; i < 4; ++i) w(i, c) = scale * es.eigenvectors(i, support[c]);
  }
  // tau = W^T (Y x Y) W is complex symmetric and tau^dagger tau is the
  // restriction above, so the lambdas are its singular values. Reading them off
  // the Hermitian dilation [[0, tau], [tau^dagger, 0]] (eigenvalues +-sigma)
  // avoids taking square roots of round-off when rho is separable.
  const ComplexMatrix tau = transpose(w) * spin_flip() * w;
  ComplexMatrix dilation(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      dilation(i, r + j) = tau(i, j);
      dilation(r + j, i) = std::conj(tau(i, j));
    }

  std::vector<double> lambda;
  for (double mu : hermitian_eigensystem(dilation, 1e-9).eigenvalues) lambda.push_back(mu);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  lambda.resize(r);
  double c = lambda.front();
  for (std::size_t i = 1; i < lambda.size(); ++i) c -= lambda[i];
  return std::clamp(c, 0.0, 1.0);
}

double mixture_concurrence(const PureState2Q& psi1, const PureState2Q& psi2, double p) {
  require_in_range(p, 0.0, 1.0, "p");
  p = std::clamp(p, 0.0, 1.0);
  const std::array<double, 2> w{std::sqrt(p), std::sqrt(1.0 - p)};
  const std::array<std::span<const Complex>, 2> v{psi1.amplitudes(), psi2.amplitudes()};
  // Y x Y maps (a00, a01, a10, a11) to (-a11, a01, a10, -a00).
  auto flip_form = [](std::span<const Complex> a, std::span<const Complex> b) {
    return -a[0] * b[3] + a[1] * b[2] + a[2] * b[1] - a[3] * b[0];
  };
  Complex tau[2][2];
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) tau[i][j] = w[i] * w[j] * flip_form(v[i], v[j]);
  const double frob2 = std::norm(tau[0][0]) + std::norm(tau[0][1]) + std::norm(tau[1][0]) + std::norm(tau[1][1]);
  const double det = std::abs(tau[0][0] * tau[1][1] - tau[0][1] * tau[1][0]);
  // (s1 - s2)^2 = s1^2 + s2^2 - 2 s1 s2
  return std::clamp(std::sqrt(std::max(0.0, frob2 - 2.0 * det)), 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  if (c == 0.0) return 0.0;
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double entanglement_of_formation(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

double negativity(const DensityMatrix& rho) {
  require_two_qubit(rho, "negativity");
  const ComplexMatrix pt = partial_transpose(rho.matrix(), 2);
  double n = 0.0;
  for (double mu : hermitian_eigensystem(pt, DensityMatrix::kHermitianTol).eigenvalues)
    if (mu < 0.0) n -= mu;
  return n;
}

bool is_ppt(const DensityMatrix& rho, double tol) { return negativity(rho) <= tol; }

double partial_transpose_determinant(const DensityMatrix& rho) {
  require_two_qubit(rho, "partial_transpose_determinant");
  // Hermitian argument: the determinant is real.
  return determinant(partial_transpose(rho.matrix(), 2)).real();
}

double pure_entanglement_entropy(const PureState2Q& psi) {
  return entropy_of_matrix(partial_trace(psi.projector(), 1));
}

EntanglementReport analyze(const DensityMatrix& rho, double ppt_tol) {
  require_two_qubit(rho, "analyze");
  EntanglementReport r;
  r.entropy_global = von_neumann_entropy(rho);
  r.entropy_local_1 = entropy_of_matrix(partial_trace(rho.matrix(), 1));
  r.entropy_local_2 = entropy_of_matrix(partial_trace(rho.matrix(), 2));
  r.delta_s = r.entropy_global - r.entropy_local_1;
  r.concurrence = concurrence(rho);
  r.eof = eof_from_concurrence(r.concurrence);
  r.negativity = negativity(rho);
  r.ppt = r.negativity <= ppt_tol;
  return r;
}

}  // namespace qmask
