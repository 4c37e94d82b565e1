#pragma once

// Dense complex linear algebra for 2x2 and 4x4 operators.
//
// Two-qubit operators use the basis (|00>, |01>, |10>, |11>) with party 1 in
// the left slot, so kron(a, b) acts as a on party 1 and b on party 2.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmask {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix. Throws DimensionError when either extent is zero.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Row-major entries; throws on length mismatch or non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-major literal, e.g. ComplexMatrix{{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  Complex trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);

/// Matrix product. Throws DimensionError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix& a, std::span<const Complex> v);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

/// <v|w>
Complex inner(std::span<const Complex> v, std::span<const Complex> w);
double norm(std::span<const Complex> v);

double frobenius_norm(const ComplexMatrix& a);
/// Largest |entry| of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest |entry| of a - a^dagger.
double hermiticity_defect(const ComplexMatrix& a);
/// Frobenius norm of u^dagger u - I.
double unitarity_defect(const ComplexMatrix& u);

/// Partial trace of a 4x4 two-qubit operator. `party` (1 or 2) is the party
/// traced out; the result is the reduced operator of the other party.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int party);

/// Transpose on the indices of `party` (1 or 2) only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int party);

/// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

struct EigenSystem {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column k is the unit eigenvector for eigenvalues[k].
  ComplexMatrix eigenvectors;

  /// V diag(f(lambda)) V^dagger
  template <class F>
  ComplexMatrix reconstruct(F&& f) const;
  ComplexMatrix reconstruct() const;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kEigenClampWindow = 1e-9;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-12;

/// Cyclic complex Jacobi diagonalisation. Throws NotHermitianError when the
/// largest |h - h^dagger| entry exceeds `tol`, ConvergenceError after
/// kJacobiMaxSweeps sweeps. Only the upper triangle's Hermitian part is used.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol = kHermitianTolerance);

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero;
/// anything below -tol throws InvalidStateError.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double tol = kEigenClampWindow);

/// Pauli matrices and the 2x2 identity.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

template <class F>
ComplexMatrix EigenSystem::reconstruct(F&& f) const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = f(eigenvalues[k]);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = w * eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eigenvectors(j, k));
    }
  }
  return out;
}

}  // namespace qmask
