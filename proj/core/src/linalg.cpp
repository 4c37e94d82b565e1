#include "qmask/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmask/errors.hpp"

namespace qmask {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_two_qubit(const ComplexMatrix& rho, int party, const char* what) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw DimensionError(std::string(what) + ": expected a 4x4 operator");
  }
  if (party != 1 && party != 2) {
    throw DomainError(std::string(what) + ": party must be 1 or 2");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: extents must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: extents must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  if (!all_finite()) throw DomainError("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw DimensionError("ComplexMatrix: extents must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw DomainError("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  ComplexMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) { return outer(v, v); }

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<Complex> apply(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DimensionError("apply: vector length does not match matrix columns");
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::conj(a(i, j));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Complex inner(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) throw DimensionError("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermiticity_defect: matrix is not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

double unitarity_defect(const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("unitarity_defect: matrix is not square");
  return frobenius_norm(matmul(dagger(u), u) - ComplexMatrix::identity(u.rows()));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int party) {
  require_two_qubit(rho, party, "partial_trace");
  ComplexMatrix out(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t k = 0; k < 2; ++k) {
        // index = 2 * (party-1 index) + (party-2 index)
        out(a, b) += party == 1 ? rho(2 * k + a, 2 * k + b) : rho(2 * a + k, 2 * b + k);
      }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int party) {
  require_two_qubit(rho, party, "partial_transpose");
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          out(2 * i + j, 2 * k + l) = party == 2 ? rho(2 * i + l, 2 * k + j) : rho(2 * k + j, 2 * i + l);
        }
  return out;
}

Complex determinant(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  return det;
}

ComplexMatrix EigenSystem::reconstruct() const {
  return reconstruct([](double x) { return x; });
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol) {
  if (!h.is_square()) throw DimensionError("hermitian_eigensystem: matrix is not square");
  if (!h.all_finite()) throw DomainError("hermitian_eigensystem: non-finite entry");
  const double defect = hermiticity_defect(h);
  if (defect > tol) {
    throw NotHermitianError("hermitian_eigensystem: |h - h^dagger| = " + std::to_string(defect) +
                            " exceeds tolerance");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, frobenius_norm(a));

  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal() <= kJacobiOffDiagonalThreshold * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double g = std::abs(b);
        if (g == 0.0) continue;
        // Phase-rotate the (p, q) block to a real symmetric one, then apply
        // the classical stable Jacobi rotation.
        const Complex phase = std::conj(b / g);
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex jpp = c, jpq = s, jqp = -s * phase, jqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }
  if (!converged && off_diagonal() > kJacobiOffDiagonalThreshold * scale) {
    throw ConvergenceError("hermitian_eigensystem: no convergence after " + std::to_string(kJacobiMaxSweeps) +
                           " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem es{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.eigenvectors(i, k) = v(i, order[k]);
  }
  return es;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double tol) {
  const EigenSystem es = hermitian_eigensystem(rho);
  if (es.eigenvalues.front() < -tol) {
    throw InvalidStateError("psd_sqrt: eigenvalue " + std::to_string(es.eigenvalues.front()) +
                            " below clamp window");
  }
  return es.reconstruct([](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

}  // namespace qmask
