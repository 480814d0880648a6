#include "bosent/fock.hpp"

#include <cmath>

namespace bosent {

namespace {

constexpr double kHermitianTol = 1e-10;

double max_abs_entry(const ComplexMatrix& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

ComplexMatrix annihilation_matrix(ModeCutoff n) {
  const int dim = n.levels;
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
  }
  return a;
}

ComplexMatrix creation_matrix(ModeCutoff n) {
  return annihilation_matrix(n).adjoint();
}

QuadraturePair quadrature_matrices(ModeCutoff n) {
  const ComplexMatrix a = annihilation_matrix(n);
  const ComplexMatrix ad = a.adjoint();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  QuadraturePair q;
  q.x = (a + ad) * inv_sqrt2;
  q.p = (a - ad) * (Complex(0.0, -1.0) * inv_sqrt2);
  return q;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("tensor_product: inputs must be square");
  }
  const Eigen::Index n1 = a.rows();
  const Eigen::Index n2 = b.rows();
  ComplexMatrix out(n1 * n2, n1 * n2);
  for (Eigen::Index j = 0; j < n1; ++j) {
    for (Eigen::Index k = 0; k < n1; ++k) {
      out.block(j * n2, k * n2, n2, n2) = a(j, k) * b;
    }
  }
  return out;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
  }
  const double scale = std::max(1.0, max_abs_entry(h));
  const double asym = max_abs_entry(h - h.adjoint());
  if (asym > kHermitianTol * scale) {
    throw NonHermitianError(asym);
  }

  // Symmetrize so downstream behaviour does not depend on which triangle
  // the caller filled in.
  ComplexMatrix sym = 0.5 * (h + h.adjoint());

  Eigensystem result;
  const double max_imag = sym.imag().cwiseAbs().maxCoeff();
  if (max_imag <= kHermitianTol * scale) {
    // Real symmetric fast path; the coupled-oscillator Hamiltonians land
    // here, which roughly halves the solve time at large cutoffs.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym.real());
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("hermitian_eigensystem: real solver failed");
    }
    result.eigenvalues = solver.eigenvalues();
    result.eigenvectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("hermitian_eigensystem: complex solver failed");
    }
    result.eigenvalues = solver.eigenvalues();
    result.eigenvectors = solver.eigenvectors();
  }
  return result;
}

}  // namespace bosent
