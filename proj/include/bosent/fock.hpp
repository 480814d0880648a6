#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bosent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Basis truncation for a single bosonic mode: levels |0>..|levels-1>.
struct ModeCutoff {
  int levels;

  explicit ModeCutoff(int n) : levels(n) {
    if (n < 2) {
      throw std::invalid_argument("ModeCutoff: need at least 2 levels, got " +
                                  std::to_string(n));
    }
  }
};

/// Dimensionless quadrature matrices x = (a + a^+)/sqrt(2),
/// p = (a - a^+)/(i sqrt(2)) in a truncated Fock basis (hbar = 1).
struct QuadraturePair {
  ComplexMatrix x;
  ComplexMatrix p;
};

/// Result of diagonalizing a Hermitian matrix: eigenvalues ascending,
/// eigenvectors as orthonormal columns in matching order.
struct Eigensystem {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Thrown when a matrix handed to hermitian_eigensystem deviates from
/// Hermiticity beyond tolerance. Carries the measured max asymmetry.
class NonHermitianError : public std::runtime_error {
 public:
  explicit NonHermitianError(double max_asymmetry)
      : std::runtime_error("matrix is not Hermitian: max |H - H^+| entry = " +
                           std::to_string(max_asymmetry)),
        max_asymmetry_(max_asymmetry) {}

  double max_asymmetry() const { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

/// Annihilation operator a in the truncated basis: a|n> = sqrt(n)|n-1>,
/// i.e. entry (n-1, n) = sqrt(n). The top level |N-1> is annihilated
/// downward only; a^+ = adjoint of this matrix.
ComplexMatrix annihilation_matrix(ModeCutoff n);

/// Creation operator a^+, the conjugate transpose of annihilation_matrix.
ComplexMatrix creation_matrix(ModeCutoff n);

/// x and p quadratures built from the truncated ladder operators. Both are
/// Hermitian; the commutator [x, p] equals i(I - N |N-1><N-1|), the exact
/// truncation-corrected form of the canonical commutator.
QuadraturePair quadrature_matrices(ModeCutoff n);

/// Kronecker product with the mode-1-major composite index convention used
/// throughout: composite index i = j*N2 + n for mode-1 index j and mode-2
/// index n, so (A (x) B)[(j,n),(k,m)] = A(j,k) * B(n,m).
/// Partial traces rely on this convention bit-exactly.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Full eigensystem of a Hermitian matrix. The input is symmetrized as
/// (H + H^+)/2 before solving; asymmetry beyond 1e-10 (relative to the
/// largest entry for matrices with norm above 1) throws NonHermitianError.
/// Matrices that are real to within the same tolerance are routed through
/// the real symmetric solver.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

}  // namespace bosent
