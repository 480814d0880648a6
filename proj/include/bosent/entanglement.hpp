#pragma once

#include <optional>
#include <vector>

#include "bosent/states.hpp"

namespace bosent {

enum class LogBase { natural, two };

/// Entropy with the logarithm base it was computed in. Values are clamped
/// to 0 when they land in [-1e-12, 0) from rounding.
struct EntropyValue {
  double value;
  LogBase base;
};

enum class Mode { mode1, mode2 };

/// Cutoffs (N1, N2) of the two-mode space a density matrix lives on.
struct ModeStructure {
  int n1;
  int n2;
};

/// Thrown by von_neumann_entropy when a spectrum has an eigenvalue below
/// -1e-10: that is construction error, not truncation noise.
class NegativeEigenvalueError : public std::runtime_error {
 public:
  explicit NegativeEigenvalueError(double eigenvalue)
      : std::runtime_error("density matrix eigenvalue " +
                           std::to_string(eigenvalue) +
                           " below -1e-10; upstream state construction bug"),
        eigenvalue_(eigenvalue) {}

  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Hermitian, unit-trace matrix. Construction symmetrizes the input as
/// (m + m^+)/2; asymmetry or trace deviation beyond 1e-10 is rejected.
/// Positivity is not checked here; it surfaces in von_neumann_entropy.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m,
                         std::optional<ModeStructure> modes = std::nullopt);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  const std::optional<ModeStructure>& mode_structure() const { return modes_; }

 private:
  ComplexMatrix m_;
  std::optional<ModeStructure> modes_;
};

/// |psi><psi| on the composite (mode-1-major) index space. Rejects states
/// whose norm deviates from 1 by more than 1e-8, and composite dimensions
/// above 4096 (use reduced_density for large cutoffs instead).
DensityMatrix density_from_pure(const TwoModePureState& s);

/// Partial trace of a two-mode density matrix by direct Fock-basis
/// summation over the discarded mode:
///   keep mode1: rho1(j,k) = sum_n rho(j*N2 + n, k*N2 + n)
///   keep mode2: rho2(n,m) = sum_j rho(j*N2 + n, j*N2 + m)
/// Requires mode_structure; preserves the trace to rounding.
DensityMatrix partial_trace(const DensityMatrix& rho, Mode keep);

/// Reduced density matrix of a pure two-mode state, contracted directly
/// from the coefficient grid (rho1 = C C^+). Identical to
/// partial_trace(density_from_pure(s), keep) but never materializes the
/// composite-space matrix, so it works at large cutoffs.
DensityMatrix reduced_density(const TwoModePureState& s, Mode keep);

/// Spectral von Neumann entropy -sum p log p. Eigenvalues at or below
/// 1e-12 contribute exactly 0; eigenvalues in [-1e-10, 0) are treated as
/// truncation noise and clamped; anything lower throws
/// NegativeEigenvalueError.
EntropyValue von_neumann_entropy(const DensityMatrix& rho,
                                 LogBase base = LogBase::natural);

/// Closed-form entanglement entropy of the two-mode squeezed vacuum:
/// cosh^2(l) log cosh^2(l) - sinh^2(l) log sinh^2(l), with the l = 0 limit 0.
EntropyValue entropy_tms_closed(double lambda, LogBase base = LogBase::natural);

/// Closed-form system/environment entanglement of the free-boson thermal
/// vacuum: -log(1-x) - x/(1-x) log x with x = exp(-beta_omega).
EntropyValue entropy_tv_closed(double beta_omega,
                               LogBase base = LogBase::natural);

/// Entropy of a single-mode Gaussian state with symplectic eigenvalue nu:
/// ((nu+1)/2) log((nu+1)/2) - ((nu-1)/2) log((nu-1)/2). Standard
/// Gaussian-state result, used as the independent closed-form oracle for
/// the coupled-oscillator ground state. Rejects nu < 1 - 1e-10.
EntropyValue entropy_gaussian_closed(double nu, LogBase base = LogBase::natural);

/// Squared singular values of the coefficient grid, descending. They sum
/// to 1 and are the eigenvalues of either reduced density matrix.
std::vector<double> schmidt_weights(const TwoModePureState& s);

namespace paper {

/// The published closed-form -q log q with q = sech(r1)(1 + tanh(r1)^2/2),
/// reproduced exactly as printed. q is the trace of the (unnormalized,
/// rank-1) two-level matrix, so this is not the spectral entropy of that
/// matrix -- normalized, the two-level matrix is pure and its entropy is 0.
EntropyValue entropy_cho(double r1, LogBase base = LogBase::natural);

}  // namespace paper

}  // namespace bosent
