#pragma once

#include <string>

#include "bosent/fock.hpp"

namespace bosent {

/// Two-mode squeezing strength; dimensionless, >= 0.
struct SqueezeParams {
  double lambda = 0.0;
};

/// Thermal parameters in laboratory units. omega_energy is the oscillator
/// quantum hbar*omega expressed as an energy in Joules; the Boltzmann
/// constant defaults to the CODATA value used for the reference curves.
struct ThermalParams {
  double omega_energy = 1e-20;           // J
  double temperature = 300.0;            // K
  double boltzmann = 1.3806568e-23;      // J/K
};

/// Two identical harmonic oscillators with bilinear position coupling,
/// H = (p1^2 + p2^2)/2m + m w^2 (x1^2 + x2^2)/2 - delta x1 x2  (hbar = 1).
struct OscillatorPair {
  double mass = 1.0;
  double omega = 1.0;
  double delta = 0.0;
};

/// Normal-mode data for an OscillatorPair:
///   omega1 = sqrt(w^2 - delta/m)  (symmetric mode, softened for delta > 0)
///   omega2 = sqrt(w^2 + delta/m)  (antisymmetric mode)
///   r1, r2 = single-mode squeeze parameters, tanh r_i = (w - w_i)/(w + w_i)
///   nu     = (w1 + w2) / (2 sqrt(w1 w2)), symplectic eigenvalue of either
///            reduced ground state; nu >= 1 with equality iff w1 == w2.
struct NormalModeData {
  double omega1;
  double omega2;
  double r1;
  double r2;
  double nu;
};

/// Thrown when a coupling makes a normal mode unstable (omega_i^2 <= 0).
class InstabilityError : public std::domain_error {
 public:
  InstabilityError(const std::string& mode_name, double omega_squared)
      : std::domain_error("unstable normal mode: " + mode_name +
                          "^2 = " + std::to_string(omega_squared) +
                          " <= 0 (imaginary frequency)"),
        omega_squared_(omega_squared) {}

  double omega_squared() const { return omega_squared_; }

 private:
  double omega_squared_;
};

/// A pure state of two truncated modes. coeffs(j, n) is the amplitude on
/// |j>_1 |n>_2; the grid has unit Frobenius norm after construction.
/// truncation_weight is the probability mass of the untruncated state that
/// fell outside the cutoff, recorded before renormalization so callers can
/// judge how trustworthy downstream quantities are.
struct TwoModePureState {
  ModeCutoff n1;
  ModeCutoff n2;
  ComplexMatrix coeffs;
  double truncation_weight = 0.0;

  double norm() const { return coeffs.norm(); }

  /// True when more than 1% of the state's weight was cut off; results are
  /// still returned but should be treated as a warning.
  bool heavy_truncation() const { return truncation_weight > 0.01; }
};

/// Result of the coupled-oscillator diagonalization oracle.
struct GroundStateResult {
  TwoModePureState state;
  double energy;  // lowest eigenvalue of the truncated Hamiltonian
};

/// Two-mode squeezed vacuum at squeezing lambda, truncated to N levels per
/// mode. Raw Schmidt coefficients are c[n][n] = sech(lambda) tanh(lambda)^n;
/// the discarded tail mass tanh(lambda)^(2N) is recorded as
/// truncation_weight and the kept grid is renormalized.
TwoModePureState tms_state(SqueezeParams p, ModeCutoff n);

/// Thermal vacuum of a free boson H = w a^+ a as a pure state of the system
/// mode (index 1) and its fictitious partner mode (index 2):
/// c[n][n] = sqrt(1-x) x^(n/2) with x = exp(-beta_omega).
TwoModePureState thermal_vacuum_state(double beta_omega, ModeCutoff n);

/// Dimensionless beta*omega = omega_energy / (k_B T). Rejects non-positive
/// temperature, energy, or Boltzmann constant.
double beta_omega(const ThermalParams& t);

/// Canonical partition function of the free boson with ground energy 0:
/// Z = 1 / (1 - exp(-beta_omega)).
double partition_function(double beta_omega);

/// Normal-mode frequencies, squeeze parameters, and the reduced-state
/// symplectic eigenvalue for a coupled oscillator pair. Throws
/// InstabilityError when |delta| >= m w^2.
NormalModeData normal_mode_params(const OscillatorPair& o);

/// Ground state of the coupled pair by direct diagonalization of the
/// truncated Hamiltonian built from quadrature_matrices and tensor_product.
/// This is the independent numerical oracle for the closed-form results.
/// The eigenvector's global phase is fixed so its largest coefficient is
/// real and positive; truncation_weight reports the probability mass on the
/// top basis layer of either mode (a cutoff-quality diagnostic, since an
/// eigenvector discards nothing). Cutoffs above 64 per mode are rejected.
GroundStateResult cho_ground_state_numeric(const OscillatorPair& o,
                                           ModeCutoff n);

namespace paper {

/// Verbatim reproduction of the paper-derived coupled-oscillator density
/// matrix: sech(r1) sech(r2) exp{(a1^+2 tanh r1 + a2^+2 tanh r2)/2} |00><00|
/// exp{(a1^2 tanh r1 + a2^2 tanh r2)/2}, evaluated by truncated series.
/// The matrix is returned unnormalized together with its trace (1 in exact
/// arithmetic, slightly below under truncation). Note the exponent has no
/// cross-mode term, so the state is a product of two single-mode squeezed
/// vacua and carries no inter-mode entanglement; see the discrepancy report.
struct ChoState {
  ComplexMatrix rho_raw;
  double trace;
  bool trace_deficit;  // |trace - 1| beyond 1e-10
};

ChoState cho_state(double r1, double r2, ModeCutoff n);

/// The printed 3x3 two-level reduction of the reproduced density matrix,
/// exactly as published (rank 1, not renormalized):
/// sech r1 * [[1, 0, t/sqrt(2)], [0,0,0], [t/sqrt(2), 0, t^2/2]], t = tanh r1.
Eigen::Matrix3d cho_two_level_matrix(double r1);

/// Trace of cho_two_level_matrix: sech(r1) (1 + tanh(r1)^2 / 2).
double cho_two_level_trace(double r1);

}  // namespace paper

}  // namespace bosent
