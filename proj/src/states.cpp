#include "bosent/states.hpp"

#include <cmath>
#include <limits>

namespace bosent {

namespace {

// Schmidt-diagonal two-mode state from per-level amplitudes amp[n] whose
// untruncated squared sum is 1. tail_weight is the exact discarded mass.
TwoModePureState diagonal_state(ModeCutoff n, const Eigen::VectorXd& amp,
                                double tail_weight) {
  ComplexMatrix c = ComplexMatrix::Zero(n.levels, n.levels);
  for (int k = 0; k < n.levels; ++k) {
    c(k, k) = amp(k);
  }
  const double nrm = c.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) {
    throw std::runtime_error("state construction produced a non-normalizable grid");
  }
  c /= nrm;
  return TwoModePureState{n, n, std::move(c), tail_weight};
}

}  // namespace

TwoModePureState tms_state(SqueezeParams p, ModeCutoff n) {
  if (!(p.lambda >= 0.0) || !std::isfinite(p.lambda)) {
    throw std::invalid_argument("tms_state: lambda must be finite and >= 0");
  }
  const double t = std::tanh(p.lambda);
  const double sech = 1.0 / std::cosh(p.lambda);
  Eigen::VectorXd amp(n.levels);
  double a = sech;
  for (int k = 0; k < n.levels; ++k) {
    amp(k) = a;
    a *= t;
  }
  // Geometric tail: sum_{k>=N} sech^2 t^(2k) = t^(2N).
  const double tail = std::pow(t, 2.0 * n.levels);
  return diagonal_state(n, amp, tail);
}

TwoModePureState thermal_vacuum_state(double beta_omega, ModeCutoff n) {
  if (!(beta_omega > 0.0) || !std::isfinite(beta_omega)) {
    throw std::invalid_argument("thermal_vacuum_state: beta*omega must be finite and > 0");
  }
  const double x = std::exp(-beta_omega);
  const double root = std::sqrt(x);
  Eigen::VectorXd amp(n.levels);
  double a = std::sqrt(1.0 - x);
  for (int k = 0; k < n.levels; ++k) {
    amp(k) = a;
    a *= root;
  }
  const double tail = std::pow(x, static_cast<double>(n.levels));
  return diagonal_state(n, amp, tail);
}

double beta_omega(const ThermalParams& t) {
  if (!(t.temperature > 0.0)) {
    throw std::invalid_argument("beta_omega: temperature must be > 0 K");
  }
  if (!(t.omega_energy > 0.0)) {
    throw std::invalid_argument("beta_omega: omega_energy must be > 0 J");
  }
  if (!(t.boltzmann > 0.0)) {
    throw std::invalid_argument("beta_omega: boltzmann must be > 0 J/K");
  }
  return t.omega_energy / (t.boltzmann * t.temperature);
}

double partition_function(double beta_omega) {
  if (!(beta_omega > 0.0)) {
    throw std::invalid_argument("partition_function: beta*omega must be > 0");
  }
  return 1.0 / (-std::expm1(-beta_omega));
}

NormalModeData normal_mode_params(const OscillatorPair& o) {
  if (!(o.mass > 0.0) || !(o.omega > 0.0)) {
    throw std::invalid_argument("normal_mode_params: mass and omega must be > 0");
  }
  const double w2 = o.omega * o.omega;
  const double shift = o.delta / o.mass;
  const double w1_sq = w2 - shift;  // symmetric coordinate (x1 + x2)/sqrt(2)
  const double w2_sq = w2 + shift;  // antisymmetric coordinate
  if (w1_sq <= 0.0) {
    throw InstabilityError("omega1", w1_sq);
  }
  if (w2_sq <= 0.0) {
    throw InstabilityError("omega2", w2_sq);
  }
  NormalModeData d;
  d.omega1 = std::sqrt(w1_sq);
  d.omega2 = std::sqrt(w2_sq);
  d.r1 = std::atanh((o.omega - d.omega1) / (o.omega + d.omega1));
  d.r2 = std::atanh((o.omega - d.omega2) / (o.omega + d.omega2));
  d.nu = (d.omega1 + d.omega2) / (2.0 * std::sqrt(d.omega1 * d.omega2));
  return d;
}

GroundStateResult cho_ground_state_numeric(const OscillatorPair& o,
                                           ModeCutoff n) {
  normal_mode_params(o);  // validates stability before any allocation
  if (n.levels > 64) {
    throw std::invalid_argument(
        "cho_ground_state_numeric: cutoff above 64 per mode (dense "
        "eigenproblem too large)");
  }

  const QuadraturePair q = quadrature_matrices(n);
  const ComplexMatrix eye = ComplexMatrix::Identity(n.levels, n.levels);
  const ComplexMatrix x1 = tensor_product(q.x, eye);
  const ComplexMatrix x2 = tensor_product(eye, q.x);
  const ComplexMatrix p1 = tensor_product(q.p, eye);
  const ComplexMatrix p2 = tensor_product(eye, q.p);

  const double m = o.mass;
  const double w2 = o.omega * o.omega;
  ComplexMatrix h = (p1 * p1 + p2 * p2) / (2.0 * m) +
                    (0.5 * m * w2) * (x1 * x1 + x2 * x2) -
                    o.delta * (x1 * x2);

  const Eigensystem es = hermitian_eigensystem(h);
  Eigen::VectorXcd ground = es.eigenvectors.col(0);

  // Fix the global phase: largest-magnitude coefficient real and positive.
  Eigen::Index imax;
  ground.cwiseAbs().maxCoeff(&imax);
  ground *= std::conj(ground(imax)) / std::abs(ground(imax));

  ComplexMatrix c(n.levels, n.levels);
  for (int j = 0; j < n.levels; ++j) {
    for (int k = 0; k < n.levels; ++k) {
      c(j, k) = ground(j * n.levels + k);
    }
  }

  // Boundary-layer occupancy as the cutoff-quality diagnostic.
  const int top = n.levels - 1;
  double boundary = c.row(top).squaredNorm() + c.col(top).squaredNorm() -
                    std::norm(c(top, top));

  GroundStateResult result{
      TwoModePureState{n, n, std::move(c), boundary},
      es.eigenvalues(0)};
  return result;
}

namespace paper {

namespace {

// Amplitudes of exp{(t/2) a^+2}|0> on |0>, |2>, |4>, ...:
// c_0 = 1, c_{2k+2}/c_{2k} = (t/2) sqrt((2k+2)(2k+1)) / (k+1).
Eigen::VectorXd squeezed_vacuum_series(double r, int levels) {
  const double t = std::tanh(r);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(levels);
  v(0) = 1.0;
  for (int k = 0; 2 * k + 2 < levels; ++k) {
    v(2 * k + 2) = v(2 * k) * (t / 2.0) *
                   std::sqrt(static_cast<double>((2 * k + 2) * (2 * k + 1))) /
                   (k + 1);
  }
  return v;
}

}  // namespace

ChoState cho_state(double r1, double r2, ModeCutoff n) {
  if (!std::isfinite(r1) || !std::isfinite(r2)) {
    throw std::invalid_argument("cho_state: squeeze parameters must be finite");
  }
  const Eigen::VectorXd v1 = squeezed_vacuum_series(r1, n.levels);
  const Eigen::VectorXd v2 = squeezed_vacuum_series(r2, n.levels);
  const double prefactor = (1.0 / std::cosh(r1)) * (1.0 / std::cosh(r2));

  const Eigen::Index dim = static_cast<Eigen::Index>(n.levels) * n.levels;
  Eigen::VectorXd w(dim);
  for (int j = 0; j < n.levels; ++j) {
    for (int k = 0; k < n.levels; ++k) {
      w(j * n.levels + k) = v1(j) * v2(k);
    }
  }

  ChoState out;
  out.rho_raw = (prefactor * (w * w.transpose())).cast<Complex>();
  out.trace = prefactor * w.squaredNorm();
  out.trace_deficit = std::abs(out.trace - 1.0) > 1e-10;
  return out;
}

Eigen::Matrix3d cho_two_level_matrix(double r1) {
  if (!std::isfinite(r1)) {
    throw std::invalid_argument("cho_two_level_matrix: r1 must be finite");
  }
  const double sech = 1.0 / std::cosh(r1);
  const double t = std::tanh(r1);
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 0) = 1.0;
  m(0, 2) = t / std::sqrt(2.0);
  m(2, 0) = m(0, 2);
  m(2, 2) = 0.5 * t * t;
  return sech * m;
}

double cho_two_level_trace(double r1) {
  const double t = std::tanh(r1);
  return (1.0 / std::cosh(r1)) * (1.0 + 0.5 * t * t);
}

}  // namespace paper

}  // namespace bosent
