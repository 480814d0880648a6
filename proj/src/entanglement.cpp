#include "bosent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bosent {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEntropyFloor = 1e-12;   // p at or below this contributes 0
constexpr double kNegativityTol = 1e-10;  // below -this is an error
constexpr double kValueClamp = 1e-12;

double finalize(double nats, LogBase base) {
  if (nats < 0.0) {
    if (nats < -kValueClamp) {
      throw std::runtime_error("entropy negative beyond tolerance: " +
                               std::to_string(nats));
    }
    nats = 0.0;
  }
  return base == LogBase::two ? nats / std::numbers::ln2 : nats;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.imag().cwiseAbs().maxCoeff() <= kHermitianTol * scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m.real(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m,
                             std::optional<ModeStructure> modes)
    : modes_(modes) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol * scale) {
    throw std::invalid_argument(
        "DensityMatrix: not Hermitian within tolerance, max asymmetry = " +
        std::to_string(asym));
  }
  m_ = 0.5 * (m + m.adjoint());
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) +
                                " deviates from 1 beyond 1e-10");
  }
  if (modes_ && static_cast<Eigen::Index>(modes_->n1) * modes_->n2 != dim()) {
    throw std::invalid_argument(
        "DensityMatrix: mode structure does not match dimension");
  }
  if (!m_.allFinite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  }
}

DensityMatrix density_from_pure(const TwoModePureState& s) {
  const double nrm = s.norm();
  if (std::abs(nrm - 1.0) > 1e-8) {
    throw std::invalid_argument("density_from_pure: state norm " +
                                std::to_string(nrm) + " deviates from 1");
  }
  const Eigen::Index n1 = s.coeffs.rows();
  const Eigen::Index n2 = s.coeffs.cols();
  const Eigen::Index dim = n1 * n2;
  if (dim > 4096) {
    throw std::invalid_argument(
        "density_from_pure: composite dimension above 4096; use "
        "reduced_density at large cutoffs");
  }
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index j = 0; j < n1; ++j) {
    psi.segment(j * n2, n2) = s.coeffs.row(j).transpose();
  }
  psi /= psi.norm();
  ComplexMatrix rho = psi * psi.adjoint();
  return DensityMatrix(std::move(rho),
                       ModeStructure{static_cast<int>(n1), static_cast<int>(n2)});
}

DensityMatrix partial_trace(const DensityMatrix& rho, Mode keep) {
  if (!rho.mode_structure()) {
    throw std::invalid_argument(
        "partial_trace: density matrix carries no two-mode structure");
  }
  const auto [n1, n2] = *rho.mode_structure();
  const ComplexMatrix& m = rho.matrix();
  if (keep == Mode::mode1) {
    ComplexMatrix out = ComplexMatrix::Zero(n1, n1);
    for (int j = 0; j < n1; ++j) {
      for (int k = 0; k < n1; ++k) {
        Complex acc = 0.0;
        for (int n = 0; n < n2; ++n) {
          acc += m(static_cast<Eigen::Index>(j) * n2 + n,
                   static_cast<Eigen::Index>(k) * n2 + n);
        }
        out(j, k) = acc;
      }
    }
    return DensityMatrix(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(n2, n2);
  for (int n = 0; n < n2; ++n) {
    for (int mcol = 0; mcol < n2; ++mcol) {
      Complex acc = 0.0;
      for (int j = 0; j < n1; ++j) {
        acc += m(static_cast<Eigen::Index>(j) * n2 + n,
                 static_cast<Eigen::Index>(j) * n2 + mcol);
      }
      out(n, mcol) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix reduced_density(const TwoModePureState& s, Mode keep) {
  const double nrm = s.norm();
  if (std::abs(nrm - 1.0) > 1e-8) {
    throw std::invalid_argument("reduced_density: state norm deviates from 1");
  }
  const ComplexMatrix c = s.coeffs / nrm;
  if (keep == Mode::mode1) {
    // rho1(j,k) = sum_n c(j,n) conj(c(k,n))
    return DensityMatrix(c * c.adjoint());
  }
  // rho2(n,m) = sum_j c(j,n) conj(c(j,m)) = conj(C^+ C)
  return DensityMatrix((c.adjoint() * c).conjugate());
}

EntropyValue von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  const Eigen::VectorXd p = hermitian_eigenvalues(rho.matrix());
  double nats = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < -kNegativityTol) {
      throw NegativeEigenvalueError(p(i));
    }
    if (p(i) <= kEntropyFloor) {
      continue;  // truncation noise, contributes exactly 0
    }
    nats -= p(i) * std::log(p(i));
  }
  return EntropyValue{finalize(nats, base), base};
}

EntropyValue entropy_tms_closed(double lambda, LogBase base) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("entropy_tms_closed: lambda must be >= 0");
  }
  double nats = 0.0;
  if (lambda > 0.0) {
    const double c2 = std::cosh(lambda) * std::cosh(lambda);
    const double s2 = std::sinh(lambda) * std::sinh(lambda);
    nats = c2 * std::log(c2) - s2 * std::log(s2);
  }
  return EntropyValue{finalize(nats, base), base};
}

EntropyValue entropy_tv_closed(double beta_omega, LogBase base) {
  if (!(beta_omega > 0.0)) {
    throw std::invalid_argument("entropy_tv_closed: beta*omega must be > 0");
  }
  const double x = std::exp(-beta_omega);
  // -log(1-x) + beta*omega * x/(1-x); log1p keeps the T -> 0 tail accurate.
  const double one_minus_x = -std::expm1(-beta_omega);
  const double nats = -std::log1p(-x) + beta_omega * x / one_minus_x;
  return EntropyValue{finalize(nats, base), base};
}

EntropyValue entropy_gaussian_closed(double nu, LogBase base) {
  if (!std::isfinite(nu) || nu < 1.0 - 1e-10) {
    throw std::invalid_argument(
        "entropy_gaussian_closed: symplectic eigenvalue must be >= 1");
  }
  nu = std::max(nu, 1.0);
  const double a = 0.5 * (nu + 1.0);
  const double b = 0.5 * (nu - 1.0);
  double nats = a * std::log(a);
  if (b > 0.0) {
    nats -= b * std::log(b);
  }
  return EntropyValue{finalize(nats, base), base};
}

std::vector<double> schmidt_weights(const TwoModePureState& s) {
  const double nrm = s.norm();
  if (std::abs(nrm - 1.0) > 1e-8) {
    throw std::invalid_argument("schmidt_weights: state norm deviates from 1");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(s.coeffs / nrm);
  const Eigen::VectorXd sv = svd.singularValues();
  std::vector<double> weights(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    weights[i] = sv(i) * sv(i);
  }
  return weights;  // Eigen returns singular values descending
}

namespace paper {

EntropyValue entropy_cho(double r1, LogBase base) {
  const double q = cho_two_level_trace(r1);
  double nats = 0.0;
  if (q > 0.0) {
    nats = -q * std::log(q);
  }
  return EntropyValue{finalize(nats, base), base};
}

}  // namespace paper

}  // namespace bosent
