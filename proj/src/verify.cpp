#include "bosent/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "bosent/sweeps.hpp"

namespace bosent::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

CheckResult bounded(const std::string& name, double measured, double tol,
                    std::string detail = {}, bool extra_ok = true) {
  return CheckResult{name, measured <= tol && extra_ok, measured,
                     "<= " + sci(tol), std::move(detail)};
}

double numeric_entropy(const TwoModePureState& s) {
  return von_neumann_entropy(reduced_density(s, Mode::mode1)).value;
}

// --- criterion 1: closed form vs spectral entropy of the reduced TMS ----

CheckResult check_tms_closed_vs_numeric(double tol_scale) {
  const auto t0 = Clock::now();
  const ModeCutoff n(128);
  double worst = 0.0;
  for (double lambda : {0.2, 0.5, 1.0, 1.5}) {
    const double closed = entropy_tms_closed(lambda).value;
    const double numeric = numeric_entropy(tms_state({lambda}, n));
    worst = std::max(worst, std::abs(closed - numeric));
  }
  const double secs = seconds_since(t0);
  return bounded("tms_closed_vs_numeric", worst, 1e-8 * tol_scale,
                 "lambda in {0.2,0.5,1,1.5}, cutoff 128, runtime " +
                     sci(secs) + " s (< 5 s)",
                 secs < 5.0);
}

// --- criterion 2: sum (n+1) tanh^2n = cosh^4 as a partial-sum identity ---

CheckResult check_series_identity(double tol_scale) {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 1.5}) {
    const double t2 = std::tanh(lambda) * std::tanh(lambda);
    double sum = 0.0;
    double pw = 1.0;
    for (int k = 0; k <= 512; ++k) {
      sum += (k + 1) * pw;
      pw *= t2;
    }
    const double target = std::pow(std::cosh(lambda), 4.0);
    worst = std::max(worst, std::abs(sum - target) / target);
  }
  return bounded("tms_series_identity", worst, 1e-8 * tol_scale,
                 "partial sums to n = 512, relative error");
}

// --- criterion 3: closed-form TMS entropy strictly increasing ------------

CheckResult check_tms_monotone() {
  double min_increment = std::numeric_limits<double>::infinity();
  double previous = entropy_tms_closed(0.0).value;
  for (int i = 1; i <= 60; ++i) {
    const double value = entropy_tms_closed(0.05 * i).value;
    min_increment = std::min(min_increment, value - previous);
    previous = value;
  }
  return CheckResult{"tms_entropy_monotone", min_increment > 0.0,
                     min_increment, "> 0",
                     "min increment on lambda grid 0..3 step 0.05"};
}

// --- criterion 4: thermal reduced state is the Gibbs distribution --------

CheckResult check_thermal_gibbs(double tol_scale) {
  const ModeCutoff n(64);
  double worst_elem = 0.0;
  double worst_diff = 0.0;
  for (double bw : {0.5, 1.0, 2.0}) {
    const TwoModePureState state = thermal_vacuum_state(bw, n);
    const DensityMatrix rho = reduced_density(state, Mode::mode1);
    const double x = std::exp(-bw);
    double gibbs = 1.0 - x;
    for (int j = 0; j < n.levels; ++j) {
      for (int k = 0; k < n.levels; ++k) {
        const double expected = (j == k) ? gibbs * std::pow(x, j) : 0.0;
        worst_elem = std::max(worst_elem,
                              std::abs(rho.matrix()(j, k) - expected));
      }
    }
    worst_diff = std::max(worst_diff, std::abs(entropy_tv_closed(bw).value -
                                               numeric_entropy(state)));
  }
  const bool closed_ok = worst_diff <= 1e-8 * tol_scale;
  return bounded("thermal_gibbs_reduced", worst_elem, 1e-10 * tol_scale,
                 "elementwise vs (1-x)x^n at beta*omega in {0.5,1,2}, N=64; "
                 "closed vs numeric " + sci(worst_diff) + " (<= " +
                     sci(1e-8 * tol_scale) + ")",
                 closed_ok);
}

// --- criterion 5: T -> 0 vanishing and monotone growth in T --------------

CheckResult check_thermal_limits(double tol_scale) {
  const double closed_cold = entropy_tv_closed(50.0).value;
  const double numeric_cold =
      numeric_entropy(thermal_vacuum_state(50.0, ModeCutoff(16)));
  const double measured = std::max(closed_cold, numeric_cold);

  const SweepSpec spec{SweepParameter::temperature, 50.0, 1000.0, 96,
                       ModeCutoff(64), LogBase::natural};
  const SweepTable sweep = sweep_tv(spec, 1e-20, 1.3806568e-23);
  const std::size_t closed_col = sweep.column_index("closed_entropy");
  const std::size_t numeric_col = sweep.column_index("numeric_entropy");
  double min_inc_closed = std::numeric_limits<double>::infinity();
  double min_inc_numeric = std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r < sweep.rows.size(); ++r) {
    min_inc_closed = std::min(min_inc_closed, sweep.rows[r][closed_col] -
                                                  sweep.rows[r - 1][closed_col]);
    min_inc_numeric =
        std::min(min_inc_numeric,
                 sweep.rows[r][numeric_col] - sweep.rows[r - 1][numeric_col]);
  }
  const bool monotone = min_inc_closed > 0.0 && min_inc_numeric > 0.0;
  return bounded("thermal_low_t_limit_and_monotone", measured,
                 1e-12 * tol_scale,
                 "entropy at beta*omega=50; monotone on 50..1000 K x96 (min "
                 "increments " + sci(min_inc_closed) + ", " +
                     sci(min_inc_numeric) + ")",
                 monotone);
}

// --- criterion 6: coupled oscillators against both oracles ---------------

CheckResult check_cho_dual_oracle(double tol_scale, bool fast) {
  const auto t0 = Clock::now();
  const ModeCutoff n(fast ? 16 : 32);
  double worst_entropy = 0.0;
  double worst_energy = 0.0;
  for (double delta : {0.1, 0.3, 0.5}) {
    OscillatorPair o;
    o.delta = delta;
    const NormalModeData modes = normal_mode_params(o);
    const GroundStateResult ground = cho_ground_state_numeric(o, n);
    worst_entropy = std::max(
        worst_entropy, std::abs(numeric_entropy(ground.state) -
                                entropy_gaussian_closed(modes.nu).value));
    worst_energy = std::max(
        worst_energy,
        std::abs(ground.energy - 0.5 * (modes.omega1 + modes.omega2)));
  }
  const double secs = seconds_since(t0);
  const bool extras = worst_energy <= 1e-6 * tol_scale && secs < 30.0;
  return bounded("cho_dual_oracle", worst_entropy, 1e-4 * tol_scale,
                 "delta in {0.1,0.3,0.5}, cutoff " +
                     std::to_string(n.levels) + "; energy vs (w1+w2)/2 " +
                     sci(worst_energy) + " (<= " + sci(1e-6 * tol_scale) +
                     "); runtime " + sci(secs) + " s (< 30 s)",
                 extras);
}

// --- criterion 7: published two-level entropy peaks near r1 = 2 ----------

CheckResult check_cho_argmax() {
  double best_r = 0.0;
  double best_v = -1.0;
  for (int i = 0; i <= 500; ++i) {
    const double r1 = 0.01 * i;
    const double v = paper::entropy_cho(r1).value;
    if (v > best_v) {
      best_v = v;
      best_r = r1;
    }
  }
  const bool ok = best_r >= 1.95 && best_r <= 2.15;
  return CheckResult{"cho_paper_entropy_argmax", ok, best_r,
                     "in [1.95, 2.15]",
                     "grid r1 in [0,5] step 0.01, max value " + sci(best_v)};
}

// --- criterion 8: reproduced state factors into single-mode pieces -------

CheckResult check_cho_product_form(double tol_scale, bool fast) {
  OscillatorPair o;
  o.delta = 0.5;
  const NormalModeData modes = normal_mode_params(o);
  const ModeCutoff n(fast ? 12 : 24);
  const paper::ChoState st = paper::cho_state(modes.r1, modes.r2, n);

  const ComplexMatrix normalized = st.rho_raw / st.trace;
  const DensityMatrix rho(normalized, ModeStructure{n.levels, n.levels});
  const DensityMatrix rho1 = partial_trace(rho, Mode::mode1);
  const DensityMatrix rho2 = partial_trace(rho, Mode::mode2);
  const ComplexMatrix product = tensor_product(rho1.matrix(), rho2.matrix());
  const double residual = (rho.matrix() - product).cwiseAbs().maxCoeff();

  const double entanglement = von_neumann_entropy(rho1).value;
  const bool unentangled = entanglement <= 1e-10 * tol_scale;
  return bounded("cho_paper_state_product_form", residual, 1e-12 * tol_scale,
                 "max-norm vs tensor product of its reductions at cutoff " +
                     std::to_string(n.levels) + "; reduced entropy " +
                     sci(entanglement) + " (<= " + sci(1e-10 * tol_scale) +
                     ", i.e. no inter-mode entanglement)",
                 unentangled);
}

// --- criterion 9: purity, mode symmetry, vacuum projector ----------------

CheckResult check_purity_symmetry(double tol_scale, bool fast) {
  std::vector<TwoModePureState> states;
  states.push_back(tms_state({1.0}, ModeCutoff(fast ? 12 : 24)));
  states.push_back(thermal_vacuum_state(1.0, ModeCutoff(fast ? 12 : 24)));
  {
    OscillatorPair o;
    o.delta = 0.5;
    states.push_back(
        cho_ground_state_numeric(o, ModeCutoff(fast ? 8 : 16)).state);
  }

  double worst_symmetry = 0.0;
  double worst_purity = 0.0;
  for (const auto& s : states) {
    const double s1 = von_neumann_entropy(reduced_density(s, Mode::mode1)).value;
    const double s2 = von_neumann_entropy(reduced_density(s, Mode::mode2)).value;
    worst_symmetry = std::max(worst_symmetry, std::abs(s1 - s2));
    const DensityMatrix full = density_from_pure(s);
    // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
    worst_purity = std::max(worst_purity,
                            std::abs(full.matrix().squaredNorm() - 1.0));
  }

  const TwoModePureState vacuum = tms_state({0.0}, ModeCutoff(8));
  ComplexMatrix projector = ComplexMatrix::Zero(64, 64);
  projector(0, 0) = 1.0;
  const double vac_dev =
      (density_from_pure(vacuum).matrix() - projector).cwiseAbs().maxCoeff();

  const bool extras = worst_purity <= 1e-10 * tol_scale &&
                      vac_dev <= 1e-12 * tol_scale;
  return bounded("purity_and_mode_symmetry", worst_symmetry, 1e-9 * tol_scale,
                 "mode-1 vs mode-2 reduced entropies; purity deviation " +
                     sci(worst_purity) + " (<= " + sci(1e-10 * tol_scale) +
                     "); vacuum projector deviation " + sci(vac_dev),
                 extras);
}

// --- criterion 10: cutoff convergence of every constructor ---------------

CheckResult check_convergence(double tol_scale, bool fast) {
  const double tms_delta =
      final_delta(convergence_report(SystemKind::tms, 1.5, {64, 128, 256}));
  const double thermal_delta =
      final_delta(convergence_report(SystemKind::thermal, 0.5, {32, 64, 128}));
  const std::vector<int> cho_cutoffs = fast ? std::vector<int>{8, 16}
                                            : std::vector<int>{16, 32};
  const double cho_delta =
      final_delta(convergence_report(SystemKind::cho, 0.5, cho_cutoffs));

  const double measured = std::max(tms_delta, thermal_delta);
  const bool cho_ok = cho_delta <= 1e-6 * tol_scale;
  return bounded("cutoff_convergence", measured, 1e-8 * tol_scale,
                 "tms lambda=1.5 delta " + sci(tms_delta) +
                     ", thermal bw=0.5 delta " + sci(thermal_delta) +
                     "; cho delta=0.5 delta " + sci(cho_delta) + " (<= " +
                     sci(1e-6 * tol_scale) + ")",
                 cho_ok);
}

// --- randomized eigensolver reconstruction -------------------------------

CheckResult check_eigensolver(double tol_scale, bool fast,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const std::vector<int> dims = fast ? std::vector<int>{8, 32}
                                     : std::vector<int>{8, 64, 256};
  double worst = 0.0;
  for (int dim : dims) {
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        a(i, j) = Complex(uni(rng), uni(rng));
      }
    }
    const ComplexMatrix h = 0.5 * (a + a.adjoint());
    const Eigensystem es = hermitian_eigensystem(h);
    const ComplexMatrix rebuilt = es.eigenvectors *
                                  es.eigenvalues.asDiagonal() *
                                  es.eigenvectors.adjoint();
    worst = std::max(worst, (rebuilt - h).cwiseAbs().maxCoeff() /
                                h.cwiseAbs().maxCoeff());
  }
  return bounded("eigensolver_reconstruction", worst, 1e-9 * tol_scale,
                 "random Hermitian, dims up to " +
                     std::to_string(dims.back()) + ", seed " +
                     std::to_string(seed));
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& opts) {
  const double tol = opts.fast ? 100.0 : 1.0;
  std::vector<CheckResult> results;
  results.push_back(check_tms_closed_vs_numeric(tol));
  results.push_back(check_series_identity(tol));
  results.push_back(check_tms_monotone());
  results.push_back(check_thermal_gibbs(tol));
  results.push_back(check_thermal_limits(tol));
  results.push_back(check_cho_dual_oracle(tol, opts.fast));
  results.push_back(check_cho_argmax());
  results.push_back(check_cho_product_form(tol, opts.fast));
  results.push_back(check_purity_symmetry(tol, opts.fast));
  results.push_back(check_convergence(tol, opts.fast));
  results.push_back(check_eigensolver(tol, opts.fast, opts.seed));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string format_result_line(const CheckResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s %-34s measured=%-11.4g require %s",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                r.requirement.c_str());
  std::string line(buf);
  if (!r.detail.empty()) {
    line += "  [" + r.detail + "]";
  }
  return line;
}

}  // namespace bosent::verify
