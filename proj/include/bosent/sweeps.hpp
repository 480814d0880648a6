#pragma once

#include <vector>

#include "bosent/entanglement.hpp"
#include "bosent/table.hpp"

namespace bosent {

enum class SweepParameter { lambda, temperature, r1, delta };
enum class SystemKind { tms, thermal, cho };

/// A one-parameter sweep: `steps` evenly spaced points on [start, stop]
/// (endpoints included), evaluated at the given cutoff and entropy base.
struct SweepSpec {
  SweepParameter parameter;
  double start;
  double stop;
  int steps;
  ModeCutoff cutoff;
  LogBase base = LogBase::natural;
};

/// Two-mode squeezed vacuum sweep over lambda. Columns: lambda,
/// closed_entropy, numeric_entropy (partial trace + spectral entropy),
/// abs_difference, truncation_weight. Rows whose truncation weight exceeds
/// 1% are flagged but still computed. Metadata declares difference_bound,
/// a rigorous per-sweep bound on the truncation-induced difference.
SweepTable sweep_tms(const SweepSpec& spec);

/// Thermal-vacuum sweep over temperature in Kelvin. The per-row cutoff is
/// raised above spec.cutoff until exp(-N beta omega) < 1e-16, capped at
/// N = 512; rows that hit the cap are flagged. Columns as in sweep_tms
/// with `temperature` as the parameter.
SweepTable sweep_tv(const SweepSpec& spec, double omega_energy,
                    double boltzmann);

/// Coupled-oscillator sweep. parameter == r1 reproduces the published
/// two-level closed form (columns: r1, paper_closed_entropy); parameter ==
/// delta sweeps the physical coupling on the template oscillator pair
/// (columns: delta, gaussian_entropy, numeric_entropy, abs_difference,
/// truncation_weight). Unstable couplings produce flagged rows with no
/// values (NaN) and the sweep continues.
SweepTable sweep_cho(const SweepSpec& spec, const OscillatorPair& tmpl);

/// Downstream entanglement entropy at each cutoff plus the change from the
/// previous cutoff (first row: NaN). The last delta is the convergence
/// estimate, also stored in metadata as final_delta. `parameter` is lambda
/// for tms, beta*omega for thermal, and delta (with m = omega = 1) for cho.
SweepTable convergence_report(SystemKind system, double parameter,
                              const std::vector<int>& cutoffs,
                              LogBase base = LogBase::natural);

/// Convergence estimate of a convergence_report table.
double final_delta(const SweepTable& report);

}  // namespace bosent
