#include "bosent/sweeps.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bosent {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr int kThermalCutoffCap = 512;
// exp(-N beta omega) must drop below this before the thermal cutoff stops
// being raised.
constexpr double kThermalTailTarget = 1e-16;

void validate_grid(const SweepSpec& spec) {
  if (!(spec.start < spec.stop)) {
    throw std::invalid_argument("sweep: start must be below stop");
  }
  if (spec.steps < 2) {
    throw std::invalid_argument("sweep: need at least 2 steps");
  }
}

double grid_point(const SweepSpec& spec, int i) {
  if (i == spec.steps - 1) return spec.stop;  // exact endpoint
  return spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
}

std::string base_name(LogBase base) {
  return base == LogBase::two ? "2" : "e";
}

double in_base(double nats, LogBase base) {
  return base == LogBase::two ? nats / std::numbers::ln2 : nats;
}

double numeric_state_entropy(const TwoModePureState& s, LogBase base) {
  return von_neumann_entropy(reduced_density(s, Mode::mode1), base).value;
}

// Rigorous bound (in nats) on |renormalized truncated entropy - closed
// form| for the geometric Schmidt distribution p_n = (1-t) t^n cut at N:
// the tail carries eps = t^N of the mass, so
//   |diff| <= eps/(1-eps) (H+1) + eps(-log(1-t) + (-log t)(N + t/(1-t))).
double geometric_truncation_bound(double t, int levels, double entropy_nats) {
  if (t <= 0.0) return 0.0;
  const double eps = std::pow(t, static_cast<double>(levels));
  const double tail = eps * (-std::log1p(-t) +
                             (-std::log(t)) * (levels + t / (1.0 - t)));
  return eps / (1.0 - eps) * (entropy_nats + 1.0) + tail;
}

}  // namespace

SweepTable sweep_tms(const SweepSpec& spec) {
  if (spec.parameter != SweepParameter::lambda) {
    throw std::invalid_argument("sweep_tms: parameter must be lambda");
  }
  if (spec.start < 0.0) {
    throw std::invalid_argument("sweep_tms: lambda must start at >= 0");
  }
  validate_grid(spec);

  SweepTable table;
  table.columns = {"lambda", "closed_entropy", "numeric_entropy",
                   "abs_difference", "truncation_weight"};
  double bound = 0.0;
  for (int i = 0; i < spec.steps; ++i) {
    const double lambda = grid_point(spec, i);
    const TwoModePureState state = tms_state({lambda}, spec.cutoff);
    const double closed = entropy_tms_closed(lambda, spec.base).value;
    const double numeric = numeric_state_entropy(state, spec.base);
    table.rows.push_back({lambda, closed, numeric, std::abs(closed - numeric),
                          state.truncation_weight});
    table.flagged.push_back(state.heavy_truncation());
    bound = std::max(
        bound, in_base(geometric_truncation_bound(
                           std::tanh(lambda) * std::tanh(lambda),
                           spec.cutoff.levels,
                           entropy_tms_closed(lambda).value),
                       spec.base));
  }
  table.metadata = {{"system", "tms"},
                    {"parameter", "lambda"},
                    {"cutoff", std::to_string(spec.cutoff.levels)},
                    {"base", base_name(spec.base)},
                    {"difference_bound", format_real(2.0 * bound)}};
  return table;
}

SweepTable sweep_tv(const SweepSpec& spec, double omega_energy,
                    double boltzmann) {
  if (spec.parameter != SweepParameter::temperature) {
    throw std::invalid_argument("sweep_tv: parameter must be temperature");
  }
  if (!(spec.start > 0.0)) {
    throw std::invalid_argument("sweep_tv: temperature must start above 0 K");
  }
  validate_grid(spec);

  SweepTable table;
  table.columns = {"temperature", "closed_entropy", "numeric_entropy",
                   "abs_difference", "truncation_weight"};
  double bound = 0.0;
  int max_cutoff_used = spec.cutoff.levels;
  for (int i = 0; i < spec.steps; ++i) {
    const double temp = grid_point(spec, i);
    const double bw = beta_omega({omega_energy, temp, boltzmann});
    // Raise the cutoff until the Gibbs tail is negligible.
    int levels = spec.cutoff.levels;
    bool capped = false;
    while (std::exp(-static_cast<double>(levels) * bw) >= kThermalTailTarget) {
      if (levels >= kThermalCutoffCap) {
        capped = true;
        break;
      }
      levels = std::min(2 * levels, kThermalCutoffCap);
    }
    max_cutoff_used = std::max(max_cutoff_used, levels);

    const TwoModePureState state = thermal_vacuum_state(bw, ModeCutoff(levels));
    const double closed = entropy_tv_closed(bw, spec.base).value;
    const double numeric = numeric_state_entropy(state, spec.base);
    table.rows.push_back({temp, closed, numeric, std::abs(closed - numeric),
                          state.truncation_weight});
    table.flagged.push_back(capped);
    bound = std::max(bound,
                     in_base(geometric_truncation_bound(
                                 std::exp(-bw), levels,
                                 entropy_tv_closed(bw).value),
                             spec.base));
  }
  table.metadata = {{"system", "thermal"},
                    {"parameter", "temperature"},
                    {"omega_energy", format_real(omega_energy)},
                    {"boltzmann", format_real(boltzmann)},
                    {"cutoff", std::to_string(spec.cutoff.levels)},
                    {"max_cutoff_used", std::to_string(max_cutoff_used)},
                    {"base", base_name(spec.base)},
                    {"difference_bound", format_real(2.0 * bound)}};
  return table;
}

SweepTable sweep_cho(const SweepSpec& spec, const OscillatorPair& tmpl) {
  validate_grid(spec);
  SweepTable table;

  if (spec.parameter == SweepParameter::r1) {
    table.columns = {"r1", "paper_closed_entropy"};
    for (int i = 0; i < spec.steps; ++i) {
      const double r1 = grid_point(spec, i);
      table.rows.push_back({r1, paper::entropy_cho(r1, spec.base).value});
      table.flagged.push_back(false);
    }
    table.metadata = {{"system", "cho"},
                      {"parameter", "r1"},
                      {"mode", "paper_reproduction"},
                      {"base", base_name(spec.base)}};
    return table;
  }

  if (spec.parameter != SweepParameter::delta) {
    throw std::invalid_argument("sweep_cho: parameter must be r1 or delta");
  }
  table.columns = {"delta", "gaussian_entropy", "numeric_entropy",
                   "abs_difference", "truncation_weight"};
  for (int i = 0; i < spec.steps; ++i) {
    const double delta = grid_point(spec, i);
    OscillatorPair o = tmpl;
    o.delta = delta;
    try {
      const NormalModeData modes = normal_mode_params(o);
      const GroundStateResult ground = cho_ground_state_numeric(o, spec.cutoff);
      const double closed = entropy_gaussian_closed(modes.nu, spec.base).value;
      const double numeric = numeric_state_entropy(ground.state, spec.base);
      table.rows.push_back({delta, closed, numeric,
                            std::abs(closed - numeric),
                            ground.state.truncation_weight});
      table.flagged.push_back(false);
    } catch (const InstabilityError&) {
      table.rows.push_back({delta, kNan, kNan, kNan, kNan});
      table.flagged.push_back(true);
    }
  }
  table.metadata = {{"system", "cho"},
                    {"parameter", "delta"},
                    {"mass", format_real(tmpl.mass)},
                    {"omega", format_real(tmpl.omega)},
                    {"cutoff", std::to_string(spec.cutoff.levels)},
                    {"base", base_name(spec.base)},
                    {"difference_bound", format_real(1e-4)}};
  return table;
}

SweepTable convergence_report(SystemKind system, double parameter,
                              const std::vector<int>& cutoffs, LogBase base) {
  if (cutoffs.size() < 2) {
    throw std::invalid_argument("convergence_report: need at least 2 cutoffs");
  }
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= cutoffs[i - 1]) {
      throw std::invalid_argument(
          "convergence_report: cutoffs must be strictly ascending");
    }
  }

  SweepTable table;
  table.columns = {"cutoff", "entropy", "delta_to_previous"};
  std::string system_name;
  double previous = kNan;
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    const ModeCutoff n(cutoffs[i]);
    double entropy = 0.0;
    switch (system) {
      case SystemKind::tms:
        system_name = "tms";
        entropy = numeric_state_entropy(tms_state({parameter}, n), base);
        break;
      case SystemKind::thermal:
        system_name = "thermal";
        entropy = numeric_state_entropy(thermal_vacuum_state(parameter, n), base);
        break;
      case SystemKind::cho: {
        system_name = "cho";
        OscillatorPair o;
        o.delta = parameter;
        entropy = numeric_state_entropy(cho_ground_state_numeric(o, n).state, base);
        break;
      }
    }
    const double delta = i == 0 ? kNan : std::abs(entropy - previous);
    table.rows.push_back({static_cast<double>(cutoffs[i]), entropy, delta});
    table.flagged.push_back(false);
    previous = entropy;
  }
  table.metadata = {{"system", system_name},
                    {"parameter", format_real(parameter)},
                    {"base", base_name(base)},
                    {"final_delta", format_real(table.rows.back()[2])}};
  return table;
}

double final_delta(const SweepTable& report) {
  const std::size_t col = report.column_index("delta_to_previous");
  if (report.rows.empty()) {
    throw std::invalid_argument("final_delta: empty report");
  }
  return report.rows.back()[col];
}

}  // namespace bosent
