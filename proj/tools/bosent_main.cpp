// bosent: bipartite bosonic entanglement toolbox.
//
// Subcommands construct two-mode squeezed vacua, free-boson thermal vacua,
// and coupled-harmonic-oscillator ground states in truncated Fock space,
// then cross-check closed-form entanglement entropies against spectral
// (partial trace + diagonalization) oracles. Results go to stdout or to
// CSV/JSON files with deterministic 17-significant-digit formatting.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 domain error (unstable normal mode).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bosent/sweeps.hpp"
#include "bosent/verify.hpp"

namespace {

using namespace bosent;

struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

Range parse_range(const std::string& text, const std::string& flag) {
  Range r;
  char tail;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.start, &r.stop, &r.steps,
                  &tail) != 3) {
    throw CLI::ValidationError(flag, "expected start:stop:steps, got '" +
                                         text + "'");
  }
  return r;
}

LogBase parse_base(const std::string& name) {
  return name == "2" ? LogBase::two : LogBase::natural;
}

std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BOSENT_OUT_DIR")) {
      p = std::filesystem::path(dir) / p;
    }
  }
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  return p;
}

void emit_table(const SweepTable& table, const std::string& out,
                const std::string& format) {
  const TableFormat fmt =
      format == "json" ? TableFormat::json : TableFormat::csv;
  if (out.empty()) {
    if (fmt == TableFormat::csv) {
      write_csv(std::cout, table);
    } else {
      write_json(std::cout, table);
    }
    return;
  }
  const auto path = resolve_out(out);
  write_table_file(path, fmt, table);
  std::cout << "wrote " << path.string() << "\n";
}

void print_value(const char* name, double v) {
  std::printf("%-18s = %.10f\n", name, v);
}

void print_small(const char* name, double v) {
  std::printf("%-18s = %.3e\n", name, v);
}

// Same cutoff policy as the thermal sweep: raise until the Gibbs tail
// exp(-N beta omega) drops below 1e-16, capped at 512 levels.
int thermal_auto_cutoff(double bw, int start) {
  int levels = start;
  while (std::exp(-static_cast<double>(levels) * bw) >= 1e-16 && levels < 512) {
    levels = std::min(2 * levels, 512);
  }
  return levels;
}

struct CommonFlags {
  int cutoff = 128;
  std::string base = "e";
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonFlags& f, int cutoff_default,
                int cutoff_max) {
  f.cutoff = cutoff_default;
  cmd->add_option("--cutoff", f.cutoff, "Fock levels kept per mode")
      ->check(CLI::Range(2, cutoff_max))
      ->capture_default_str();
  cmd->add_option("--base", f.base, "entropy logarithm base")
      ->check(CLI::IsMember({"e", "2"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out,
                  "output file; relative paths honor BOSENT_OUT_DIR");
  cmd->add_option("--format", f.format, "file/stdout table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

SweepTable point_table(const std::string& param_name, double param,
                       double closed, double numeric, double weight,
                       bool flagged, LogBase base) {
  SweepTable t;
  t.columns = {param_name, "closed_entropy", "numeric_entropy",
               "abs_difference", "truncation_weight"};
  t.rows = {{param, closed, numeric, std::abs(closed - numeric), weight}};
  t.flagged = {flagged};
  t.metadata = {{"mode", "point"},
                {"base", base == LogBase::two ? "2" : "e"}};
  return t;
}

int run_tms(double lambda, bool have_point, const std::string& sweep,
            const CommonFlags& f) {
  const LogBase base = parse_base(f.base);
  if (!sweep.empty()) {
    const Range r = parse_range(sweep, "--sweep");
    const SweepTable table = sweep_tms(
        {SweepParameter::lambda, r.start, r.stop, r.steps, ModeCutoff(f.cutoff),
         base});
    emit_table(table, f.out, f.format);
    return 0;
  }
  if (!have_point) {
    throw CLI::ValidationError("tms", "specify --lambda or --sweep");
  }
  const TwoModePureState state = tms_state({lambda}, ModeCutoff(f.cutoff));
  const double closed = entropy_tms_closed(lambda, base).value;
  const double numeric =
      von_neumann_entropy(reduced_density(state, Mode::mode1), base).value;
  print_value("lambda", lambda);
  print_value("closed_entropy", closed);
  print_value("numeric_entropy", numeric);
  print_small("abs_difference", std::abs(closed - numeric));
  print_small("truncation_weight", state.truncation_weight);
  if (state.heavy_truncation()) {
    std::cout << "warning: more than 1% of the state fell outside the cutoff; "
                 "raise --cutoff\n";
  }
  if (!f.out.empty()) {
    emit_table(point_table("lambda", lambda, closed, numeric,
                           state.truncation_weight, state.heavy_truncation(),
                           base),
               f.out, f.format);
  }
  return 0;
}

int run_thermal(std::optional<double> temp, std::optional<double> bw_direct,
                const std::string& sweep, double omega_energy, double kb,
                const CommonFlags& f) {
  const LogBase base = parse_base(f.base);
  if (!sweep.empty()) {
    const Range r = parse_range(sweep, "--sweep");
    const SweepTable table =
        sweep_tv({SweepParameter::temperature, r.start, r.stop, r.steps,
                  ModeCutoff(f.cutoff), base},
                 omega_energy, kb);
    emit_table(table, f.out, f.format);
    return 0;
  }
  if (!temp && !bw_direct) {
    throw CLI::ValidationError("thermal",
                               "specify --temp, --beta-omega, or --sweep");
  }
  const double bw = bw_direct ? *bw_direct
                              : beta_omega({omega_energy, *temp, kb});
  const int levels = thermal_auto_cutoff(bw, f.cutoff);
  const TwoModePureState state = thermal_vacuum_state(bw, ModeCutoff(levels));
  const double closed = entropy_tv_closed(bw, base).value;
  const double numeric =
      von_neumann_entropy(reduced_density(state, Mode::mode1), base).value;
  if (temp) print_value("temperature_K", *temp);
  print_value("beta_omega", bw);
  print_value("closed_entropy", closed);
  print_value("numeric_entropy", numeric);
  print_small("abs_difference", std::abs(closed - numeric));
  print_small("truncation_weight", state.truncation_weight);
  std::printf("%-18s = %d\n", "cutoff_used", levels);
  if (!f.out.empty()) {
    emit_table(point_table(temp ? "temperature" : "beta_omega",
                           temp ? *temp : bw, closed, numeric,
                           state.truncation_weight, false, base),
               f.out, f.format);
  }
  return 0;
}

void print_discrepancy_report(const OscillatorPair& o, int cutoff,
                              LogBase base, std::ostream& os) {
  const NormalModeData modes = normal_mode_params(o);
  const paper::ChoState reproduced =
      paper::cho_state(modes.r1, modes.r2, ModeCutoff(cutoff));

  const ComplexMatrix normalized = reproduced.rho_raw / reproduced.trace;
  const DensityMatrix rho(normalized, ModeStructure{cutoff, cutoff});
  const DensityMatrix rho1 = partial_trace(rho, Mode::mode1);
  const DensityMatrix rho2 = partial_trace(rho, Mode::mode2);
  const double residual =
      (rho.matrix() - tensor_product(rho1.matrix(), rho2.matrix()))
          .cwiseAbs()
          .maxCoeff();
  const double reproduced_entanglement = von_neumann_entropy(rho1, base).value;

  const GroundStateResult ground =
      cho_ground_state_numeric(o, ModeCutoff(cutoff));
  const double gaussian = entropy_gaussian_closed(modes.nu, base).value;
  const double numeric =
      von_neumann_entropy(reduced_density(ground.state, Mode::mode1), base)
          .value;

  char buf[512];
  os << "coupled-oscillator reproduction discrepancy report\n";
  std::snprintf(buf, sizeof(buf),
                "  parameters: m=%g omega=%g delta=%g cutoff=%d base=%s\n",
                o.mass, o.omega, o.delta, cutoff,
                base == LogBase::two ? "2" : "e");
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "  normal modes: omega1=%.10f omega2=%.10f r1=%.10f "
                "r2=%.10f nu=%.10f\n",
                modes.omega1, modes.omega2, modes.r1, modes.r2, modes.nu);
  os << buf;
  os << "  reproduced product-form state (series construction):\n";
  std::snprintf(buf, sizeof(buf), "    raw trace                       = %.12f\n",
                reproduced.trace);
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "    tensor-product residual (max)   = %.3e  -> factorizes "
                "into single-mode pieces\n",
                residual);
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "    entanglement after normalizing  = %.3e  -> no "
                "inter-mode entanglement\n",
                reproduced_entanglement);
  os << buf;
  std::snprintf(buf, sizeof(buf), "  two-level closed form at r1       = %.10f\n",
                paper::entropy_cho(modes.r1, base).value);
  os << buf;
  os << "  oracles for the physical ground state:\n";
  std::snprintf(buf, sizeof(buf), "    gaussian closed form            = %.10f\n",
                gaussian);
  os << buf;
  std::snprintf(buf, sizeof(buf), "    numeric diagonalization         = %.10f\n",
                numeric);
  os << buf;
  std::snprintf(buf, sizeof(buf), "    |difference|                    = %.3e\n",
                std::abs(gaussian - numeric));
  os << buf;
}

int run_cho(std::optional<double> delta, double mass, double omega,
            std::optional<double> paper_r1, const std::string& paper_sweep,
            const std::string& delta_sweep, bool report_discrepancy,
            const CommonFlags& f) {
  const LogBase base = parse_base(f.base);

  if (!paper_sweep.empty()) {
    const Range r = parse_range(paper_sweep, "--paper-sweep");
    const SweepTable table =
        sweep_cho({SweepParameter::r1, r.start, r.stop, r.steps,
                   ModeCutoff(f.cutoff), base},
                  {mass, omega, 0.0});
    const std::size_t col = table.column_index("paper_closed_entropy");
    std::size_t best = 0;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      if (table.rows[i][col] > table.rows[best][col]) best = i;
    }
    emit_table(table, f.out, f.format);
    std::printf("argmax: r1 = %.10f with entropy %.10f\n",
                table.rows[best][0], table.rows[best][col]);
    return 0;
  }

  if (!delta_sweep.empty()) {
    const Range r = parse_range(delta_sweep, "--sweep");
    const SweepTable table =
        sweep_cho({SweepParameter::delta, r.start, r.stop, r.steps,
                   ModeCutoff(f.cutoff), base},
                  {mass, omega, 0.0});
    emit_table(table, f.out, f.format);
    return 0;
  }

  if (paper_r1) {
    print_value("r1", *paper_r1);
    print_value("two_level_trace", paper::cho_two_level_trace(*paper_r1));
    print_value("paper_closed_entropy", paper::entropy_cho(*paper_r1, base).value);
    return 0;
  }

  if (!delta) {
    throw CLI::ValidationError(
        "cho", "specify --delta, --paper-r1, --paper-sweep, or --sweep");
  }

  const OscillatorPair o{mass, omega, *delta};
  if (report_discrepancy) {
    if (f.out.empty()) {
      print_discrepancy_report(o, f.cutoff, base, std::cout);
    } else {
      std::ostringstream ss;
      print_discrepancy_report(o, f.cutoff, base, ss);
      std::cout << ss.str();
      const auto path = resolve_out(f.out);
      const auto tmp = path.string() + ".tmp";
      {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        file << ss.str();
      }
      std::filesystem::rename(tmp, path);
      std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
  }

  const NormalModeData modes = normal_mode_params(o);
  const GroundStateResult ground = cho_ground_state_numeric(o, ModeCutoff(f.cutoff));
  const double gaussian = entropy_gaussian_closed(modes.nu, base).value;
  const double numeric =
      von_neumann_entropy(reduced_density(ground.state, Mode::mode1), base)
          .value;
  print_value("delta", *delta);
  print_value("omega1", modes.omega1);
  print_value("omega2", modes.omega2);
  print_value("nu", modes.nu);
  print_value("gaussian_entropy", gaussian);
  print_value("numeric_entropy", numeric);
  print_small("abs_difference", std::abs(gaussian - numeric));
  print_value("ground_energy", ground.energy);
  if (!f.out.empty()) {
    SweepTable t = point_table("delta", *delta, gaussian, numeric,
                               ground.state.truncation_weight, false, base);
    t.metadata.push_back({"ground_energy", format_real(ground.energy)});
    t.metadata.push_back({"nu", format_real(modes.nu)});
    emit_table(t, f.out, f.format);
  }
  return 0;
}

int run_convergence(const std::string& system, double parameter,
                    const std::string& cutoffs_text, const CommonFlags& f) {
  SystemKind kind;
  if (system == "tms") {
    kind = SystemKind::tms;
  } else if (system == "thermal") {
    kind = SystemKind::thermal;
  } else {
    kind = SystemKind::cho;
  }
  std::vector<int> cutoffs;
  std::stringstream ss(cutoffs_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      cutoffs.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--cutoffs", "expected comma-separated "
                                              "integers, got '" +
                                                  cutoffs_text + "'");
    }
  }
  const SweepTable table =
      convergence_report(kind, parameter, cutoffs, parse_base(f.base));
  emit_table(table, f.out, f.format);
  if (f.out.empty()) {
    std::printf("# final_delta = %s\n", format_real(final_delta(table)).c_str());
  }
  return 0;
}

int run_verify(bool fast, std::uint64_t seed) {
  const auto results =
      verify::run_acceptance_checks(verify::VerifyOptions{fast, seed});
  int failures = 0;
  for (const auto& r : results) {
    std::cout << verify::format_result_line(r) << "\n";
    if (!r.passed) ++failures;
  }
  std::printf("%zu/%zu checks passed%s\n", results.size() - failures,
              results.size(), fast ? " (fast mode)" : "");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bipartite bosonic entanglement: two-mode squeezed vacuum, free-boson "
      "thermal vacuum, and coupled harmonic oscillators in truncated Fock "
      "space, with closed-form vs spectral-entropy cross-checks"};
  app.require_subcommand(1);

  int exit_code = 0;

  // tms ------------------------------------------------------------------
  auto* tms = app.add_subcommand(
      "tms", "two-mode squeezed vacuum entanglement entropy");
  double tms_lambda = 0.0;
  std::string tms_sweep;
  CommonFlags tms_flags;
  auto* lambda_opt = tms->add_option("--lambda", tms_lambda,
                                     "squeezing parameter (>= 0)")
                         ->check(CLI::NonNegativeNumber);
  tms->add_option("--sweep", tms_sweep, "lambda sweep as start:stop:steps")
      ->excludes(lambda_opt);
  add_common(tms, tms_flags, 128, 4096);
  tms->callback([&]() {
    exit_code = run_tms(tms_lambda, lambda_opt->count() > 0, tms_sweep,
                        tms_flags);
  });

  // thermal ----------------------------------------------------------------
  auto* thermal = app.add_subcommand(
      "thermal", "free-boson thermal vacuum system/environment entanglement");
  std::optional<double> thermal_temp;
  std::optional<double> thermal_bw;
  std::string thermal_sweep;
  double omega_energy = 1e-20;
  double kb = 1.3806568e-23;
  CommonFlags thermal_flags;
  auto* temp_opt =
      thermal->add_option("--temp", thermal_temp, "temperature in Kelvin")
          ->check(CLI::PositiveNumber);
  auto* bw_opt = thermal
                     ->add_option("--beta-omega", thermal_bw,
                                  "dimensionless beta*omega, bypassing units")
                     ->check(CLI::PositiveNumber)
                     ->excludes(temp_opt);
  thermal->add_option("--sweep", thermal_sweep,
                      "temperature sweep as start:stop:steps (Kelvin)")
      ->excludes(temp_opt)
      ->excludes(bw_opt);
  thermal->add_option("--omega", omega_energy, "oscillator quantum in Joules")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  thermal->add_option("--kb", kb, "Boltzmann constant in J/K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(thermal, thermal_flags, 64, 4096);
  thermal->callback([&]() {
    exit_code = run_thermal(thermal_temp, thermal_bw, thermal_sweep,
                            omega_energy, kb, thermal_flags);
  });

  // cho --------------------------------------------------------------------
  auto* cho = app.add_subcommand(
      "cho", "two coupled harmonic oscillators: ground-state entanglement");
  std::optional<double> cho_delta;
  double cho_mass = 1.0;
  double cho_omega = 1.0;
  std::optional<double> cho_paper_r1;
  std::string cho_paper_sweep;
  std::string cho_delta_sweep;
  bool cho_report = false;
  CommonFlags cho_flags;
  auto* delta_opt =
      cho->add_option("--delta", cho_delta, "position coupling strength");
  cho->add_option("--mass", cho_mass, "oscillator mass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cho->add_option("--omega", cho_omega, "oscillator frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* paper_r1_opt =
      cho->add_option("--paper-r1", cho_paper_r1,
                      "evaluate the published two-level closed form at r1")
          ->excludes(delta_opt);
  auto* paper_sweep_opt =
      cho->add_option("--paper-sweep", cho_paper_sweep,
                      "sweep the published closed form, start:stop:steps")
          ->excludes(delta_opt)
          ->excludes(paper_r1_opt);
  cho->add_option("--sweep", cho_delta_sweep,
                  "physical delta sweep as start:stop:steps")
      ->excludes(delta_opt)
      ->excludes(paper_r1_opt)
      ->excludes(paper_sweep_opt);
  cho->add_flag("--report-discrepancy", cho_report,
                "compare the reproduced product-form state and two-level "
                "closed form against the physical oracles");
  add_common(cho, cho_flags, 24, 64);
  cho->callback([&]() {
    exit_code = run_cho(cho_delta, cho_mass, cho_omega, cho_paper_r1,
                        cho_paper_sweep, cho_delta_sweep, cho_report,
                        cho_flags);
  });

  // convergence --------------------------------------------------------
  auto* conv = app.add_subcommand(
      "convergence", "entropy vs cutoff table for any of the three systems");
  std::string conv_system = "tms";
  double conv_parameter = 1.0;
  std::string conv_cutoffs = "16,32,64,128";
  CommonFlags conv_flags;
  conv->add_option("--system", conv_system, "tms | thermal | cho")
      ->check(CLI::IsMember({"tms", "thermal", "cho"}))
      ->capture_default_str();
  conv->add_option("--parameter", conv_parameter,
                   "lambda (tms), beta*omega (thermal), or delta (cho)")
      ->capture_default_str();
  conv->add_option("--cutoffs", conv_cutoffs,
                   "comma-separated ascending cutoffs")
      ->capture_default_str();
  add_common(conv, conv_flags, 64, 4096);
  conv->callback([&]() {
    exit_code = run_convergence(conv_system, conv_parameter, conv_cutoffs,
                                conv_flags);
  });

  // verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the self-verification suite; exit 0 iff all checks pass");
  bool verify_fast = false;
  std::uint64_t verify_seed = verify::VerifyOptions{}.seed;
  verify_cmd->add_flag("--fast", verify_fast,
                       "smaller diagonalization cutoffs, tolerances x100");
  verify_cmd->add_option("--seed", verify_seed,
                         "seed for randomized matrix inputs")
      ->capture_default_str();
  verify_cmd->callback(
      [&]() { exit_code = run_verify(verify_fast, verify_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bosent::InstabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
