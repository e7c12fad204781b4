// Command line front end: eigenstates, measure sweeps, derivative and
// extremum reports, phase-space contours, and self-checks against the
// oscillator closed forms.
//
// Exit codes: 0 success, 1 usage error, 2 numerical or spec failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwell/dwell.hpp"

namespace {

using namespace dwell;

const std::vector<std::string> kFamilies = {
    "fisher", "shannon", "onicescu", "os", "sigma", "tunneling", "area"};
const std::vector<std::string> kDeriveFamilies = {"fisher", "shannon",
                                                  "onicescu", "os"};

struct SolveArgs {
  double alpha = 1.0;
  double beta = 0.0;
  int basis = 100;
  int states = 6;
  bool shift = false;
  double gamma = 0.0;  // > 0 overrides the variational scale
};

struct SweepArgs {
  std::vector<double> alphas{1.0};
  BetaGrid grid;
  std::vector<int> states{0, 1};
  std::vector<std::string> measures{"shannon"};
  int basis = 150;
  int threads = 0;
  std::string format = "csv";
  std::string output;
};

struct DeriveArgs {
  double alpha = 1.0;
  int state = 0;
  std::string measure = "shannon";
  BetaGrid grid;
  int basis = 150;
};

struct ExtremaArgs {
  std::vector<double> alphas{1.0};
  BetaGrid grid{0.0, 20.0, 0.25};
  std::vector<int> states{0, 1, 2, 3};
  int basis = 150;
  std::string output;
};

struct PhaseArgs {
  double alpha = 1.0;
  double beta = 0.0;
  int state = 0;
  int basis = 150;
  bool shift = false;
  int contour_samples = 257;
  std::string output;
};

struct ChoArgs {
  double x_c = 1.0;
  int basis = 200;
  int states = 6;
  double gamma = 0.25;
};

struct QhoArgs {
  double gamma = 0.5;
  int max_state = 3;
};

Spectrum solve_spectrum(double alpha, double beta, int basis, bool shift,
                        double manual_gamma) {
  PotentialSpec spec{alpha, beta, 2, 1, shift};
  SolverConfig cfg;
  cfg.basis_size = basis;
  if (manual_gamma > 0.0) {
    cfg.gamma_mode = GammaMode::Manual;
    cfg.manual_gamma = manual_gamma;
  }
  return diagonalize(spec, cfg);
}

void print_ladder(const Spectrum& s, int states) {
  std::printf("gamma = %s\n", to_sig15(s.gamma).c_str());
  int count = std::min<int>(states, s.eigenvalues.size());
  for (int n = 0; n < count; ++n)
    std::printf("E[%d] = %s  (%s)\n", n, to_sig15(s.eigenvalues(n)).c_str(),
                s.parities[n] == Parity::Even ? "even" : "odd");
}

int cmd_solve(const SolveArgs& a) {
  print_ladder(solve_spectrum(a.alpha, a.beta, a.basis, a.shift, a.gamma),
               a.states);
  return 0;
}

int cmd_sweep(const SweepArgs& a) {
  SweepSpec spec;
  spec.alpha_values = a.alphas;
  spec.beta_grid = a.grid;
  spec.states = a.states;
  spec.measures = a.measures;
  spec.basis_size = a.basis;
  spec.threads = a.threads;
  spec.format = a.format == "json" ? SweepFormat::JSON : SweepFormat::CSV;
  spec.output_path = a.output;
  SweepResult res = run_sweep(spec);
  std::printf("wrote %zu rows to %s\n", res.rows.size(), a.output.c_str());
  return 0;
}

int cmd_derive(const DeriveArgs& a) {
  SweepSpec spec;
  spec.alpha_values = {a.alpha};
  spec.beta_grid = a.grid;
  spec.states = {a.state};
  spec.basis_size = a.basis;
  DerivativeReport rep = run_derivatives(spec, a.measure);
  std::printf("beta,d_x,d_p,d_total\n");
  for (size_t i = 0; i < rep.beta_grid.size(); ++i)
    std::printf("%s,%s,%s,%s\n", to_sig15(rep.beta_grid[i]).c_str(),
                to_sig15(rep.d_x[i]).c_str(), to_sig15(rep.d_p[i]).c_str(),
                to_sig15(rep.d_total[i]).c_str());
  for (const Extremum& e : rep.extrema)
    std::printf("# order-%d %s of %s curve at beta = %s\n", e.order,
                e.kind == ExtremumKind::Minimum ? "minimum" : "maximum",
                e.curve == Curve::X ? "x" : e.curve == Curve::P ? "p" : "total",
                to_sig15(e.beta).c_str());
  return 0;
}

int cmd_extrema(const ExtremaArgs& a) {
  ExtremaConfig cfg;
  cfg.grid = a.grid;
  cfg.states = a.states;
  cfg.basis_size = a.basis;
  std::string out = "alpha,state,curve,kind,beta\n";
  for (const ExtremaRow& row : report_extrema_table(a.alphas, cfg)) {
    auto append = [&](const std::vector<Extremum>& list, const char* curve) {
      for (const Extremum& e : list)
        out += to_sig15(row.alpha) + "," + std::to_string(row.state) + "," +
               curve + "," +
               (e.kind == ExtremumKind::Minimum ? "min" : "max") + "," +
               to_sig15(e.beta) + "\n";
    };
    append(row.onicescu_x, "onicescu_x");
    append(row.onicescu_p, "onicescu_p");
  }
  if (a.output.empty())
    std::fputs(out.c_str(), stdout);
  else
    write_text_atomic(a.output, out);
  return 0;
}

int cmd_phase(const PhaseArgs& a) {
  PotentialSpec spec{a.alpha, a.beta, 2, 1, a.shift};
  SolverConfig cfg;
  cfg.basis_size = a.basis;
  Spectrum s = diagonalize(spec, cfg);
  TunnelingResult t = tunneling_probability(spec, s, a.state);
  double area = phase_area(spec, s, a.state);
  PhaseContour contour = phase_contour(spec, s, a.state, a.contour_samples);
  std::printf("E[%d] = %s\n", a.state, to_sig15(s.eigenvalues(a.state)).c_str());
  std::printf("area = %s\n", to_sig15(area).c_str());
  std::printf("t_prob = %s\n", to_sig15(t.t_prob).c_str());
  if (t.inner_tp)
    std::printf("x_m = %s\n", to_sig15(*t.inner_tp).c_str());
  std::printf("lobes = %d\n", contour.lobes);
  if (!a.output.empty()) {
    std::string out = "x,p_plus,p_minus,lobe_id\n";
    for (const ContourSample& c : contour.samples)
      out += to_sig15(c.x) + "," + to_sig15(c.p_plus) + "," +
             to_sig15(c.p_minus) + "," + std::to_string(c.lobe_id) + "\n";
    write_text_atomic(a.output, out);
  }
  return 0;
}

int cmd_cho(const ChoArgs& a) {
  BoxConfig cfg;
  cfg.x_c = a.x_c;
  cfg.basis_size = a.basis;
  cfg.oscillator_gamma = a.gamma;
  Spectrum s = cho_solve(cfg);
  int count = std::min<int>(a.states, s.eigenvalues.size());
  for (int n = 0; n < count; ++n)
    std::printf("E[%d] = %s\n", n, to_sig15(s.eigenvalues(n)).c_str());
  return 0;
}

int cmd_qho_check(const QhoArgs& a) {
  const QhoMeasureKind kinds[] = {
      QhoMeasureKind::FisherX,    QhoMeasureKind::FisherP,
      QhoMeasureKind::FisherNet,  QhoMeasureKind::ShannonX,
      QhoMeasureKind::ShannonP,   QhoMeasureKind::ShannonTotal,
      QhoMeasureKind::OnicescuX,  QhoMeasureKind::OnicescuP,
      QhoMeasureKind::OnicescuNet, QhoMeasureKind::OSX,
      QhoMeasureKind::OSP,        QhoMeasureKind::OSNet,
  };
  const char* names[] = {"fisher_x",   "fisher_p",   "fisher_net",
                         "shannon_x",  "shannon_p",  "shannon_total",
                         "onicescu_x", "onicescu_p", "onicescu_net",
                         "os_x",       "os_p",       "os_net"};
  bool ok = true;
  for (int n = 0; n <= a.max_state; ++n) {
    StateFunctions s;
    s.state_index = n;
    s.gamma = a.gamma;
    s.coeffs = Eigen::VectorXd::Zero(n + 1);
    s.coeffs(n) = 1.0;
    s.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
    MeasureSet m = measure_set(s);
    const double got[] = {m.fisher_x,   m.fisher_p,  m.fisher_net,
                          m.shannon_x,  m.shannon_p, m.shannon_total,
                          m.onicescu_x, m.onicescu_p, m.onicescu_net,
                          m.os_x,       m.os_p,      m.os_net};
    for (int k = 0; k < 12; ++k) {
      double want = qho_measure(kinds[k], a.gamma, n);
      double tol = qho_tolerance(kinds[k], n);
      double dev = std::abs(got[k] - want) / std::abs(want);
      bool pass = dev <= tol;
      ok &= pass;
      std::printf("%s n=%d %-13s numeric %-22s closed %-22s rel dev %.2e%s\n",
                  pass ? "ok  " : "FAIL", n, names[k],
                  to_sig15(got[k]).c_str(), to_sig15(want).c_str(), dev,
                  pass ? "" : " exceeds tolerance");
    }
  }
  if (!ok) throw Error("qho-check: numeric pipeline disagrees at this gamma");
  return 0;
}

void add_grid_options(CLI::App* cmd, BetaGrid& grid) {
  cmd->add_option("--beta-start", grid.start, "First beta on the grid");
  cmd->add_option("--beta-stop", grid.stop, "Last beta on the grid");
  cmd->add_option("--beta-step", grid.step, "Grid spacing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Double-well eigenstates, entropic measures, and phase-space reports"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Diagonalize one potential and print the ladder");
  solve->add_option("--alpha", solve_args.alpha, "Quartic coefficient")
      ->required();
  solve->add_option("--beta", solve_args.beta, "Well depth coefficient")
      ->required();
  solve->add_option("--basis", solve_args.basis, "Basis size");
  solve->add_option("--states", solve_args.states, "States to print");
  solve->add_flag("--shift", solve_args.shift, "Shift so min V = 0");
  solve->add_option("--gamma", solve_args.gamma,
                    "Manual basis scale (default: variational)");

  SweepArgs sweep_args;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Measures over a beta grid, CSV or JSON");
  sweep->add_option("--alpha", sweep_args.alphas, "Alpha values")
      ->delimiter(',');
  add_grid_options(sweep, sweep_args.grid);
  sweep->add_option("--states", sweep_args.states, "State indices")
      ->delimiter(',');
  sweep->add_option("--measures", sweep_args.measures, "Measure families")
      ->delimiter(',')
      ->check(CLI::IsMember(kFamilies));
  sweep->add_option("--basis", sweep_args.basis, "Basis size");
  sweep->add_option("--threads", sweep_args.threads,
                    "Worker threads (0: hardware)");
  sweep->add_option("--format", sweep_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("-o,--output", sweep_args.output, "Output file")
      ->required();

  DeriveArgs derive_args;
  CLI::App* derive = app.add_subcommand(
      "derive", "Beta derivatives of one measure family for one state");
  derive->add_option("--alpha", derive_args.alpha, "Alpha value");
  derive->add_option("--state", derive_args.state, "State index");
  derive->add_option("--measure", derive_args.measure, "Measure family")
      ->check(CLI::IsMember(kDeriveFamilies));
  add_grid_options(derive, derive_args.grid);
  derive->add_option("--basis", derive_args.basis, "Basis size");

  ExtremaArgs extrema_args;
  CLI::App* extrema = app.add_subcommand(
      "extrema", "Extremum locations of the Onicescu measures");
  extrema->add_option("--alpha", extrema_args.alphas, "Alpha values")
      ->delimiter(',');
  add_grid_options(extrema, extrema_args.grid);
  extrema->add_option("--states", extrema_args.states, "State indices")
      ->delimiter(',');
  extrema->add_option("--basis", extrema_args.basis, "Basis size");
  extrema->add_option("-o,--output", extrema_args.output,
                      "Output file (default: stdout)");

  PhaseArgs phase_args;
  CLI::App* phase = app.add_subcommand(
      "phase", "Tunneling probability, lobe area, and contour for one state");
  phase->add_option("--alpha", phase_args.alpha, "Quartic coefficient");
  phase->add_option("--beta", phase_args.beta, "Well depth coefficient")
      ->required();
  phase->add_option("--state", phase_args.state, "State index");
  phase->add_option("--basis", phase_args.basis, "Basis size");
  phase->add_flag("--shift", phase_args.shift, "Shift so min V = 0");
  phase->add_option("--contour-samples", phase_args.contour_samples,
                    "x samples per lobe");
  phase->add_option("-o,--output", phase_args.output, "Contour CSV file");

  ChoArgs cho_args;
  CLI::App* cho = app.add_subcommand(
      "cho", "Confined oscillator in a box with Dirichlet walls");
  cho->add_option("--x-c", cho_args.x_c, "Box half-width")->required();
  cho->add_option("--basis", cho_args.basis, "Sine modes");
  cho->add_option("--states", cho_args.states, "States to print");
  cho->add_option("--gamma", cho_args.gamma, "Oscillator scale");

  QhoArgs qho_args;
  CLI::App* qho = app.add_subcommand(
      "qho-check", "Numeric measures vs oscillator closed forms");
  qho->add_option("--gamma", qho_args.gamma, "Basis scale")->required();
  qho->add_option("--max-state", qho_args.max_state, "Highest state (<= 3)");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(solve)) return cmd_solve(solve_args);
    if (app.got_subcommand(sweep)) return cmd_sweep(sweep_args);
    if (app.got_subcommand(derive)) return cmd_derive(derive_args);
    if (app.got_subcommand(extrema)) return cmd_extrema(extrema_args);
    if (app.got_subcommand(phase)) return cmd_phase(phase_args);
    if (app.got_subcommand(cho)) return cmd_cho(cho_args);
    if (app.got_subcommand(qho)) return cmd_qho_check(qho_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const dwell::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
