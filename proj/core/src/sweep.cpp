#include "dwell/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "dwell/format.hpp"
#include "dwell/semiclassics.hpp"

namespace dwell {

namespace {

struct Family {
  const char* name;
  std::vector<const char*> cols;
};

// canonical output order, independent of request order
const std::vector<Family>& families() {
  static const std::vector<Family> f = {
      {"fisher", {"fisher_x", "fisher_p", "fisher_net"}},
      {"shannon", {"shannon_x", "shannon_p", "shannon_total"}},
      {"onicescu", {"onicescu_x", "onicescu_p", "onicescu_net"}},
      {"os", {"os_x", "os_p", "os_net"}},
      {"sigma", {"sigma_x", "sigma_p"}},
      {"tunneling", {"t_prob"}},
      {"area", {"area"}},
  };
  return f;
}

bool wants(const SweepSpec& spec, const char* name) {
  return std::find(spec.measures.begin(), spec.measures.end(), name) !=
         spec.measures.end();
}

std::vector<double> beta_points(const BetaGrid& grid) {
  if (!(grid.step > 0.0))
    throw InvalidSpecError("sweep: beta step must be > 0");
  if (grid.stop < grid.start)
    throw InvalidSpecError("sweep: beta stop must be >= start");
  int count =
      static_cast<int>(std::floor((grid.stop - grid.start) / grid.step + 1.5));
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = grid.start + i * grid.step;
  return out;
}

struct CheckedSpec {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<int> states;
};

CheckedSpec checked(const SweepSpec& spec) {
  CheckedSpec out;
  if (spec.alpha_values.empty())
    throw InvalidSpecError("sweep: need at least one alpha");
  if (spec.states.empty()) throw InvalidSpecError("sweep: states empty");
  if (spec.measures.empty()) throw InvalidSpecError("sweep: measures empty");
  for (const std::string& m : spec.measures) {
    bool known = false;
    for (const Family& f : families()) known |= (m == f.name);
    if (!known) throw InvalidSpecError("sweep: unknown measure " + m);
  }
  out.alphas = spec.alpha_values;
  std::sort(out.alphas.begin(), out.alphas.end());
  out.alphas.erase(std::unique(out.alphas.begin(), out.alphas.end()),
                   out.alphas.end());
  for (double a : out.alphas)
    if (!(a > 0.0)) throw InvalidSpecError("sweep: alpha must be > 0");
  out.states = spec.states;
  std::sort(out.states.begin(), out.states.end());
  out.states.erase(std::unique(out.states.begin(), out.states.end()),
                   out.states.end());
  for (int s : out.states)
    if (s < 0 || s >= spec.basis_size)
      throw InvalidSpecError("sweep: state index outside the basis");
  out.betas = beta_points(spec.beta_grid);
  return out;
}

std::vector<std::string> column_names(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (const Family& f : families())
    if (wants(spec, f.name))
      for (const char* c : f.cols) cols.emplace_back(c);
  return cols;
}

// all rows for one (alpha, beta) grid point, states in ascending order
std::vector<std::vector<double>> compute_point(const SweepSpec& spec,
                                               const CheckedSpec& grid,
                                               double alpha, double beta) {
  PotentialSpec pot;
  pot.alpha = alpha;
  pot.beta = beta;
  SolverConfig solver;
  solver.basis_size = spec.basis_size;
  Spectrum spectrum = diagonalize(pot, solver);

  std::vector<std::vector<double>> rows;
  rows.reserve(grid.states.size());
  for (int st : grid.states) {
    StateFunctions state = state_functions(spectrum, st);
    std::vector<double> vals;
    bool need_shannon = wants(spec, "shannon") || wants(spec, "os");
    bool need_onicescu = wants(spec, "onicescu") || wants(spec, "os");
    double sx = 0.0, sp = 0.0, ex = 0.0, ep = 0.0;
    if (wants(spec, "fisher")) {
      double fx = fisher(state, Space::Position, spec.quad);
      double fp = fisher(state, Space::Momentum, spec.quad);
      vals.insert(vals.end(), {fx, fp, fx * fp});
    }
    if (need_shannon) {
      sx = shannon(state, Space::Position, spec.quad);
      sp = shannon(state, Space::Momentum, spec.quad);
    }
    if (wants(spec, "shannon")) vals.insert(vals.end(), {sx, sp, sx + sp});
    if (need_onicescu) {
      ex = onicescu(state, Space::Position, spec.quad);
      ep = onicescu(state, Space::Momentum, spec.quad);
    }
    if (wants(spec, "onicescu")) vals.insert(vals.end(), {ex, ep, ex * ep});
    if (wants(spec, "os")) {
      double ox = std::exp(2.0 / 3.0 * sx) * ex;
      double op = std::exp(2.0 / 3.0 * sp) * ep;
      vals.insert(vals.end(), {ox, op, ox * op});
    }
    if (wants(spec, "sigma")) {
      Uncertainties u = uncertainties(state, spec.quad);
      vals.insert(vals.end(), {u.sigma_x, u.sigma_p});
    }
    if (wants(spec, "tunneling"))
      vals.push_back(tunneling_probability(pot, spectrum, st, spec.quad).t_prob);
    if (wants(spec, "area"))
      vals.push_back(phase_area(pot, spectrum, st, spec.quad));
    rows.push_back(std::move(vals));
  }
  return rows;
}

std::string render_csv(const SweepResult& result) {
  std::string out = "alpha,beta,state";
  for (const std::string& c : result.columns) out += "," + c;
  out += "\n";
  for (const SweepRow& r : result.rows) {
    out += to_sig15(r.alpha) + "," + to_sig15(r.beta) + "," +
           std::to_string(r.state);
    for (double v : r.values) out += "," + to_sig15(v);
    out += "\n";
  }
  return out;
}

std::string render_json(const SweepResult& result) {
  std::string out = "[\n";
  for (size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& r = result.rows[i];
    out += "{\"alpha\":" + to_sig15(r.alpha) + ",\"beta\":" + to_sig15(r.beta) +
           ",\"state\":" + std::to_string(r.state);
    for (size_t j = 0; j < result.columns.size(); ++j)
      out += ",\"" + result.columns[j] + "\":" + to_sig15(r.values[j]);
    out += i + 1 < result.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

}  // namespace

std::vector<Extremum> find_extrema(const std::vector<double>& betas,
                                   const std::vector<double>& values,
                                   double eps, Curve curve, int order) {
  if (betas.size() != values.size())
    throw InvalidSpecError("find_extrema: grid/series length mismatch");
  std::vector<Extremum> out;
  if (values.size() < 3) return out;
  std::vector<double> d(values.size() - 1);
  for (size_t i = 0; i + 1 < values.size(); ++i) d[i] = values[i + 1] - values[i];
  int last_sign = 0;
  int last_idx = -1;
  for (size_t i = 0; i < d.size(); ++i) {
    int s = d[i] > eps ? 1 : (d[i] < -eps ? -1 : 0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      // peak/valley sits between the end of the last run and the start of
      // this one; pick the midpoint grid index
      size_t idx = (static_cast<size_t>(last_idx) + 1 + i) / 2;
      out.push_back({betas[idx],
                     last_sign > 0 ? ExtremumKind::Maximum : ExtremumKind::Minimum,
                     curve, order});
    }
    last_sign = s;
    last_idx = static_cast<int>(i);
  }
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  CheckedSpec grid = checked(spec);

  size_t tasks = grid.alphas.size() * grid.betas.size();
  std::vector<std::vector<std::vector<double>>> results(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<size_t> cursor{0};

  auto worker = [&] {
    for (size_t i; (i = cursor.fetch_add(1)) < tasks;) {
      double alpha = grid.alphas[i / grid.betas.size()];
      double beta = grid.betas[i % grid.betas.size()];
      try {
        results[i] = compute_point(spec, grid, alpha, beta);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  size_t nthreads = spec.threads > 0 ? static_cast<size_t>(spec.threads)
                                     : (hw ? hw : 1);
  nthreads = std::min(nthreads, tasks);
  if (nthreads > 1) {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  } else {
    worker();
  }
  for (size_t i = 0; i < tasks; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  SweepResult out;
  out.columns = column_names(spec);
  out.rows.reserve(tasks * grid.states.size());
  for (size_t i = 0; i < tasks; ++i) {
    double alpha = grid.alphas[i / grid.betas.size()];
    double beta = grid.betas[i % grid.betas.size()];
    for (size_t s = 0; s < grid.states.size(); ++s)
      out.rows.push_back(
          {alpha, beta, grid.states[s], std::move(results[i][s])});
  }

  if (!spec.output_path.empty())
    write_text_atomic(spec.output_path, spec.format == SweepFormat::CSV
                                            ? render_csv(out)
                                            : render_json(out));
  return out;
}

DerivativeReport run_derivatives(const SweepSpec& spec,
                                 const std::string& measure) {
  const Family* family = nullptr;
  for (const Family& f : families())
    if (measure == f.name) family = &f;
  if (!family || family->cols.size() != 3)
    throw InvalidSpecError("derivatives: measure must be one of fisher, "
                           "shannon, onicescu, os");
  if (spec.alpha_values.size() != 1 || spec.states.size() != 1)
    throw InvalidSpecError("derivatives: exactly one alpha and one state");
  if (beta_points(spec.beta_grid).size() < 5)
    throw GridTooCoarseError("derivatives: need at least 5 beta points");

  SweepSpec inner = spec;
  inner.measures = {measure};
  inner.output_path.clear();
  SweepResult res = run_sweep(inner);

  DerivativeReport report;
  std::vector<std::vector<double>> series(3);
  for (const SweepRow& r : res.rows) {
    report.beta_grid.push_back(r.beta);
    for (int c = 0; c < 3; ++c) series[c].push_back(r.values[c]);
  }

  double h = spec.beta_grid.step;
  auto differentiate = [&](const std::vector<double>& v) {
    size_t n = v.size();
    std::vector<double> d(n);
    d[0] = (v[1] - v[0]) / h;
    d[n - 1] = (v[n - 1] - v[n - 2]) / h;
    for (size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    return d;
  };
  report.d_x = differentiate(series[0]);
  report.d_p = differentiate(series[1]);
  report.d_total = differentiate(series[2]);

  const Curve curves[3] = {Curve::X, Curve::P, Curve::Total};
  const std::vector<double>* deriv[3] = {&report.d_x, &report.d_p,
                                         &report.d_total};
  for (int c = 0; c < 3; ++c) {
    auto m = find_extrema(report.beta_grid, series[c], spec.noise_eps,
                                 curves[c], 0);
    auto dm = find_extrema(report.beta_grid, *deriv[c], spec.noise_eps,
                                  curves[c], 1);
    report.extrema.insert(report.extrema.end(), m.begin(), m.end());
    report.extrema.insert(report.extrema.end(), dm.begin(), dm.end());
  }
  return report;
}

std::vector<ExtremaRow> report_extrema_table(
    const std::vector<double>& alpha_values, const ExtremaConfig& config) {
  if (beta_points(config.grid).size() < 5)
    throw GridTooCoarseError("extrema: need at least 5 beta points");
  SweepSpec spec;
  spec.alpha_values = alpha_values;
  spec.beta_grid = config.grid;
  spec.states = config.states;
  spec.measures = {"onicescu"};
  spec.basis_size = config.basis_size;
  spec.threads = config.threads;
  SweepResult res = run_sweep(spec);

  std::vector<ExtremaRow> table;
  std::vector<double> alphas = spec.alpha_values;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<int> states = config.states;
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());

  for (double alpha : alphas) {
    for (int st : states) {
      std::vector<double> betas, ox, op;
      for (const SweepRow& r : res.rows) {
        if (r.alpha != alpha || r.state != st) continue;
        betas.push_back(r.beta);
        ox.push_back(r.values[0]);
        op.push_back(r.values[1]);
      }
      ExtremaRow row;
      row.alpha = alpha;
      row.state = st;
      row.onicescu_x =
          find_extrema(betas, ox, config.noise_eps, Curve::X, 0);
      row.onicescu_p =
          find_extrema(betas, op, config.noise_eps, Curve::P, 0);
      table.push_back(std::move(row));
    }
  }
  return table;
}

std::optional<double> merge_point(const std::vector<double>& betas,
                                  const std::vector<double>& a,
                                  const std::vector<double>& b, double tol,
                                  int run_length) {
  if (a.size() != betas.size() || b.size() != betas.size())
    throw InvalidSpecError("merge_point: series lengths disagree");
  if (run_length < 1) throw InvalidSpecError("merge_point: run_length < 1");
  int run = 0;
  for (size_t i = 0; i < betas.size(); ++i) {
    if (std::fabs(a[i] - b[i]) < tol) {
      if (++run >= run_length)
        return betas[i + 1 - static_cast<size_t>(run_length)];
    } else {
      run = 0;
    }
  }
  return std::nullopt;
}

}  // namespace dwell
