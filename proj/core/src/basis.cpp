#include "dwell/basis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace dwell {

namespace {

void check_config(const SolverConfig& config) {
  if (config.basis_size < 4)
    throw InvalidSpecError("solver: basis_size must be >= 4");
}

int resolved_pad(const PotentialSpec& spec, const SolverConfig& config) {
  if (config.pad < 0) return 2 * spec.n_exp;
  if (config.pad < 2 * spec.n_exp)
    throw InvalidSpecError("solver: pad must be >= 2*n_exp");
  return config.pad;
}

double cubic_c(GammaMode mode, int n) {
  double nn = n;
  switch (mode) {
    case GammaMode::FullBasis:
      return (2.0 * nn * nn + 4.0 * nn + 3.0) / (nn + 1.0);
    case GammaMode::EvenParity:
      return 2.0 * nn + 1.0;
    case GammaMode::OddParity:
      return 2.0 * nn + 3.0;
    case GammaMode::Manual:
      break;
  }
  throw InvalidSpecError("solver: no trace cubic in manual mode");
}

// Basis indices whose diagonal enters the trace; 0..N inclusive reproduces
// the closed-form C of the full cubic.
std::vector<int> trace_indices(GammaMode mode, int n) {
  std::vector<int> out;
  for (int m = 0; m <= n; ++m) {
    bool even = (m % 2) == 0;
    if (mode == GammaMode::FullBasis || (mode == GammaMode::EvenParity && even) ||
        (mode == GammaMode::OddParity && !even))
      out.push_back(m);
  }
  return out;
}

// sum over the index set of <m|(a + a^t)^(2k)|m>, via a padded matrix power
double ladder_diag_sum(const std::vector<int>& indices, int k) {
  int top = indices.back();
  int d = top + 2 * k + 2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) a(i, i + 1) = a(i + 1, i) = std::sqrt(i + 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  for (int j = 0; j < 2 * k; ++j) m = m * a;
  double s = 0.0;
  for (int i : indices) s += m(i, i);
  return s;
}

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + b); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double solve_gamma(const PotentialSpec& spec, const SolverConfig& config) {
  if (spec.alpha == 0.0)
    throw DegenerateCubicError("solve_gamma: alpha = 0 makes gamma = 0");
  validate(spec);
  check_config(config);
  if (config.gamma_mode == GammaMode::Manual) {
    if (!(config.manual_gamma > 0.0))
      throw InvalidSpecError("solve_gamma: manual gamma must be > 0");
    return config.manual_gamma;
  }

  if (spec.n_exp == 2 && spec.m_exp == 1) {
    double c = cubic_c(config.gamma_mode, config.basis_size);
    // depressed cubic g^3 + p g + q = 0 with p >= 0, q < 0: one real root
    double p = spec.beta / 4.0;
    double q = -spec.alpha * c / 8.0;
    double disc = std::sqrt(0.25 * q * q + p * p * p / 27.0);
    double g = std::cbrt(-0.5 * q + disc) + std::cbrt(-0.5 * q - disc);
    for (int it = 0; it < 50; ++it) {
      double f = 8.0 * g * g * g + 2.0 * spec.beta * g - spec.alpha * c;
      double df = 24.0 * g * g + 2.0 * spec.beta;
      double step = f / df;
      g -= step;
      if (std::fabs(step) < 1e-16 * g) break;
    }
    return g;
  }

  // general exponents: minimize the basis-set trace numerically; the power
  // sums are gamma-independent, so the scan is cheap
  std::vector<int> idx = trace_indices(config.gamma_mode, config.basis_size);
  double s1 = 0.0;
  for (int m : idx) s1 += 2.0 * m + 1.0;
  double tn = ladder_diag_sum(idx, spec.n_exp);
  double tm = ladder_diag_sum(idx, spec.m_exp);
  auto trace = [&](double g) {
    return g * s1 + spec.alpha * tn / std::pow(4.0 * g, spec.n_exp) -
           spec.beta * tm / std::pow(4.0 * g, spec.m_exp);
  };
  int best = 0;
  double best_val = trace(std::ldexp(1.0, -24));
  for (int i = -23; i <= 24; ++i) {
    double v = trace(std::ldexp(1.0, i));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  return golden_section_min(trace, std::ldexp(1.0, best - 1),
                            std::ldexp(1.0, best + 1));
}

Eigen::MatrixXd build_hamiltonian(const PotentialSpec& spec, double gamma,
                                  const SolverConfig& config) {
  validate(spec);
  check_config(config);
  if (!(gamma > 0.0))
    throw InvalidSpecError("build_hamiltonian: gamma must be > 0");
  int n = config.basis_size;
  int d = n + resolved_pad(spec, config);

  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
  double s = 1.0 / (2.0 * std::sqrt(gamma));
  for (int i = 0; i + 1 < d; ++i)
    x(i, i + 1) = x(i + 1, i) = s * std::sqrt(i + 1.0);

  Eigen::MatrixXd x2 = x * x;
  Eigen::MatrixXd xn = x2;
  for (int j = 1; j < spec.n_exp; ++j) xn = xn * x2;
  Eigen::MatrixXd xm = x2;
  for (int j = 1; j < spec.m_exp; ++j) xm = xm * x2;

  Eigen::MatrixXd h = spec.alpha * xn - spec.beta * xm;
  for (int i = 0; i < d; ++i) {
    h(i, i) += gamma * (2.0 * i + 1.0);
    if (i + 2 < d) {
      double v = -gamma * std::sqrt((i + 1.0) * (i + 2.0));
      h(i, i + 2) += v;
      h(i + 2, i) += v;
    }
  }

  Eigen::MatrixXd out = h.topLeftCorner(n, n);
  if (spec.include_shift) out.diagonal().array() += well_geometry(spec).h;
  return out;
}

Spectrum diagonalize(const PotentialSpec& spec, const SolverConfig& config) {
  double gamma = solve_gamma(spec, config);
  Eigen::MatrixXd h = build_hamiltonian(spec, gamma, config);
  int n = config.basis_size;
  int ne = (n + 1) / 2;
  int no = n / 2;

  Eigen::MatrixXd he(ne, ne), ho(no, no);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) he(i, j) = h(2 * i, 2 * j);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j) ho(i, j) = h(2 * i + 1, 2 * j + 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> se(he), so(ho);
  if (se.info() != Eigen::Success || so.info() != Eigen::Success)
    throw EigensolverError("diagonalize: block eigensolver failed (N=" +
                           std::to_string(n) + ", gamma=" +
                           std::to_string(gamma) + ", |H|=" +
                           std::to_string(h.norm()) + ")");

  Spectrum out;
  out.gamma = gamma;
  out.shift_included = spec.include_shift;
  out.eigenvalues.resize(n);
  out.coefficients = Eigen::MatrixXd::Zero(n, n);
  out.parities.resize(n);

  int ie = 0, io = 0;
  for (int k = 0; k < n; ++k) {
    bool take_even;
    if (ie >= ne)
      take_even = false;
    else if (io >= no)
      take_even = true;
    else
      // even first when the pair is degenerate at working precision
      take_even = se.eigenvalues()(ie) <= so.eigenvalues()(io) + 1e-13;
    if (take_even) {
      out.eigenvalues(k) = se.eigenvalues()(ie);
      for (int m = 0; m < ne; ++m)
        out.coefficients(2 * m, k) = se.eigenvectors()(m, ie);
      out.parities[k] = Parity::Even;
      ++ie;
    } else {
      out.eigenvalues(k) = so.eigenvalues()(io);
      for (int m = 0; m < no; ++m)
        out.coefficients(2 * m + 1, k) = so.eigenvectors()(m, io);
      out.parities[k] = Parity::Odd;
      ++io;
    }
  }

  // fix the overall sign so output is reproducible across eigensolvers
  for (int k = 0; k < n; ++k) {
    int imax = 0;
    out.coefficients.col(k).cwiseAbs().maxCoeff(&imax);
    if (out.coefficients(imax, k) < 0.0) out.coefficients.col(k) *= -1.0;
  }
  return out;
}

int nth_state_of_parity(const Spectrum& spectrum, Parity parity, int k) {
  if (k < 0) throw UnsupportedStateError("nth_state_of_parity: k < 0");
  int seen = 0;
  for (int i = 0; i < static_cast<int>(spectrum.parities.size()); ++i) {
    if (spectrum.parities[i] == parity) {
      if (seen == k) return i;
      ++seen;
    }
  }
  throw UnsupportedStateError("nth_state_of_parity: fewer than k states");
}

}  // namespace dwell
