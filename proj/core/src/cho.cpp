#include "dwell/cho.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

namespace dwell {

namespace {

void check(const BoxConfig& config) {
  if (!(config.x_c > 0.0)) throw InvalidSpecError("cho: x_c must be > 0");
  if (config.basis_size < 4)
    throw InvalidSpecError("cho: basis_size must be >= 4");
  if (!(config.oscillator_gamma > 0.0))
    throw InvalidSpecError("cho: oscillator_gamma must be > 0");
}

}  // namespace

double cho_x2_element(int k, int l, double length) {
  const double pi = std::numbers::pi;
  if (k < 1 || l < 1 || !(length > 0.0))
    throw InvalidSpecError("cho_x2_element: indices start at 1, length > 0");
  if (k == l)
    return length * length * (1.0 / 12.0 - 0.5 / (pi * pi * k * k));
  if ((k + l) % 2 != 0) return 0.0;
  double dm = k - l, dp = k + l;
  return 2.0 * length * length / (pi * pi) *
         (1.0 / (dm * dm) - 1.0 / (dp * dp));
}

Spectrum cho_solve(const BoxConfig& config) {
  check(config);
  const double pi = std::numbers::pi;
  int n = config.basis_size;
  double length = 2.0 * config.x_c;
  // -(1/2) psi'' + 8 g^2 x^2 psi; g = 1/4 gives x^2/2
  double w = 8.0 * config.oscillator_gamma * config.oscillator_gamma;

  // odd k: even states, even k: odd states
  int ne = (n + 1) / 2;
  int no = n / 2;
  auto block = [&](int count, int first_k) {
    Eigen::MatrixXd h(count, count);
    for (int i = 0; i < count; ++i) {
      int k = first_k + 2 * i;
      for (int j = 0; j <= i; ++j) {
        int l = first_k + 2 * j;
        double v = w * cho_x2_element(k, l, length);
        if (i == j) {
          double kin = k * pi / length;
          v += 0.5 * kin * kin;
        }
        h(i, j) = h(j, i) = v;
      }
    }
    return h;
  };

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> se(block(ne, 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> so(block(no, 2));
  if (se.info() != Eigen::Success || so.info() != Eigen::Success)
    throw EigensolverError("cho_solve: block eigensolver failed (N=" +
                           std::to_string(n) + ", x_c=" +
                           std::to_string(config.x_c) + ")");

  Spectrum out;
  out.gamma = config.oscillator_gamma;
  out.shift_included = false;
  out.eigenvalues.resize(n);
  out.coefficients = Eigen::MatrixXd::Zero(n, n);
  out.parities.resize(n);
  int ie = 0, io = 0;
  for (int s = 0; s < n; ++s) {
    bool take_even;
    if (ie >= ne)
      take_even = false;
    else if (io >= no)
      take_even = true;
    else
      take_even = se.eigenvalues()(ie) <= so.eigenvalues()(io) + 1e-13;
    if (take_even) {
      out.eigenvalues(s) = se.eigenvalues()(ie);
      for (int i = 0; i < ne; ++i)
        out.coefficients(2 * i, s) = se.eigenvectors()(i, ie);
      out.parities[s] = Parity::Even;
      ++ie;
    } else {
      out.eigenvalues(s) = so.eigenvalues()(io);
      for (int i = 0; i < no; ++i)
        out.coefficients(2 * i + 1, s) = so.eigenvectors()(i, io);
      out.parities[s] = Parity::Odd;
      ++io;
    }
  }
  for (int s = 0; s < n; ++s) {
    int imax = 0;
    out.coefficients.col(s).cwiseAbs().maxCoeff(&imax);
    if (out.coefficients(imax, s) < 0.0) out.coefficients.col(s) *= -1.0;
  }
  return out;
}

double cho_psi_x(const BoxConfig& config, const Spectrum& spectrum,
                 int state_index, double x) {
  check(config);
  if (state_index < 0 || state_index >= spectrum.eigenvalues.size())
    throw UnsupportedStateError("cho_psi_x: state index out of range");
  if (std::fabs(x) >= config.x_c) return 0.0;
  const double pi = std::numbers::pi;
  double u = (x + config.x_c) * pi / (2.0 * config.x_c);
  double norm = 1.0 / std::sqrt(config.x_c);
  double sum = 0.0;
  for (int i = 0; i < spectrum.coefficients.rows(); ++i) {
    double c = spectrum.coefficients(i, state_index);
    if (c != 0.0) sum += c * std::sin((i + 1.0) * u);
  }
  return norm * sum;
}

double cho_shannon_x(const BoxConfig& config, int state_index,
                     const QuadratureConfig& quad) {
  Spectrum spectrum = cho_solve(config);
  auto f = [&](double x) {
    double psi = cho_psi_x(config, spectrum, state_index, x);
    return xlnx(psi * psi);
  };
  return -integrate(f, -config.x_c, config.x_c, quad);
}

}  // namespace dwell
