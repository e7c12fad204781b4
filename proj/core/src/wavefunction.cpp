#include "dwell/wavefunction.hpp"

#include <cmath>
#include <numbers>

namespace dwell {

namespace {

struct SeriesPoint {
  double value = 0.0;
  double dvalue = 0.0;  // derivative in t
};

// Sum of c_m phi_m(t) for orthonormal oscillator functions with scale g:
// phi_0 = (2g/pi)^(1/4) exp(-y^2/2), y = sqrt(2g) t,
// phi_m = y sqrt(2/m) phi_{m-1} - sqrt((m-1)/m) phi_{m-2}.
// The Gaussian rides inside phi_0, so |phi_m| stays O(1) for all m and the
// upward recurrence never overflows. momentum_signs flips c_m by the
// (-i)^m pattern reduced to its real part: +,+,-,-,...
SeriesPoint hermite_series(const Eigen::VectorXd& coeffs, double g, double t,
                           bool momentum_signs) {
  double root = std::sqrt(2.0 * g);
  double y = root * t;
  double prev2 = 0.0;
  double prev = std::pow(2.0 * g / std::numbers::pi, 0.25) *
                std::exp(-0.5 * y * y);
  SeriesPoint out;
  for (int m = 0; m < coeffs.size(); ++m) {
    double phi;
    if (m == 0) {
      phi = prev;
    } else {
      phi = y * std::sqrt(2.0 / m) * prev -
            std::sqrt((m - 1.0) / m) * prev2;
      prev2 = prev;
      prev = phi;
    }
    double c = coeffs(m);
    if (momentum_signs && ((m >> 1) & 1)) c = -c;
    if (c != 0.0) {
      out.value += c * phi;
      out.dvalue += c * (std::sqrt(2.0 * m) * prev2 - y * phi);
    }
  }
  out.dvalue *= root;
  return out;
}

double gamma_for(const StateFunctions& state, Space space) {
  return space == Space::Position ? state.gamma : 1.0 / (4.0 * state.gamma);
}

}  // namespace

StateFunctions state_functions(const Spectrum& spectrum, int n) {
  if (n < 0 || n >= spectrum.eigenvalues.size())
    throw UnsupportedStateError("state_functions: index out of range");
  StateFunctions s;
  s.state_index = n;
  s.gamma = spectrum.gamma;
  s.coeffs = spectrum.coefficients.col(n);
  s.parity = spectrum.parities[n];
  return s;
}

double psi_x(const StateFunctions& state, double x) {
  return hermite_series(state.coeffs, state.gamma, x, false).value;
}

std::complex<double> psi_p(const StateFunctions& state, double p) {
  double s =
      hermite_series(state.coeffs, gamma_for(state, Space::Momentum), p, true)
          .value;
  if (state.parity == Parity::Even) return {s, 0.0};
  return {0.0, -s};
}

DensityPoint density_and_derivative(const StateFunctions& state, Space space,
                                    double t) {
  SeriesPoint e = hermite_series(state.coeffs, gamma_for(state, space), t,
                                 space == Space::Momentum);
  return {e.value * e.value, 2.0 * e.value * e.dvalue};
}

double support_radius(const StateFunctions& state, Space space) {
  double peak = state.coeffs.cwiseAbs().maxCoeff();
  int m_max = 0;
  for (int m = 0; m < state.coeffs.size(); ++m)
    if (std::fabs(state.coeffs(m)) > 1e-12 * peak) m_max = m;
  double g = gamma_for(state, space);
  return std::sqrt((2.0 * m_max + 1.0) / (2.0 * g)) + 8.0 / std::sqrt(2.0 * g);
}

}  // namespace dwell
