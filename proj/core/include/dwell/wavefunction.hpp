#pragma once

#include <Eigen/Core>
#include <complex>

#include "dwell/basis.hpp"

namespace dwell {

enum class Space { Position, Momentum };

struct StateFunctions {
  int state_index = 0;
  double gamma = 0.0;
  Eigen::VectorXd coeffs;  // b_m in the scaled oscillator basis
  Parity parity = Parity::Even;
};

struct DensityPoint {
  double rho = 0.0;
  double drho = 0.0;
};

// Extracts state n from a spectrum.
StateFunctions state_functions(const Spectrum& spectrum, int n);

// Position wavefunction, orthonormal Hermite-function recurrence (Gaussian
// folded into phi_0, stable to m = 200, |x| <= 20/sqrt(gamma)).
double psi_x(const StateFunctions& state, double x);

// Momentum wavefunction with c_m = (-i)^m b_m. A definite-parity state gives
// a real series times a global phase: real for even, -i times real for odd.
std::complex<double> psi_p(const StateFunctions& state, double p);

// rho = |psi|^2 and its analytic derivative in the requested space.
DensityPoint density_and_derivative(const StateFunctions& state, Space space,
                                    double t);

// Half-width of the numerically supported interval: the Gaussian envelope of
// the highest occupied basis function falls below ~1e-18 of its peak outside.
double support_radius(const StateFunctions& state, Space space);

}  // namespace dwell
