#pragma once

#include "dwell/basis.hpp"
#include "dwell/quadrature.hpp"

namespace dwell {

struct BoxConfig {
  double x_c = 1.0;                // box half-width
  int basis_size = 200;
  double oscillator_gamma = 0.25;  // fixes the unconfined ladder (2n+1)/2
};

// Oscillator in a hard box: H = -(1/2) d2/dx2 + 8 g^2 x^2 on [-x_c, x_c]
// with Dirichlet walls, in the orthonormal sine basis
// phi_k = sin(k pi (x + x_c) / (2 x_c)) / sqrt(x_c). At g = 1/4 the potential
// is x^2/2 and the unconfined energies are (2n+1)/2. x^2 elements are
// closed-form sine integrals; odd k carries the even-parity states.
Spectrum cho_solve(const BoxConfig& config);

// Sine-mode matrix element of x^2 about the box center: the integral of
// sin(k pi u/L) x^2 sin(l pi u/L) (2/L) du over u in [0, L], x = u - L/2.
// Zero for odd k + l.
double cho_x2_element(int k, int l, double length);

// Sine-series eigenfunction of the confined oscillator at x.
double cho_psi_x(const BoxConfig& config, const Spectrum& spectrum,
                 int state_index, double x);

// Position Shannon entropy of one confined eigenstate.
double cho_shannon_x(const BoxConfig& config, int state_index,
                     const QuadratureConfig& quad = {});

}  // namespace dwell
