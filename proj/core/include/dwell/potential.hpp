#pragma once

#include <optional>

#include "dwell/errors.hpp"

namespace dwell {

// V(x) = alpha x^(2 n_exp) - beta x^(2 m_exp) (+ h), symmetric double well for
// beta > 0. The shift h = -min V makes min V = 0 when include_shift is set.
struct PotentialSpec {
  double alpha = 1.0;
  double beta = 0.0;
  int n_exp = 2;
  int m_exp = 1;
  bool include_shift = false;
};

struct WellGeometry {
  double x0;  // location of the positive-x minimum (0 when beta = 0)
  double h;   // barrier height above the wells; beta^2/(4 alpha) for the quartic
};

struct TurningPoints {
  double outer;
  std::optional<double> inner;  // present iff the energy is at or below the barrier top
};

// Throws InvalidSpecError unless alpha > 0, beta >= 0, n_exp > m_exp >= 1.
void validate(const PotentialSpec& spec);

double evaluate(const PotentialSpec& spec, double x);

WellGeometry well_geometry(const PotentialSpec& spec);

// Energy follows the shift convention selected by spec.include_shift. Closed
// form for the
// quartic (n_exp, m_exp) = (2, 1); bracketed bisection for general exponents.
// Throws EnergyBelowMinimumError when the energy lies below min V, and
// NoBarrierError when require_inner is set for a barrier-free well (beta = 0).
TurningPoints turning_points(const PotentialSpec& spec, double energy,
                             bool require_inner = false);

}  // namespace dwell
