#pragma once

#include <optional>
#include <vector>

#include "dwell/basis.hpp"
#include "dwell/quadrature.hpp"

namespace dwell {

struct TunnelingResult {
  double t_prob = 0.0;                 // probability mass inside the barrier
  std::optional<double> inner_tp;      // x_m; absent when E is above the top
};

struct ContourSample {
  double x = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  int lobe_id = 0;
};

struct PhaseContour {
  std::vector<ContourSample> samples;
  int lobes = 1;
};

// T = integral of |psi_n|^2 over [-x_m, x_m] when the state sits below the
// barrier top; 0 otherwise.
TunnelingResult tunneling_probability(const PotentialSpec& spec,
                                      const Spectrum& spectrum,
                                      int state_index,
                                      const QuadratureConfig& config = {});

// Single-lobe area: integral of sqrt(E_n - V) over the allowed set with
// x >= 0. Before the lobe split this is [0, x_outer]; after, [x_inner,
// x_outer].
double phase_area(const PotentialSpec& spec, const Spectrum& spectrum,
                  int state_index, const QuadratureConfig& config = {});

// p = +-sqrt(E_n - V(x)) sampled uniformly in x, one strip per lobe.
PhaseContour phase_contour(const PotentialSpec& spec, const Spectrum& spectrum,
                           int state_index, int samples);

// Smallest beta at which state n drops below the barrier top, by bisection on
// the unshifted eigenvalue's zero crossing over [beta_lo, beta_hi].
double tunneling_onset(double alpha, int state_index, double beta_lo,
                       double beta_hi, const SolverConfig& config = {});

}  // namespace dwell
