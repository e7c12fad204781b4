#pragma once

#include "dwell/quadrature.hpp"
#include "dwell/wavefunction.hpp"

namespace dwell {

struct MeasureSet {
  double fisher_x = 0.0;
  double fisher_p = 0.0;
  double fisher_net = 0.0;
  double shannon_x = 0.0;
  double shannon_p = 0.0;
  double shannon_total = 0.0;
  double onicescu_x = 0.0;
  double onicescu_p = 0.0;
  double onicescu_net = 0.0;
  double os_x = 0.0;
  double os_p = 0.0;
  double os_net = 0.0;
  double sigma_x = 0.0;
  double sigma_p = 0.0;
};

struct Uncertainties {
  double sigma_x = 0.0;
  double sigma_p = 0.0;
};

// integral of (rho')^2 / rho; points with rho < 1e-15 * rho_peak contribute 0.
// Always integrated on Gauss-Legendre panels: equispaced Simpson nodes land
// exactly on the nodes of odd states, where the density guard flattens the
// integrand and stalls refinement.
double fisher(const StateFunctions& state, Space space,
              const QuadratureConfig& config = {});

// -integral of rho ln rho with the 0 ln 0 guard.
double shannon(const StateFunctions& state, Space space,
               const QuadratureConfig& config = {});

// integral of rho^2.
double onicescu(const StateFunctions& state, Space space,
                const QuadratureConfig& config = {});

// exp((2/3) S_space) * E_space.
double onicescu_shannon(const StateFunctions& state, Space space,
                        const QuadratureConfig& config = {});

Uncertainties uncertainties(const StateFunctions& state,
                            const QuadratureConfig& config = {});

MeasureSet measure_set(const StateFunctions& state,
                       const QuadratureConfig& config = {});

}  // namespace dwell
