#include "dwell/measures.hpp"

#include <cmath>

namespace dwell {

namespace {

double half_width(const StateFunctions& state, Space space,
                  const QuadratureConfig& config) {
  return support_radius(state, space) * config.domain_cut;
}

double density_peak(const StateFunctions& state, Space space, double r) {
  double peak = 0.0;
  for (int i = 0; i <= 512; ++i) {
    double t = -r + 2.0 * r * i / 512.0;
    peak = std::fmax(peak, density_and_derivative(state, space, t).rho);
  }
  return peak;
}

}  // namespace

double fisher(const StateFunctions& state, Space space,
              const QuadratureConfig& config) {
  QuadratureConfig c = config;
  c.rule = QuadratureRule::GaussLegendrePanels;
  double r = half_width(state, space, config);
  double floor = 1e-15 * density_peak(state, space, r);
  auto f = [&](double t) {
    DensityPoint d = density_and_derivative(state, space, t);
    if (d.rho < floor) return 0.0;
    return d.drho * d.drho / d.rho;
  };
  return integrate(f, -r, r, c);
}

double shannon(const StateFunctions& state, Space space,
               const QuadratureConfig& config) {
  double r = half_width(state, space, config);
  auto f = [&](double t) {
    return xlnx(density_and_derivative(state, space, t).rho);
  };
  return -integrate(f, -r, r, config);
}

double onicescu(const StateFunctions& state, Space space,
                const QuadratureConfig& config) {
  double r = half_width(state, space, config);
  auto f = [&](double t) {
    double rho = density_and_derivative(state, space, t).rho;
    return rho * rho;
  };
  return integrate(f, -r, r, config);
}

double onicescu_shannon(const StateFunctions& state, Space space,
                        const QuadratureConfig& config) {
  return std::exp(2.0 / 3.0 * shannon(state, space, config)) *
         onicescu(state, space, config);
}

Uncertainties uncertainties(const StateFunctions& state,
                            const QuadratureConfig& config) {
  Uncertainties out;
  for (Space space : {Space::Position, Space::Momentum}) {
    double r = half_width(state, space, config);
    auto moment = [&](int k) {
      return integrate(
          [&](double t) {
            double w = (k == 1) ? t : t * t;
            return w * density_and_derivative(state, space, t).rho;
          },
          -r, r, config);
    };
    double m1 = moment(1);
    double sigma = std::sqrt(moment(2) - m1 * m1);
    (space == Space::Position ? out.sigma_x : out.sigma_p) = sigma;
  }
  return out;
}

MeasureSet measure_set(const StateFunctions& state,
                       const QuadratureConfig& config) {
  MeasureSet m;
  m.fisher_x = fisher(state, Space::Position, config);
  m.fisher_p = fisher(state, Space::Momentum, config);
  m.fisher_net = m.fisher_x * m.fisher_p;
  m.shannon_x = shannon(state, Space::Position, config);
  m.shannon_p = shannon(state, Space::Momentum, config);
  m.shannon_total = m.shannon_x + m.shannon_p;
  m.onicescu_x = onicescu(state, Space::Position, config);
  m.onicescu_p = onicescu(state, Space::Momentum, config);
  m.onicescu_net = m.onicescu_x * m.onicescu_p;
  m.os_x = std::exp(2.0 / 3.0 * m.shannon_x) * m.onicescu_x;
  m.os_p = std::exp(2.0 / 3.0 * m.shannon_p) * m.onicescu_p;
  m.os_net = m.os_x * m.os_p;
  Uncertainties u = uncertainties(state, config);
  m.sigma_x = u.sigma_x;
  m.sigma_p = u.sigma_p;
  return m;
}

}  // namespace dwell
