#include "dwell/semiclassics.hpp"

#include <cmath>

#include "dwell/wavefunction.hpp"

namespace dwell {

namespace {

double state_energy(const PotentialSpec& spec, const Spectrum& spectrum,
                    int state_index) {
  if (spectrum.shift_included != spec.include_shift)
    throw InvalidSpecError(
        "semiclassics: spectrum and spec disagree on the energy shift");
  if (state_index < 0 || state_index >= spectrum.eigenvalues.size())
    throw UnsupportedStateError("semiclassics: state index out of range");
  return spectrum.eigenvalues(state_index);
}

}  // namespace

TunnelingResult tunneling_probability(const PotentialSpec& spec,
                                      const Spectrum& spectrum,
                                      int state_index,
                                      const QuadratureConfig& config) {
  double e = state_energy(spec, spectrum, state_index);
  TunnelingResult out;
  if (spec.beta == 0.0) return out;
  TurningPoints tp = turning_points(spec, e);
  if (!tp.inner) return out;
  double xm = *tp.inner;
  out.inner_tp = xm;
  if (xm == 0.0) return out;
  StateFunctions state = state_functions(spectrum, state_index);
  out.t_prob = integrate(
      [&](double x) {
        return density_and_derivative(state, Space::Position, x).rho;
      },
      -xm, xm, config);
  return out;
}

double phase_area(const PotentialSpec& spec, const Spectrum& spectrum,
                  int state_index, const QuadratureConfig& config) {
  double e = state_energy(spec, spectrum, state_index);
  TurningPoints tp = turning_points(spec, e);
  double lo = tp.inner ? *tp.inner : 0.0;
  auto f = [&](double x) {
    return std::sqrt(std::fmax(0.0, e - evaluate(spec, x)));
  };
  return integrate_sqrt_endpoint(f, lo, tp.outer, config);
}

PhaseContour phase_contour(const PotentialSpec& spec, const Spectrum& spectrum,
                           int state_index, int samples) {
  if (samples < 2)
    throw InvalidSpecError("phase_contour: need at least 2 samples per lobe");
  double e = state_energy(spec, spectrum, state_index);
  TurningPoints tp = turning_points(spec, e);

  PhaseContour out;
  bool split = tp.inner && *tp.inner > 0.0;
  out.lobes = split ? 2 : 1;

  auto trace = [&](double lo, double hi, int lobe) {
    for (int i = 0; i < samples; ++i) {
      double x = lo + (hi - lo) * i / (samples - 1.0);
      double p = std::sqrt(std::fmax(0.0, e - evaluate(spec, x)));
      out.samples.push_back({x, p, -p, lobe});
    }
  };
  if (split) {
    trace(-tp.outer, -*tp.inner, 0);
    trace(*tp.inner, tp.outer, 1);
  } else {
    trace(-tp.outer, tp.outer, 0);
  }
  return out;
}

double tunneling_onset(double alpha, int state_index, double beta_lo,
                       double beta_hi, const SolverConfig& config) {
  // Unshifted eigenvalue crosses zero exactly where the state drops below
  // the barrier top.
  auto level = [&](double beta) {
    PotentialSpec spec;
    spec.alpha = alpha;
    spec.beta = beta;
    Spectrum s = diagonalize(spec, config);
    return s.eigenvalues(state_index);
  };
  double flo = level(beta_lo), fhi = level(beta_hi);
  if (!(flo > 0.0) || !(fhi < 0.0))
    throw InvalidSpecError("tunneling_onset: zero crossing not bracketed");
  double lo = beta_lo, hi = beta_hi;
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if (level(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace dwell
