#include "dwell/potential.hpp"

#include <cmath>
#include <limits>

namespace dwell {

void validate(const PotentialSpec& spec) {
  if (!(spec.alpha > 0.0)) throw InvalidSpecError("potential: alpha must be > 0");
  if (!(spec.beta >= 0.0)) throw InvalidSpecError("potential: beta must be >= 0");
  if (spec.m_exp < 1 || spec.n_exp <= spec.m_exp)
    throw InvalidSpecError("potential: exponents must satisfy n_exp > m_exp >= 1");
}

static double power_even(double x, int half_exp) {
  // x^(2k) via the square, exact for the sign and cheap for small k
  double x2 = x * x;
  double r = 1.0;
  for (int i = 0; i < half_exp; ++i) r *= x2;
  return r;
}

WellGeometry well_geometry(const PotentialSpec& spec) {
  validate(spec);
  if (spec.beta == 0.0) return {0.0, 0.0};
  if (spec.n_exp == 2 && spec.m_exp == 1) {
    double x0 = std::sqrt(spec.beta / (2.0 * spec.alpha));
    double h = spec.beta * spec.beta / (4.0 * spec.alpha);
    return {x0, h};
  }
  // General minimum: d/dx [a x^(2n) - b x^(2m)] = 0 at
  // x^(2(n-m)) = (m b)/(n a).
  double n = spec.n_exp, m = spec.m_exp;
  double x0 = std::pow(m * spec.beta / (n * spec.alpha), 1.0 / (2.0 * (n - m)));
  double vmin = spec.alpha * power_even(x0, spec.n_exp) -
                spec.beta * power_even(x0, spec.m_exp);
  return {x0, -vmin};
}

double evaluate(const PotentialSpec& spec, double x) {
  validate(spec);
  double v = spec.alpha * power_even(x, spec.n_exp) -
             spec.beta * power_even(x, spec.m_exp);
  if (spec.include_shift) v += well_geometry(spec).h;
  return v;
}

// Bisection on f over [lo, hi] with f(lo), f(hi) of opposite sign.
static double bisect(const PotentialSpec& spec, double target, double lo,
                     double hi) {
  auto f = [&](double x) { return evaluate(spec, x) - target; };
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-14 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

TurningPoints turning_points(const PotentialSpec& spec, double energy,
                             bool require_inner) {
  validate(spec);
  WellGeometry geo = well_geometry(spec);
  // Normalize to the shifted convention: wells at 0, barrier top at h.
  double e = spec.include_shift ? energy : energy + geo.h;
  if (e < -1e-12 * (1.0 + geo.h))
    throw EnergyBelowMinimumError("turning_points: energy below min V");
  if (e < 0.0) e = 0.0;
  if (require_inner && spec.beta == 0.0)
    throw NoBarrierError("turning_points: no inner turning point when beta = 0");

  if (spec.n_exp == 2 && spec.m_exp == 1) {
    // alpha x^4 - beta x^2 + h = e  =>  x^2 = (beta +- 2 sqrt(alpha e)) / (2 alpha)
    double s = 2.0 * std::sqrt(spec.alpha * e);
    TurningPoints tp;
    tp.outer = std::sqrt((spec.beta + s) / (2.0 * spec.alpha));
    if (spec.beta > 0.0 && s <= spec.beta)
      tp.inner = std::sqrt((spec.beta - s) / (2.0 * spec.alpha));
    return tp;
  }

  // General exponents: the shifted potential decreases from h at x = 0 to 0 at
  // x0, then increases without bound.
  PotentialSpec shifted = spec;
  shifted.include_shift = true;
  TurningPoints tp;
  double hi = std::fmax(geo.x0, 1.0);
  while (evaluate(shifted, hi) < e) hi *= 2.0;
  tp.outer = bisect(shifted, e, geo.x0, hi);
  if (spec.beta > 0.0 && e <= geo.h)
    tp.inner = bisect(shifted, e, 0.0, geo.x0);
  return tp;
}

}  // namespace dwell
