#pragma once

#include <functional>

#include "dwell/errors.hpp"

namespace dwell {

enum class QuadratureRule {
  CompositeSimpson,
  GaussLegendrePanels,
};

struct QuadratureConfig {
  QuadratureRule rule = QuadratureRule::GaussLegendrePanels;
  int panels = 16;             // initial panel count, doubled per refinement
  double abs_tol = 1e-11;
  double rel_tol = 1e-9;
  double domain_cut = 1.2;     // multiplier on the basis support radius
  int max_refinements = 20;
};

// Integrates f over [a, b], doubling the panel count until two successive
// estimates agree to max(abs_tol, rel_tol * |value|). Throws
// NonConvergentError (carrying the last two estimates) if the cap is hit.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& config = {});

// Integrates f over [a, b] where f behaves like sqrt(distance) near one or
// both endpoints. Substitutes x = a + (b-a) sin^2(theta), which regularizes
// the square-root vanishing, then applies the configured rule in theta.
double integrate_sqrt_endpoint(const std::function<double(double)>& f,
                               double a, double b,
                               const QuadratureConfig& config = {});

// x * ln(x) extended continuously by 0 at x = 0; used for entropy integrands.
double xlnx(double x);

}  // namespace dwell
