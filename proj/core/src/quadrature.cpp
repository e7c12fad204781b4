#include "dwell/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace dwell {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on P_16. Machine-precision accurate and avoids a table of
// transcribed literals.
struct GaussRule {
  std::vector<double> x, w;
  GaussRule() {
    constexpr int n = 16;
    x.resize(n);
    w.resize(n);
    for (int k = 0; k < n / 2; ++k) {
      double t = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
      double p0, p1;
      for (int it = 0; it < 100; ++it) {
        p0 = 1.0;
        p1 = t;
        for (int j = 2; j <= n; ++j) {
          double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::fabs(dt) < 1e-16) break;
      }
      p0 = 1.0;
      p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      x[k] = -t;
      x[n - 1 - k] = t;
      w[k] = w[n - 1 - k] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const GaussRule& gauss16() {
  static const GaussRule rule;
  return rule;
}

double gauss_panels(const std::function<double(double)>& f, double a, double b,
                    int panels) {
  const GaussRule& g = gauss16();
  double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + 0.5 * h;
    double sum = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i)
      sum += g.w[i] * f(mid + 0.5 * h * g.x[i]);
    total += 0.5 * h * sum;
  }
  return total;
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int panels) {
  // 2*panels subintervals so the panel count doubles cleanly
  int n = 2 * panels;
  double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i)
    sum += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double apply_rule(const std::function<double(double)>& f, double a, double b,
                  const QuadratureConfig& config, int panels) {
  if (config.rule == QuadratureRule::CompositeSimpson)
    return simpson(f, a, b, panels);
  return gauss_panels(f, a, b, panels);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& config) {
  if (config.panels < 8)
    throw InvalidSpecError("quadrature: panels must be >= 8");
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (!(config.abs_tol > kEps) || !(config.rel_tol > kEps))
    throw InvalidSpecError("quadrature: tolerances must exceed machine epsilon");
  if (!(config.domain_cut > 0.0))
    throw InvalidSpecError("quadrature: domain_cut must be positive");
  if (!(b > a)) return 0.0;
  int panels = config.panels;
  double prev = apply_rule(f, a, b, config, panels);
  for (int r = 0; r < config.max_refinements; ++r) {
    panels *= 2;
    double cur = apply_rule(f, a, b, config, panels);
    double tol = std::fmax(config.abs_tol, config.rel_tol * std::fabs(cur));
    if (std::fabs(cur - prev) < tol) return cur;
    prev = cur;
  }
  double last = apply_rule(f, a, b, config, panels * 2);
  throw NonConvergentError("quadrature: refinement cap reached", last, prev);
}

double integrate_sqrt_endpoint(const std::function<double(double)>& f,
                               double a, double b,
                               const QuadratureConfig& config) {
  if (!(b > a)) return 0.0;
  double len = b - a;
  auto g = [&](double theta) {
    double s = std::sin(theta);
    double x = a + len * s * s;
    if (x < a) x = a;
    if (x > b) x = b;
    return f(x) * len * std::sin(2.0 * theta);
  };
  return integrate(g, 0.0, 0.5 * std::numbers::pi, config);
}

double xlnx(double x) {
  if (x < 1e-300) return 0.0;
  return x * std::log(x);
}

}  // namespace dwell
