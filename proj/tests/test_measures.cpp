#include <doctest.h>

#include <cmath>

#include "dwell/measures.hpp"
#include "dwell/qho.hpp"

using namespace dwell;

namespace {

StateFunctions pure_state(int m, double gamma) {
  StateFunctions s;
  s.state_index = m;
  s.gamma = gamma;
  s.coeffs = Eigen::VectorXd::Zero(m + 1);
  s.coeffs(m) = 1.0;
  s.parity = (m % 2 == 0) ? Parity::Even : Parity::Odd;
  return s;
}

StateFunctions dw_state(double alpha, double beta, int n, int basis = 100) {
  PotentialSpec spec{alpha, beta, 2, 1, false};
  SolverConfig cfg;
  cfg.basis_size = basis;
  return state_functions(diagonalize(spec, cfg), n);
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("oscillator eigenstates reproduce every closed form") {
  for (double g : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (int n = 0; n <= 3; ++n) {
      auto s = pure_state(n, g);
      MeasureSet m = measure_set(s);
      struct Pair { QhoMeasureKind kind; double got; };
      const Pair pairs[] = {
          {QhoMeasureKind::FisherX, m.fisher_x},
          {QhoMeasureKind::FisherP, m.fisher_p},
          {QhoMeasureKind::FisherNet, m.fisher_net},
          {QhoMeasureKind::ShannonX, m.shannon_x},
          {QhoMeasureKind::ShannonP, m.shannon_p},
          {QhoMeasureKind::ShannonTotal, m.shannon_total},
          {QhoMeasureKind::OnicescuX, m.onicescu_x},
          {QhoMeasureKind::OnicescuP, m.onicescu_p},
          {QhoMeasureKind::OnicescuNet, m.onicescu_net},
          {QhoMeasureKind::OSX, m.os_x},
          {QhoMeasureKind::OSP, m.os_p},
          {QhoMeasureKind::OSNet, m.os_net},
      };
      for (const auto& [kind, got] : pairs) {
        double want = qho_measure(kind, g, n);
        double tol = qho_tolerance(kind, n);
        CHECK(std::abs(got - want) <= tol * std::max(std::abs(want), 1.0));
      }
    }
  }
}

TEST_CASE("oscillator uncertainty product is exactly the ladder value") {
  for (int n = 0; n <= 3; ++n) {
    auto u = uncertainties(pure_state(n, 0.25));
    CHECK(u.sigma_x * u.sigma_p ==
          doctest::Approx((2.0 * n + 1.0) / 2.0).epsilon(1e-9));
  }
}

TEST_CASE("parity states have zero mean in both spaces") {
  auto s = dw_state(1.0, 5.0, 1);
  for (Space space : {Space::Position, Space::Momentum}) {
    double r = support_radius(s, space);
    double mean = integrate(
        [&](double t) {
          return t * density_and_derivative(s, space, t).rho;
        },
        -r, r);
    CHECK(std::abs(mean) < 1e-10);
  }
}

TEST_CASE("fisher equals four times the conjugate variance for real states") {
  for (int n : {0, 1}) {
    auto s = dw_state(1.0, 5.0, n);
    MeasureSet m = measure_set(s);
    CHECK(m.fisher_x ==
          doctest::Approx(4.0 * m.sigma_p * m.sigma_p).epsilon(1e-6));
    CHECK(m.fisher_p ==
          doctest::Approx(4.0 * m.sigma_x * m.sigma_x).epsilon(1e-6));
  }
}

TEST_CASE("entropic uncertainty bound holds across the well family") {
  double bound = 1.0 + std::log(M_PI);
  for (double beta : {0.0, 2.0, 5.0, 10.0}) {
    for (int n = 0; n < 4; ++n) {
      auto s = dw_state(1.0, beta, n, 120);
      MeasureSet m = measure_set(s);
      CHECK(m.shannon_total >= bound - 1e-9);
      CHECK(m.sigma_x * m.sigma_p >= 0.5 - 1e-9);
      CHECK(m.onicescu_x > 0.0);
      CHECK(m.onicescu_p > 0.0);
    }
  }
}

TEST_CASE("position spread and the uncertainty product grow with beta") {
  double prev_sx = 0.0, prev_prod = 0.0;
  for (int i = 0; i <= 10; ++i) {
    double beta = static_cast<double>(i);
    auto u = uncertainties(dw_state(1.0, beta, 0, 120));
    if (i > 0) {
      CHECK(u.sigma_x > prev_sx);
      CHECK(u.sigma_x * u.sigma_p > prev_prod);
    }
    prev_sx = u.sigma_x;
    prev_prod = u.sigma_x * u.sigma_p;
  }
}

TEST_CASE("scaling the basis parameter shifts the entropies oppositely") {
  // Dilation x -> x/sqrt(c) adds -ln(c)/2 to S_x and +ln(c)/2 to S_p.
  double g = 0.7, c = 3.0;
  for (int n : {0, 2}) {
    MeasureSet a = measure_set(pure_state(n, g));
    MeasureSet b = measure_set(pure_state(n, c * g));
    CHECK(b.shannon_x ==
          doctest::Approx(a.shannon_x - 0.5 * std::log(c)).epsilon(1e-8));
    CHECK(b.shannon_p ==
          doctest::Approx(a.shannon_p + 0.5 * std::log(c)).epsilon(1e-8));
    CHECK(b.shannon_total == doctest::Approx(a.shannon_total).epsilon(1e-8));
  }
}

TEST_CASE("measure_set composes its parts consistently") {
  auto s = dw_state(1.0, 5.0, 0);
  MeasureSet m = measure_set(s);
  CHECK(m.fisher_net == doctest::Approx(m.fisher_x * m.fisher_p).epsilon(1e-12));
  CHECK(m.shannon_total ==
        doctest::Approx(m.shannon_x + m.shannon_p).epsilon(1e-12));
  CHECK(m.onicescu_net ==
        doctest::Approx(m.onicescu_x * m.onicescu_p).epsilon(1e-12));
  CHECK(m.os_x ==
        doctest::Approx(std::exp(2.0 * m.shannon_x / 3.0) * m.onicescu_x)
            .epsilon(1e-10));
  CHECK(m.os_net == doctest::Approx(m.os_x * m.os_p).epsilon(1e-10));

  // the standalone entry points agree with the batch
  CHECK(fisher(s, Space::Position) == doctest::Approx(m.fisher_x).epsilon(1e-10));
  CHECK(shannon(s, Space::Momentum) == doctest::Approx(m.shannon_p).epsilon(1e-10));
  CHECK(onicescu(s, Space::Position) ==
        doctest::Approx(m.onicescu_x).epsilon(1e-10));
  CHECK(onicescu_shannon(s, Space::Momentum) ==
        doctest::Approx(m.os_p).epsilon(1e-10));
}

TEST_CASE("well onicescu net plateau for the lowest doublet") {
  // two separated harmonic wells give E_net -> 3/(8 pi) = 0.11937; the curve
  // is stationary at that level from beta ~ 10 onward
  double e10 = measure_set(dw_state(1.0, 10.0, 0, 150)).onicescu_net;
  double e12 = measure_set(dw_state(1.0, 12.0, 0, 150)).onicescu_net;
  CHECK(std::abs(e10 - 0.1195) <= 0.002);
  CHECK(std::abs(e12 - 0.1195) <= 0.002);
  CHECK(std::abs(e12 - e10) < 5e-4);
  CHECK(std::abs(e12 - 3.0 / (8.0 * M_PI)) < 5e-4);
}

TEST_CASE("fisher integral survives the nodes of excited states") {
  // odd states put zeros of rho exactly where equispaced rules sample
  auto s = dw_state(1.0, 5.0, 3, 120);
  double fx = fisher(s, Space::Position);
  double fp = fisher(s, Space::Momentum);
  CHECK(std::isfinite(fx));
  CHECK(std::isfinite(fp));
  MeasureSet m = measure_set(s);
  CHECK(fx == doctest::Approx(4.0 * m.sigma_p * m.sigma_p).epsilon(1e-5));
  CHECK(fp == doctest::Approx(4.0 * m.sigma_x * m.sigma_x).epsilon(1e-5));
}

}  // TEST_SUITE
