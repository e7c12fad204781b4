#include "dwell/qho.hpp"

#include <cmath>
#include <numbers>

#include "dwell/errors.hpp"

namespace dwell {

namespace {

// Shannon constants c_n in S_x = c_n + ln(pi/(2 gamma))/2; n = 0 is exact,
// the rest are five-digit literals.
constexpr double kShannonC[4] = {0.5, 0.77036, 0.92624, 1.03735};
// Onicescu prefactors: E_x = a_n sqrt(gamma/pi), E_p = b_n / sqrt(gamma pi).
constexpr double kOnicescuA[4] = {1.0, 3.0 / 4.0, 41.0 / 64.0, 147.0 / 256.0};
constexpr double kOnicescuB[4] = {0.5, 3.0 / 8.0, 41.0 / 128.0, 147.0 / 512.0};

void check(double gamma, int n) {
  if (!(gamma > 0.0)) throw InvalidSpecError("qho: gamma must be > 0");
  if (n < 0 || n > 3)
    throw UnsupportedStateError("qho: closed forms exist only for n <= 3");
}

}  // namespace

double qho_measure(QhoMeasureKind kind, double gamma, int n) {
  check(gamma, n);
  const double pi = std::numbers::pi;
  double c = kShannonC[n];
  double a = kOnicescuA[n];
  double b = kOnicescuB[n];
  switch (kind) {
    case QhoMeasureKind::FisherX:
      return 4.0 * gamma * (2.0 * n + 1.0);
    case QhoMeasureKind::FisherP:
      return (2.0 * n + 1.0) / gamma;
    case QhoMeasureKind::FisherNet:
      return 4.0 * (2.0 * n + 1.0) * (2.0 * n + 1.0);
    case QhoMeasureKind::ShannonX:
      return c + 0.5 * std::log(pi / (2.0 * gamma));
    case QhoMeasureKind::ShannonP:
      return c + 0.5 * std::log(2.0 * pi * gamma);
    case QhoMeasureKind::ShannonTotal:
      return 2.0 * c + std::log(pi);
    case QhoMeasureKind::OnicescuX:
      return a * std::sqrt(gamma / pi);
    case QhoMeasureKind::OnicescuP:
      return b / std::sqrt(gamma * pi);
    case QhoMeasureKind::OnicescuNet:
      return a * b / pi;
    case QhoMeasureKind::OSX:
      return std::exp(2.0 / 3.0 *
                      qho_measure(QhoMeasureKind::ShannonX, gamma, n)) *
             a * std::sqrt(gamma / pi);
    case QhoMeasureKind::OSP:
      return std::exp(2.0 / 3.0 *
                      qho_measure(QhoMeasureKind::ShannonP, gamma, n)) *
             b / std::sqrt(gamma * pi);
    case QhoMeasureKind::OSNet:
      return qho_measure(QhoMeasureKind::OSX, gamma, n) *
             qho_measure(QhoMeasureKind::OSP, gamma, n);
  }
  throw InvalidSpecError("qho: unknown measure kind");
}

double qho_tolerance(QhoMeasureKind kind, int n) {
  if (n == 0) return 1e-7;
  switch (kind) {
    case QhoMeasureKind::ShannonX:
    case QhoMeasureKind::ShannonP:
    case QhoMeasureKind::ShannonTotal:
    case QhoMeasureKind::OSX:
    case QhoMeasureKind::OSP:
    case QhoMeasureKind::OSNet:
      return 5e-5;  // a five-digit literal enters these
    default:
      return 1e-7;
  }
}

double qho_energy(double gamma, int n) {
  if (!(gamma > 0.0)) throw InvalidSpecError("qho: gamma must be > 0");
  if (n < 0) throw UnsupportedStateError("qho: n must be >= 0");
  return 2.0 * gamma * (2.0 * n + 1.0);
}

}  // namespace dwell
