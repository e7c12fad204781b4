#pragma once

namespace dwell {

enum class QhoMeasureKind {
  FisherX,
  FisherP,
  FisherNet,
  ShannonX,
  ShannonP,
  ShannonTotal,
  OnicescuX,
  OnicescuP,
  OnicescuNet,
  OSX,
  OSP,
  OSNet,
};

// Closed-form oscillator measures for n <= 3. Shannon constants for n >= 1
// are five-digit literals (0.77036, 0.92624, 1.03735); OS forms are composed
// from them so the factorization identities hold exactly. Comparisons against
// the numeric pipeline use 5e-5 where one of these literals enters, 1e-7
// elsewhere.
double qho_measure(QhoMeasureKind kind, double gamma, int n);

// Tolerance appropriate for comparing qho_measure(kind, ., n) with a
// numerically exact value.
double qho_tolerance(QhoMeasureKind kind, int n);

// E_n = 2 gamma (2n + 1) for H = -d2/dx2 + 4 gamma^2 x^2.
double qho_energy(double gamma, int n);

}  // namespace dwell
