#pragma once

#include <Eigen/Core>
#include <vector>

#include "dwell/errors.hpp"
#include "dwell/potential.hpp"

namespace dwell {

enum class GammaMode {
  FullBasis,    // cubic with C = (2N^2+4N+3)/(N+1)
  EvenParity,   // C = 2N+1
  OddParity,    // C = 2N+3
  Manual,       // take SolverConfig::manual_gamma as-is
};

enum class Parity { Even, Odd };

struct SolverConfig {
  int basis_size = 100;
  GammaMode gamma_mode = GammaMode::FullBasis;
  // Extra rows used while forming operator powers; truncating X before
  // powering corrupts the last rows, padding keeps the retained N x N block
  // exact. -1 means the default 2*n_exp.
  int pad = -1;
  double manual_gamma = 0.0;
};

struct Spectrum {
  double gamma = 0.0;
  Eigen::VectorXd eigenvalues;    // ascending, length N
  Eigen::MatrixXd coefficients;   // column n = b_m^n, orthonormal
  std::vector<Parity> parities;   // parity of each column
  bool shift_included = false;
};

// Unique positive root of 8 g^3 + 2 beta g - alpha C(N) = 0 for the quartic
// double well; numeric trace minimization for other exponent pairs.
double solve_gamma(const PotentialSpec& spec, const SolverConfig& config = {});

// H = P^2 + alpha X^(2n) - beta X^(2m) (+ h I when shifted) in the scaled
// number basis x = (a + a^t)/(2 sqrt(gamma)), p = i sqrt(gamma) (a^t - a).
Eigen::MatrixXd build_hamiltonian(const PotentialSpec& spec, double gamma,
                                  const SolverConfig& config = {});

// Parity blocks are diagonalized separately and merged; deep-well doublets
// are quasi-degenerate and a full-matrix eigensolver would mix the pair.
Spectrum diagonalize(const PotentialSpec& spec, const SolverConfig& config = {});

// Index into the merged spectrum of the k-th state (0-based) of one parity.
int nth_state_of_parity(const Spectrum& spectrum, Parity parity, int k);

}  // namespace dwell
