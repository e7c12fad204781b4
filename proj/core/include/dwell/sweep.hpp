#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwell/measures.hpp"

namespace dwell {

enum class SweepFormat { CSV, JSON };

struct BetaGrid {
  double start = 0.0;
  double stop = 10.0;
  double step = 0.25;
};

// Measure families: fisher, shannon, onicescu, os, sigma, tunneling, area.
// Output columns follow that canonical order regardless of request order.
struct SweepSpec {
  std::vector<double> alpha_values{1.0};
  BetaGrid beta_grid;
  std::vector<int> states{0, 1};
  std::vector<std::string> measures{"shannon"};
  std::string output_path;
  SweepFormat format = SweepFormat::CSV;
  int basis_size = 150;
  int threads = 0;           // 0: hardware concurrency
  double noise_eps = 1e-6;   // derivative sign threshold for extrema
  QuadratureConfig quad;
};

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  int state = 0;
  std::vector<double> values;
};

struct SweepResult {
  std::vector<std::string> columns;  // value columns after alpha,beta,state
  std::vector<SweepRow> rows;        // sorted by (alpha, beta, state)
};

enum class ExtremumKind { Minimum, Maximum };
enum class Curve { X, P, Total };

struct Extremum {
  double beta = 0.0;
  ExtremumKind kind = ExtremumKind::Minimum;
  Curve curve = Curve::X;
  int order = 0;  // 0: extremum of the measure, 1: of its beta-derivative
};

struct DerivativeReport {
  std::vector<double> beta_grid;
  std::vector<double> d_x;
  std::vector<double> d_p;
  std::vector<double> d_total;
  std::vector<Extremum> extrema;
};

struct ExtremaConfig {
  BetaGrid grid{0.0, 20.0, 0.25};
  std::vector<int> states{0, 1, 2, 3};
  int basis_size = 150;
  double noise_eps = 1e-6;
  int threads = 0;
};

struct ExtremaRow {
  double alpha = 0.0;
  int state = 0;
  std::vector<Extremum> onicescu_x;
  std::vector<Extremum> onicescu_p;
};

// Computes one row per (alpha, beta, state); writes output_path when set
// (whole file or nothing). Beta points run on a worker pool; rows come back
// sorted, so output does not depend on scheduling.
SweepResult run_sweep(const SweepSpec& spec);

// Central differences of one measure family against beta (one alpha, one
// state). Extrema of both the measure (order 0) and its derivative (order 1)
// are located by sign changes, ignoring |d| < noise_eps.
DerivativeReport run_derivatives(const SweepSpec& spec,
                                 const std::string& measure);

// Sign-change extremum detection on a sampled series. Steps with
// |difference| <= eps count as flat and extend the previous run; an extremum
// is reported at the midpoint grid index of the flat stretch between two
// opposite-signed runs.
std::vector<Extremum> find_extrema(const std::vector<double>& betas,
                                   const std::vector<double>& values,
                                   double eps, Curve curve, int order);

// Extremum beta locations of onicescu_x and onicescu_p per (alpha, state).
std::vector<ExtremaRow> report_extrema_table(
    const std::vector<double>& alpha_values, const ExtremaConfig& config = {});

// First beta at which |a - b| < tol holds for run_length consecutive grid
// points; series are aligned with betas.
std::optional<double> merge_point(const std::vector<double>& betas,
                                  const std::vector<double>& a,
                                  const std::vector<double>& b,
                                  double tol = 1e-3, int run_length = 3);

}  // namespace dwell
