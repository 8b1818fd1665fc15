#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mwde/basis.hpp"
#include "mwde/metrics.hpp"

namespace mwde {

struct CoefficientSet {
  std::map<int, Eigen::VectorXd> alpha;                // translate k -> r-vector
  std::map<int, std::map<int, Eigen::VectorXd>> beta;  // level j -> k -> r-vector
  std::size_t sample_size = 0;
};

struct NormalizationDiagnostics {
  double raw_mass = 0.0;
  double negative_mass_removed = 0.0;
  double final_mass = 0.0;
  int sweeps = 0;
};

// Raw coefficients are always retained; normalization produces a corrected
// grid view and records its diagnostics here.
struct DensityEstimate {
  BasisSpec spec;
  int detail_levels = 0;  // psi levels j0 .. j0 + detail_levels - 1
  CoefficientSet coefficients;
  bool normalized = false;
  NormalizationDiagnostics normalization;
};

// Sample means of basis evaluations: alpha_k = (1/N) sum_i phi_{j0,k}(X_i),
// beta analogous per detail level. The parallel version accumulates fixed
// 4096-sample chunks that are reduced in chunk order, so results do not
// depend on the thread count. Throws on an empty sample and on any sample
// outside the basis domain (the message names the offending value).
CoefficientSet estimate_coefficients(const BasisSpec& spec,
                                     std::span<const double> samples,
                                     int detail_levels = 0);

// Plain loop in sample order; reference implementation for the tests.
CoefficientSet estimate_coefficients_serial(const BasisSpec& spec,
                                            std::span<const double> samples,
                                            int detail_levels = 0);

DensityEstimate make_estimate(const BasisSpec& spec,
                              std::span<const double> samples,
                              int detail_levels = 0);

// Series evaluation p_hat on the grid from the raw coefficients.
std::vector<double> reconstruct(const DensityEstimate& estimate,
                                const QuadratureGrid& grid);

// Projects the grid values onto {p >= 0, trapezoid mass = 1} in the L2 sense:
// shifts every value by a common constant and clips at zero, so the result is
// never farther from any valid density than the input was. Throws
// std::runtime_error when the estimate is non-positive everywhere. Operates
// in place; a valid input is returned untouched.
NormalizationDiagnostics normalize_values(std::vector<double>& values,
                                          const QuadratureGrid& grid);

// Reconstructs, normalizes the grid view, and stores the diagnostics on the
// returned estimate; `values` receives the corrected grid representation.
DensityEstimate normalize(const DensityEstimate& estimate,
                          const QuadratureGrid& grid,
                          std::vector<double>& values);

// CSV rows `x,p_hat` plus a JSON sidecar carrying the spec, coefficient
// count, normalization diagnostics, and the full coefficient list.
void write_estimate_csv(const QuadratureGrid& grid,
                        const std::vector<double>& values, std::ostream& out);
std::string estimate_sidecar_json(const DensityEstimate& estimate);

}  // namespace mwde
