#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "mwde/multifilter.hpp"
#include "mwde/spline.hpp"

namespace mwde {

struct CascadeOptions {
  int depth = 10;       // dyadic grid spacing 2^-depth over the support
  int max_iters = 40;
  double tol = 1e-8;    // sup-norm of the successive-iterate difference
  bool build_psi = true;
};

// Dyadic-grid samples of the scaling vector (and the wavelet vector when
// highpass coefficients exist), plus cubic spline interpolants per component.
struct ScalingTable {
  Multifilter filter;
  int depth = 0;
  std::vector<std::vector<double>> phi;   // [component][node]
  std::vector<std::vector<double>> psi;   // empty without highpass taps
  std::vector<NaturalCubicSpline> phi_spline;
  std::vector<NaturalCubicSpline> psi_spline;
  double refinement_residual = 0.0;
  int iterations = 0;
  std::vector<double> defect_trace;       // successive-difference sup norms

  int multiplicity() const { return filter.multiplicity; }
  double step() const { return std::ldexp(1.0, -depth); }
  std::size_t nodes() const { return phi.front().size(); }
  double x_at(std::size_t n) const {
    return filter.support_lo + step() * static_cast<double>(n);
  }
  bool has_psi() const { return !psi.empty(); }
};

// Thrown when the iteration stops improving while still above tolerance;
// carries the per-iteration defect trace.
class CascadeError : public std::runtime_error {
 public:
  CascadeError(const std::string& message, std::vector<double> trace)
      : std::runtime_error(message), defect_trace(std::move(trace)) {}
  std::vector<double> defect_trace;
};

// Orthonormal piecewise-constant start: component i of the returned arrays is
// sqrt(r) on [(i-1)/r, i/r) and 0 elsewhere, laid out on the table grid. The
// unit cell sits at [0,1] when the support allows, else at the left end.
std::vector<std::vector<double>> cascade_initializer(int r, int depth,
                                                     int support_lo,
                                                     int support_hi);

// Fixed-point iteration of the refinement equation on a pre-allocated dyadic
// grid (two-grid update, no interpolation inside the loop). Converged tables
// get an amplitude correction so component masses match the right
// 1-eigenvector of sum_k H_k / sqrt(2); psi is computed in one pass from the
// converged phi. If max_iters runs out while the defect is still shrinking,
// the table is returned with the achieved residual recorded.
ScalingTable cascade(const Multifilter& filter, const CascadeOptions& options = {});

// max over integer shifts k and component pairs of
// 2^-depth * sum_n f_i(x_n) g_j(x_n - k) - delta_{0k} delta_{ij},
// covering phi/phi, psi/psi, and phi/psi pairs when psi exists.
double orthonormality_residual(const ScalingTable& table);

// CSV dump: header `x,phi_1..phi_r[,psi_1..psi_r]`, full-precision values.
void write_table_csv(const ScalingTable& table, std::ostream& out);

}  // namespace mwde
