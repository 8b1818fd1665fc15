#include "mwde/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace mwde {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Right eigenvector of sum_k H_k / sqrt(2) for eigenvalue 1, unit length,
// positive component sum. Component masses of an orthonormal scaling vector
// equal this vector, which pins the overall amplitude of the fixed point.
bool mass_eigenvector(const Multifilter& f, Eigen::VectorXd& out) {
  const int r = f.multiplicity;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(r, r);
  for (const auto& h : f.lowpass) a += h;
  a /= kSqrt2;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  int best = -1;
  double best_gap = 1e-8;
  for (int i = 0; i < r; ++i) {
    const double gap = std::abs(solver.eigenvalues()[i] - std::complex<double>(1.0, 0.0));
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best < 0) return false;
  Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  const double norm = v.norm();
  if (norm == 0.0) return false;
  v /= norm;
  if (v.sum() < 0.0) v = -v;
  out = v;
  return true;
}

std::vector<std::vector<double>> apply_refinement(
    const Multifilter& f, const std::vector<std::vector<double>>& old_values,
    const std::vector<Eigen::MatrixXd>& taps, int depth) {
  const int r = f.multiplicity;
  const std::ptrdiff_t nodes = static_cast<std::ptrdiff_t>(old_values.front().size());
  const std::ptrdiff_t span = std::ptrdiff_t{1} << depth;
  // sqrt(2)*H_k computed as (2*H_k)/sqrt(2): 2*h is exact, and for the haar
  // taps fl(sqrt(1/2)) the quotient is exactly 1, which keeps indicator
  // fixed points bit-for-bit.
  std::vector<Eigen::MatrixXd> scaled(taps.size());
  for (std::size_t k = 0; k < taps.size(); ++k)
    scaled[k] = 2.0 * taps[k] / kSqrt2;
  std::vector<std::vector<double>> next(r, std::vector<double>(nodes, 0.0));
  for (std::ptrdiff_t n = 0; n < nodes; ++n) {
    for (int k = 0; k < static_cast<int>(scaled.size()); ++k) {
      const std::ptrdiff_t src = 2 * n - static_cast<std::ptrdiff_t>(k) * span;
      if (src < 0 || src >= nodes) continue;
      const Eigen::MatrixXd& m = scaled[k];
      for (int i = 0; i < r; ++i) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) acc += m(i, j) * old_values[j][src];
        next[i][n] += acc;
      }
    }
  }
  return next;
}

double sup_difference(const std::vector<std::vector<double>>& a,
                      const std::vector<std::vector<double>>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t n = 0; n < a[i].size(); ++n)
      worst = std::max(worst, std::abs(a[i][n] - b[i][n]));
  return worst;
}

double riemann_inner(const std::vector<double>& f, const std::vector<double>& g,
                     std::ptrdiff_t lag, double step) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  double acc = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t j = i - lag;
    if (j < 0 || j >= n) continue;
    acc += f[i] * g[j];
  }
  return acc * step;
}

}  // namespace

std::vector<std::vector<double>> cascade_initializer(int r, int depth,
                                                     int support_lo,
                                                     int support_hi) {
  if (r < 1) throw std::invalid_argument("initializer: multiplicity must be >= 1");
  if (support_hi - support_lo < 1)
    throw std::invalid_argument("initializer: support shorter than the unit cell");
  const std::size_t span = std::size_t{1} << depth;
  const std::size_t nodes = static_cast<std::size_t>(support_hi - support_lo) * span + 1;
  const int cell_lo = (support_lo <= 0 && support_hi >= 1) ? 0 : support_lo;
  const std::size_t offset = static_cast<std::size_t>(cell_lo - support_lo) * span;
  const double height = std::sqrt(static_cast<double>(r));
  std::vector<std::vector<double>> phi(r, std::vector<double>(nodes, 0.0));
  for (int i = 0; i < r; ++i) {
    // Half-open block [(i-1)/r, i/r); block boundaries are grid nodes only
    // when r divides 2^depth, otherwise they are rounded down.
    const std::size_t lo = offset + (static_cast<std::size_t>(i) * span) / r;
    const std::size_t hi = offset + (static_cast<std::size_t>(i + 1) * span) / r;
    for (std::size_t n = lo; n < hi && n < nodes; ++n) phi[i][n] = height;
  }
  return phi;
}

ScalingTable cascade(const Multifilter& filter, const CascadeOptions& options) {
  validate_filter(filter);
  if (options.depth < 4)
    throw std::invalid_argument("cascade: depth must be at least 4");
  if (!(options.tol > 0.0))
    throw std::invalid_argument("cascade: tolerance must be positive");
  if (options.max_iters < 1)
    throw std::invalid_argument("cascade: max_iters must be at least 1");

  ScalingTable table;
  table.filter = filter;
  table.depth = options.depth;
  table.phi = cascade_initializer(filter.multiplicity, options.depth,
                                  filter.support_lo, filter.support_hi);

  double defect = std::numeric_limits<double>::infinity();
  double best = defect;
  int since_improvement = 0;
  // Block initializers need about one sweep per dyadic scale before the
  // defect starts to fall, so the stagnation patience scales with depth.
  const int patience = std::max(16, 2 * options.depth);
  for (int iter = 0; iter < options.max_iters; ++iter) {
    auto next = apply_refinement(filter, table.phi, filter.lowpass, options.depth);
    defect = sup_difference(next, table.phi);
    table.phi = std::move(next);
    table.defect_trace.push_back(defect);
    table.iterations = iter + 1;
    if (!std::isfinite(defect)) {
      std::ostringstream msg;
      msg << "cascade: " << filter.name << " diverged (non-finite defect at iteration "
          << table.iterations << ")";
      throw CascadeError(msg.str(), table.defect_trace);
    }
    if (defect <= options.tol) break;
    if (defect < best * (1.0 - 1e-3)) {
      best = defect;
      since_improvement = 0;
    } else if (++since_improvement >= patience) {
      std::ostringstream msg;
      msg << "cascade: " << filter.name << " stagnated at defect " << defect
          << " (tolerance " << options.tol << ") after " << table.iterations
          << " iterations";
      throw CascadeError(msg.str(), table.defect_trace);
    }
  }
  table.refinement_residual = defect;

  Eigen::VectorXd mass_target;
  if (mass_eigenvector(filter, mass_target)) {
    // The block initializer is orthonormal but its projection onto the
    // fixed-point direction need not have unit amplitude; rescale so the
    // component-mass vector of the table matches the eigenvector. Left
    // Riemann sums keep step-function families (haar) exact.
    const double step = table.step();
    double projection = 0.0;
    for (int i = 0; i < filter.multiplicity; ++i) {
      const auto& values = table.phi[i];
      double mass = 0.0;
      for (std::size_t n = 0; n + 1 < values.size(); ++n) mass += values[n];
      projection += mass * step * mass_target[i];
    }
    if (std::abs(projection - 1.0) > 1e-9 && projection != 0.0) {
      for (auto& component : table.phi)
        for (double& v : component) v /= projection;
    }
  }

  if (options.build_psi && filter.has_highpass())
    table.psi = apply_refinement(filter, table.phi, filter.highpass, options.depth);

  const double x0 = static_cast<double>(filter.support_lo);
  for (const auto& component : table.phi)
    table.phi_spline.emplace_back(x0, table.step(), component);
  for (const auto& component : table.psi)
    table.psi_spline.emplace_back(x0, table.step(), component);
  return table;
}

double orthonormality_residual(const ScalingTable& table) {
  const double step = table.step();
  const std::ptrdiff_t span = std::ptrdiff_t{1} << table.depth;
  const int max_lag = table.filter.support_length();
  const int r = table.multiplicity();
  double worst = 0.0;
  auto scan = [&](const std::vector<std::vector<double>>& a,
                  const std::vector<std::vector<double>>& b, bool want_identity) {
    for (int lag = -max_lag; lag <= max_lag; ++lag)
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          const double target = (want_identity && lag == 0 && i == j) ? 1.0 : 0.0;
          const double value = riemann_inner(a[i], b[j], lag * span, step);
          worst = std::max(worst, std::abs(value - target));
        }
  };
  scan(table.phi, table.phi, true);
  if (table.has_psi()) {
    scan(table.psi, table.psi, true);
    scan(table.phi, table.psi, false);
  }
  return worst;
}

void write_table_csv(const ScalingTable& table, std::ostream& out) {
  const int r = table.multiplicity();
  out << "x";
  for (int i = 1; i <= r; ++i) out << ",phi_" << i;
  if (table.has_psi())
    for (int i = 1; i <= r; ++i) out << ",psi_" << i;
  out << "\n";
  char buf[64];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
  };
  for (std::size_t n = 0; n < table.nodes(); ++n) {
    emit(table.x_at(n));
    for (int i = 0; i < r; ++i) {
      out << ",";
      emit(table.phi[i][n]);
    }
    if (table.has_psi())
      for (int i = 0; i < r; ++i) {
        out << ",";
        emit(table.psi[i][n]);
      }
    out << "\n";
  }
}

}  // namespace mwde
