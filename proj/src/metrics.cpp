#include "mwde/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mwde {

std::vector<double> QuadratureGrid::abscissae() const {
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i) xs[i] = x_at(i);
  return xs;
}

QuadratureGrid make_grid(double lo, double hi, std::size_t points) {
  if (!(lo < hi)) throw std::invalid_argument("grid: lo must be below hi");
  if (points < 2) throw std::invalid_argument("grid: needs at least two points");
  return {lo, hi, points};
}

double trapezoid(const std::vector<double>& values, double step) {
  if (values.size() < 2)
    throw std::invalid_argument("trapezoid: needs at least two values");
  double acc = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) acc += values[i];
  return acc * step;
}

namespace {

double squared_difference_integral(const std::vector<double>& a,
                                   const std::vector<double>& b,
                                   const QuadratureGrid& grid) {
  if (a.size() != b.size() || a.size() != grid.points)
    throw std::invalid_argument("quadrature: mismatched grid lengths");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 : 1.0;
    acc += w * d * d;
  }
  return acc * grid.step();
}

}  // namespace

double ise(const std::vector<double>& estimate, const std::vector<double>& truth,
           const QuadratureGrid& grid) {
  return squared_difference_integral(estimate, truth, grid);
}

double l2_distance(const std::vector<double>& f, const std::vector<double>& g,
                   const QuadratureGrid& grid) {
  return std::sqrt(squared_difference_integral(f, g, grid));
}

}  // namespace mwde
