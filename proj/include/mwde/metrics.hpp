#pragma once

#include <cstddef>
#include <vector>

namespace mwde {

// Uniform grid with both endpoints included; trapezoid quadrature.
struct QuadratureGrid {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 4096;

  double step() const {
    return (hi - lo) / static_cast<double>(points - 1);
  }
  double x_at(std::size_t i) const {
    return lo + step() * static_cast<double>(i);
  }
  std::vector<double> abscissae() const;
};

QuadratureGrid make_grid(double lo, double hi, std::size_t points = 4096);

double trapezoid(const std::vector<double>& values, double step);

// Trapezoid quadrature of (estimate - truth)^2 over the grid interval.
double ise(const std::vector<double>& estimate, const std::vector<double>& truth,
           const QuadratureGrid& grid);

// sqrt of the trapezoid integral of (f - g)^2.
double l2_distance(const std::vector<double>& f, const std::vector<double>& g,
                   const QuadratureGrid& grid);

}  // namespace mwde
