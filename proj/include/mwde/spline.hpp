#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mwde {

// Natural cubic spline through samples on a uniform grid (second derivative
// zero at both endpoints). Evaluation outside the node range returns 0.
class NaturalCubicSpline {
 public:
  NaturalCubicSpline() = default;

  NaturalCubicSpline(double x0, double step, std::vector<double> values)
      : x0_(x0), step_(step), y_(std::move(values)) {
    if (step_ <= 0.0) throw std::invalid_argument("spline: step must be positive");
    const std::size_t n = y_.size();
    if (n < 2) throw std::invalid_argument("spline: needs at least two samples");
    m_.assign(n, 0.0);
    if (n > 2) {
      // Thomas algorithm for the [1 4 1] system on second derivatives.
      const std::size_t interior = n - 2;
      std::vector<double> diag(interior, 4.0), rhs(interior);
      const double scale = 6.0 / (step_ * step_);
      for (std::size_t i = 0; i < interior; ++i)
        rhs[i] = scale * (y_[i + 2] - 2.0 * y_[i + 1] + y_[i]);
      for (std::size_t i = 1; i < interior; ++i) {
        const double w = 1.0 / diag[i - 1];
        diag[i] -= w;
        rhs[i] -= w * rhs[i - 1];
      }
      for (std::size_t i = interior; i-- > 0;) {
        const double upper = (i + 1 < interior) ? m_[i + 2] : 0.0;
        m_[i + 1] = (rhs[i] - upper) / diag[i];
      }
    }
  }

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + step_ * static_cast<double>(y_.size() - 1); }

  double operator()(double x) const {
    const double rel = (x - x0_) / step_;
    if (rel < 0.0 || rel > static_cast<double>(y_.size() - 1)) return 0.0;
    std::size_t i = static_cast<std::size_t>(rel);
    if (i >= y_.size() - 1) i = y_.size() - 2;
    const double t = rel - static_cast<double>(i);
    const double u = 1.0 - t;
    const double h2 = step_ * step_ / 6.0;
    return u * y_[i] + t * y_[i + 1] +
           h2 * ((u * u * u - u) * m_[i] + (t * t * t - t) * m_[i + 1]);
  }

 private:
  double x0_ = 0.0;
  double step_ = 1.0;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the nodes
};

}  // namespace mwde
