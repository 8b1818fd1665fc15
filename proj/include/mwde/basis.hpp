#pragma once

#include <memory>
#include <utility>

#include <Eigen/Dense>

#include "mwde/cascade.hpp"

namespace mwde {

// A concrete basis {phi_{j,k}}: a converged table, a resolution level, and
// the translate range needed to span a domain.
struct BasisSpec {
  std::shared_ptr<const ScalingTable> table;
  int level = 0;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  int k_min = 0;
  int k_max = 0;
  double level_scale = 1.0;  // 2^{level/2}

  int multiplicity() const { return table->multiplicity(); }
  int translate_count() const { return k_max - k_min + 1; }
  int coefficient_count() const { return multiplicity() * translate_count(); }
};

// Every integer k whose dilated support [(l+k)/2^j, (u+k)/2^j] intersects
// [a, b] as closed intervals: k_min = ceil(2^j a - u), k_max = floor(2^j b - l).
std::pair<int, int> translate_range(int support_lo, int support_hi, int level,
                                    double domain_lo, double domain_hi);

BasisSpec make_basis(std::shared_ptr<const ScalingTable> table, int level,
                     double domain_lo, double domain_hi);

// 2^{j/2} phi_component(2^j x - k); exactly 0 outside the dilated support.
// Components are indexed from 0.
double evaluate(const BasisSpec& spec, int component, int k, double x);

// Same for the wavelet component psi; requires a table built with highpass.
double evaluate_detail(const BasisSpec& spec, int component, int k, double x);

// Stacks evaluate over all components.
Eigen::VectorXd evaluate_vector(const BasisSpec& spec, int k, double x);

}  // namespace mwde
