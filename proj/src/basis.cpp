#include "mwde/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace mwde {

std::pair<int, int> translate_range(int support_lo, int support_hi, int level,
                                    double domain_lo, double domain_hi) {
  if (!(domain_lo < domain_hi))
    throw std::invalid_argument("translate_range: domain must satisfy a < b");
  const double scaled_lo = std::ldexp(domain_lo, level);
  const double scaled_hi = std::ldexp(domain_hi, level);
  const int k_min = static_cast<int>(std::ceil(scaled_lo - support_hi));
  const int k_max = static_cast<int>(std::floor(scaled_hi - support_lo));
  return {k_min, k_max};
}

BasisSpec make_basis(std::shared_ptr<const ScalingTable> table, int level,
                     double domain_lo, double domain_hi) {
  if (!table) throw std::invalid_argument("make_basis: null table");
  if (level < -30 || level > 30)
    throw std::invalid_argument("make_basis: unreasonable resolution level");
  BasisSpec spec;
  spec.table = std::move(table);
  spec.level = level;
  spec.domain_lo = domain_lo;
  spec.domain_hi = domain_hi;
  auto range = translate_range(spec.table->filter.support_lo,
                               spec.table->filter.support_hi, level, domain_lo,
                               domain_hi);
  spec.k_min = range.first;
  spec.k_max = range.second;
  spec.level_scale = std::sqrt(std::ldexp(1.0, level));
  return spec;
}

namespace {

inline double eval_component(const BasisSpec& spec,
                             const NaturalCubicSpline& spline, int k, double x) {
  const double y = std::ldexp(x, spec.level) - static_cast<double>(k);
  const auto& f = spec.table->filter;
  if (y < f.support_lo || y > f.support_hi) return 0.0;
  return spec.level_scale * spline(y);
}

}  // namespace

double evaluate(const BasisSpec& spec, int component, int k, double x) {
  return eval_component(spec, spec.table->phi_spline[component], k, x);
}

double evaluate_detail(const BasisSpec& spec, int component, int k, double x) {
  if (!spec.table->has_psi())
    throw std::logic_error("evaluate_detail: table has no wavelet components");
  return eval_component(spec, spec.table->psi_spline[component], k, x);
}

Eigen::VectorXd evaluate_vector(const BasisSpec& spec, int k, double x) {
  const int r = spec.multiplicity();
  Eigen::VectorXd out(r);
  for (int i = 0; i < r; ++i) out[i] = evaluate(spec, i, k, x);
  return out;
}

}  // namespace mwde
