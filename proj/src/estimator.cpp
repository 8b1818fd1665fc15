#include "mwde/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mwde {
namespace {

constexpr std::size_t kChunk = 4096;

void check_samples(const BasisSpec& spec, std::span<const double> samples) {
  if (samples.empty())
    throw std::invalid_argument("estimate_coefficients: empty sample");
  for (double x : samples) {
    if (!(x >= spec.domain_lo && x <= spec.domain_hi)) {
      std::ostringstream msg;
      msg << "estimate_coefficients: sample value " << x
          << " lies outside the basis domain [" << spec.domain_lo << ", "
          << spec.domain_hi << "]";
      throw std::invalid_argument(msg.str());
    }
  }
}

// Covering translates of x at the spec level, clamped to the spec range.
inline std::pair<int, int> covering(const BasisSpec& spec, double x) {
  const auto& f = spec.table->filter;
  const double scaled = std::ldexp(x, spec.level);
  int lo = static_cast<int>(std::ceil(scaled - f.support_hi));
  int hi = static_cast<int>(std::floor(scaled - f.support_lo));
  lo = std::max(lo, spec.k_min);
  hi = std::min(hi, spec.k_max);
  return {lo, hi};
}

// Accumulates sum_i f_{j,k,c}(X_i) for one level into a flat array indexed
// (k - k_min) * r + c. `use_psi` switches between phi and psi evaluations.
void accumulate_serial(const BasisSpec& spec, bool use_psi,
                       std::span<const double> samples, std::vector<double>& acc) {
  const int r = spec.multiplicity();
  for (double x : samples) {
    const auto [klo, khi] = covering(spec, x);
    for (int k = klo; k <= khi; ++k) {
      double* cell = acc.data() + static_cast<std::size_t>(k - spec.k_min) * r;
      for (int c = 0; c < r; ++c)
        cell[c] += use_psi ? evaluate_detail(spec, c, k, x)
                           : evaluate(spec, c, k, x);
    }
  }
}

std::vector<double> accumulate_level(const BasisSpec& spec, bool use_psi,
                                     std::span<const double> samples,
                                     bool parallel) {
  const std::size_t width =
      static_cast<std::size_t>(spec.translate_count()) * spec.multiplicity();
  if (!parallel || samples.size() <= kChunk) {
    std::vector<double> acc(width, 0.0);
    accumulate_serial(spec, use_psi, samples, acc);
    return acc;
  }
  const std::size_t chunks = (samples.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    const std::size_t end = std::min(begin + kChunk, samples.size());
    partial[c].assign(width, 0.0);
    accumulate_serial(spec, use_psi, samples.subspan(begin, end - begin),
                      partial[c]);
  }
  std::vector<double> acc(width, 0.0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < width; ++i) acc[i] += p[i];
  return acc;
}

CoefficientSet estimate_impl(const BasisSpec& spec,
                             std::span<const double> samples, int detail_levels,
                             bool parallel) {
  check_samples(spec, samples);
  if (detail_levels < 0)
    throw std::invalid_argument("estimate_coefficients: negative detail level count");
  if (detail_levels > 0 && !spec.table->has_psi())
    throw std::invalid_argument(
        "estimate_coefficients: detail levels requested but the table has no "
        "wavelet components");

  CoefficientSet out;
  out.sample_size = samples.size();
  const int r = spec.multiplicity();
  const double inv_n = 1.0 / static_cast<double>(samples.size());

  const auto alpha_acc = accumulate_level(spec, false, samples, parallel);
  for (int k = spec.k_min; k <= spec.k_max; ++k) {
    Eigen::VectorXd v(r);
    for (int c = 0; c < r; ++c)
      v[c] = alpha_acc[static_cast<std::size_t>(k - spec.k_min) * r + c] * inv_n;
    out.alpha.emplace(k, std::move(v));
  }

  for (int level = spec.level; level < spec.level + detail_levels; ++level) {
    BasisSpec detail_spec = make_basis(spec.table, level, spec.domain_lo,
                                       spec.domain_hi);
    const auto beta_acc = accumulate_level(detail_spec, true, samples, parallel);
    auto& slot = out.beta[level];
    for (int k = detail_spec.k_min; k <= detail_spec.k_max; ++k) {
      Eigen::VectorXd v(r);
      for (int c = 0; c < r; ++c)
        v[c] =
            beta_acc[static_cast<std::size_t>(k - detail_spec.k_min) * r + c] *
            inv_n;
      slot.emplace(k, std::move(v));
    }
  }
  return out;
}

}  // namespace

CoefficientSet estimate_coefficients(const BasisSpec& spec,
                                     std::span<const double> samples,
                                     int detail_levels) {
  return estimate_impl(spec, samples, detail_levels, true);
}

CoefficientSet estimate_coefficients_serial(const BasisSpec& spec,
                                            std::span<const double> samples,
                                            int detail_levels) {
  return estimate_impl(spec, samples, detail_levels, false);
}

DensityEstimate make_estimate(const BasisSpec& spec,
                              std::span<const double> samples,
                              int detail_levels) {
  DensityEstimate est;
  est.spec = spec;
  est.detail_levels = detail_levels;
  est.coefficients = estimate_coefficients(spec, samples, detail_levels);
  return est;
}

std::vector<double> reconstruct(const DensityEstimate& estimate,
                                const QuadratureGrid& grid) {
  const BasisSpec& spec = estimate.spec;
  const int r = spec.multiplicity();
  std::vector<double> values(grid.points, 0.0);

  std::vector<BasisSpec> detail_specs;
  for (int level = spec.level; level < spec.level + estimate.detail_levels;
       ++level)
    detail_specs.push_back(
        make_basis(spec.table, level, spec.domain_lo, spec.domain_hi));

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(grid.points); ++m) {
    const double x = grid.x_at(static_cast<std::size_t>(m));
    double acc = 0.0;
    {
      const auto [klo, khi] = covering(spec, x);
      for (int k = klo; k <= khi; ++k) {
        const auto it = estimate.coefficients.alpha.find(k);
        if (it == estimate.coefficients.alpha.end()) continue;
        for (int c = 0; c < r; ++c)
          acc += it->second[c] * evaluate(spec, c, k, x);
      }
    }
    for (const auto& dspec : detail_specs) {
      const auto beta_it = estimate.coefficients.beta.find(dspec.level);
      if (beta_it == estimate.coefficients.beta.end()) continue;
      const auto [klo, khi] = covering(dspec, x);
      for (int k = klo; k <= khi; ++k) {
        const auto it = beta_it->second.find(k);
        if (it == beta_it->second.end()) continue;
        for (int c = 0; c < r; ++c)
          acc += it->second[c] * evaluate_detail(dspec, c, k, x);
      }
    }
    values[static_cast<std::size_t>(m)] = acc;
  }
  return values;
}

NormalizationDiagnostics normalize_values(std::vector<double>& values,
                                          const QuadratureGrid& grid) {
  if (values.size() != grid.points)
    throw std::invalid_argument("normalize: values do not match the grid");
  const std::size_t n = values.size();
  const double step = grid.step();
  // Endpoint nodes carry half a panel under the trapezoid rule.
  auto weight = [&](std::size_t i) {
    return (i == 0 || i + 1 == n) ? 0.5 * step : step;
  };

  NormalizationDiagnostics diag;
  diag.raw_mass = trapezoid(values, step);
  diag.final_mass = diag.raw_mass;
  for (std::size_t i = 0; i < n; ++i)
    if (values[i] < 0.0) diag.negative_mass_removed -= weight(i) * values[i];

  if (diag.negative_mass_removed == 0.0 &&
      std::abs(diag.raw_mass - 1.0) <= 1e-6)
    return diag;
  if (!(*std::max_element(values.begin(), values.end()) > 0.0))
    throw std::runtime_error(
        "normalize: estimate is non-positive everywhere; cannot normalize");

  // L2 projection onto {p >= 0, trapezoid mass = 1}: shift every value by a
  // common theta and clip at zero, with theta chosen so the clipped mass is
  // exactly one. Because the trapezoid weights multiply both the squared
  // error and the mass constraint, the shift is uniform across nodes; theta
  // is found by scanning values in descending order for the largest active
  // set whose smallest member still exceeds the induced shift.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b];
  });
  double mass_acc = 0.0;
  double weight_acc = 0.0;
  double theta = values[order[0]] - 1.0 / weight(order[0]);
  for (std::size_t k = 0; k < n; ++k) {
    mass_acc += weight(order[k]) * values[order[k]];
    weight_acc += weight(order[k]);
    const double candidate = (mass_acc - 1.0) / weight_acc;
    if (values[order[k]] > candidate) theta = candidate;
  }
  for (double& v : values) v = std::max(v - theta, 0.0);

  diag.sweeps = 1;
  diag.final_mass = trapezoid(values, step);
  if (std::abs(diag.final_mass - 1.0) > 1e-6)
    throw std::runtime_error("normalize: mass did not settle within 1e-6");
  return diag;
}

DensityEstimate normalize(const DensityEstimate& estimate,
                          const QuadratureGrid& grid,
                          std::vector<double>& values) {
  values = reconstruct(estimate, grid);
  DensityEstimate out = estimate;
  out.normalization = normalize_values(values, grid);
  out.normalized = true;
  return out;
}

void write_estimate_csv(const QuadratureGrid& grid,
                        const std::vector<double>& values, std::ostream& out) {
  out << "x,p_hat\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", grid.x_at(i));
    out << buf << ",";
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    out << buf << "\n";
  }
}

std::string estimate_sidecar_json(const DensityEstimate& estimate) {
  using nlohmann::json;
  const BasisSpec& spec = estimate.spec;
  json rec;
  rec["filter"] = spec.table->filter.name;
  rec["multiplicity"] = spec.multiplicity();
  rec["level"] = spec.level;
  rec["domain"] = {spec.domain_lo, spec.domain_hi};
  rec["translates"] = {spec.k_min, spec.k_max};
  rec["coefficient_count"] = spec.coefficient_count();
  rec["sample_size"] = estimate.coefficients.sample_size;
  rec["detail_levels"] = estimate.detail_levels;
  rec["normalized"] = estimate.normalized;
  if (estimate.normalized) {
    rec["normalization"] = {
        {"raw_mass", estimate.normalization.raw_mass},
        {"negative_mass_removed", estimate.normalization.negative_mass_removed},
        {"final_mass", estimate.normalization.final_mass},
        {"sweeps", estimate.normalization.sweeps}};
  }
  json alpha = json::object();
  for (const auto& [k, v] : estimate.coefficients.alpha) {
    json entry = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) entry.push_back(v[i]);
    alpha[std::to_string(k)] = std::move(entry);
  }
  rec["alpha"] = std::move(alpha);
  if (!estimate.coefficients.beta.empty()) {
    json beta = json::object();
    for (const auto& [level, slot] : estimate.coefficients.beta) {
      json per_level = json::object();
      for (const auto& [k, v] : slot) {
        json entry = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) entry.push_back(v[i]);
        per_level[std::to_string(k)] = std::move(entry);
      }
      beta[std::to_string(level)] = std::move(per_level);
    }
    rec["beta"] = std::move(beta);
  }
  return rec.dump(1);
}

}  // namespace mwde
