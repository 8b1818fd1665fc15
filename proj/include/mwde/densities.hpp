#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mwde {

struct MixtureComponent {
  double weight;
  double mean;
  double stddev;
};

// Analytic Gaussian-mixture ground truth. The default domain is the
// benchmarking interval [-4, 4]; sampling rejects draws outside it.
struct MixtureDensity {
  std::string name;
  std::vector<MixtureComponent> components;
  double domain_lo = -4.0;
  double domain_hi = 4.0;

  double pdf(double x) const;
};

struct SampleResult {
  std::vector<double> values;
  std::vector<std::size_t> component_counts;  // selection tally per component
  double truncation_fraction = 0.0;           // rejected / total draws
};

// n i.i.d. draws: component selection by cumulative weight, then a Gaussian
// draw via the inverse CDF; out-of-domain draws are rejected and redrawn.
// Bit-reproducible for a fixed seed.
SampleResult sample(const MixtureDensity& density, std::size_t n,
                    std::uint64_t seed);

// Weights must sum to 1 within 1e-12, stddevs must be positive, and the pdf
// must hold at least 0.995 of its mass inside the declared domain.
void validate_mixture(const MixtureDensity& density);

// Marron-Wand catalog members used by the benchmark: normal, bimodal,
// skewed-bimodal, claw, double-claw.
const std::vector<MixtureDensity>& density_zoo();
MixtureDensity density_by_name(const std::string& name);

// Custom mixture from a JSON record {weights, means, stddevs, domain}.
MixtureDensity mixture_from_json(const std::string& json_text);

}  // namespace mwde
