#include "mwde/densities.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mwde/rng.hpp"

namespace mwde {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

std::vector<MixtureDensity> build_zoo() {
  std::vector<MixtureDensity> zoo;
  zoo.push_back({"normal", {{1.0, 0.0, 1.0}}});
  zoo.push_back({"bimodal",
                 {{0.5, -1.0, 2.0 / 3.0}, {0.5, 1.0, 2.0 / 3.0}}});
  zoo.push_back({"skewed-bimodal",
                 {{0.75, 0.0, 1.0}, {0.25, 1.5, 1.0 / 3.0}}});
  MixtureDensity claw{"claw", {{0.5, 0.0, 1.0}}};
  for (int l = 0; l <= 4; ++l)
    claw.components.push_back({0.1, l / 2.0 - 1.0, 0.1});
  zoo.push_back(claw);
  MixtureDensity double_claw{"double-claw",
                             {{0.49, -1.0, 2.0 / 3.0}, {0.49, 1.0, 2.0 / 3.0}}};
  for (int l = 0; l <= 6; ++l)
    double_claw.components.push_back({1.0 / 350.0, (l - 3.0) / 2.0, 0.01});
  zoo.push_back(double_claw);
  for (const auto& d : zoo) validate_mixture(d);
  return zoo;
}

}  // namespace

double MixtureDensity::pdf(double x) const {
  double acc = 0.0;
  for (const auto& c : components) {
    const double z = (x - c.mean) / c.stddev;
    acc += c.weight * kInvSqrt2Pi / c.stddev * std::exp(-0.5 * z * z);
  }
  return acc;
}

SampleResult sample(const MixtureDensity& density, std::size_t n,
                    std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  Xoshiro256pp rng(seed);
  SampleResult out;
  out.values.reserve(n);
  out.component_counts.assign(density.components.size(), 0);
  std::size_t rejected = 0;
  while (out.values.size() < n) {
    const double u = rng.uniform01();
    std::size_t pick = density.components.size() - 1;
    double cumulative = 0.0;
    for (std::size_t c = 0; c < density.components.size(); ++c) {
      cumulative += density.components[c].weight;
      if (u <= cumulative) {
        pick = c;
        break;
      }
    }
    const auto& comp = density.components[pick];
    const double x = comp.mean + comp.stddev * normal_quantile(rng.uniform01());
    if (x < density.domain_lo || x > density.domain_hi) {
      ++rejected;
      continue;
    }
    out.component_counts[pick] += 1;
    out.values.push_back(x);
  }
  out.truncation_fraction =
      static_cast<double>(rejected) / static_cast<double>(n + rejected);
  return out;
}

void validate_mixture(const MixtureDensity& density) {
  if (density.components.empty())
    throw std::invalid_argument("mixture " + density.name + ": no components");
  if (!(density.domain_lo < density.domain_hi))
    throw std::invalid_argument("mixture " + density.name + ": empty domain");
  double total = 0.0;
  for (const auto& c : density.components) {
    if (!(c.weight > 0.0))
      throw std::invalid_argument("mixture " + density.name +
                                  ": weights must be positive");
    if (!(c.stddev > 0.0))
      throw std::invalid_argument("mixture " + density.name +
                                  ": stddevs must be positive");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixture " + density.name +
                                ": weights sum to " + std::to_string(total));
  // Mass check over the declared domain (the erf form is exact per component).
  double mass = 0.0;
  constexpr double kInvSqrt2 = 0.7071067811865476;
  for (const auto& c : density.components) {
    const double zl = (density.domain_lo - c.mean) / c.stddev;
    const double zh = (density.domain_hi - c.mean) / c.stddev;
    mass += c.weight * 0.5 * (std::erf(zh * kInvSqrt2) - std::erf(zl * kInvSqrt2));
  }
  if (mass < 0.995)
    throw std::invalid_argument("mixture " + density.name +
                                ": only " + std::to_string(mass) +
                                " of the mass lies inside the domain");
}

const std::vector<MixtureDensity>& density_zoo() {
  static const std::vector<MixtureDensity> zoo = build_zoo();
  return zoo;
}

MixtureDensity density_by_name(const std::string& name) {
  for (const auto& d : density_zoo())
    if (d.name == name) return d;
  throw std::invalid_argument("unknown density: " + name);
}

MixtureDensity mixture_from_json(const std::string& json_text) {
  using nlohmann::json;
  json rec;
  try {
    rec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("mixture record: invalid JSON: ") +
                                e.what());
  }
  MixtureDensity d;
  try {
    d.name = rec.value("name", std::string("custom"));
    const auto weights = rec.at("weights").get<std::vector<double>>();
    const auto means = rec.at("means").get<std::vector<double>>();
    const auto stddevs = rec.at("stddevs").get<std::vector<double>>();
    if (weights.size() != means.size() || means.size() != stddevs.size())
      throw std::invalid_argument(
          "mixture record: weights, means, stddevs differ in length");
    for (std::size_t i = 0; i < weights.size(); ++i)
      d.components.push_back({weights[i], means[i], stddevs[i]});
    if (rec.contains("domain")) {
      const auto& dom = rec["domain"];
      if (!dom.is_array() || dom.size() != 2)
        throw std::invalid_argument("mixture record: domain must be [lo, hi]");
      d.domain_lo = dom[0].get<double>();
      d.domain_hi = dom[1].get<double>();
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("mixture record: ") + e.what());
  }
  validate_mixture(d);
  return d;
}

}  // namespace mwde
