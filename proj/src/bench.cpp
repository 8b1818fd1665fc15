#include "mwde/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "mwde/basis.hpp"
#include "mwde/cascade.hpp"
#include "mwde/densities.hpp"
#include "mwde/estimator.hpp"
#include "mwde/metrics.hpp"
#include "mwde/multifilter.hpp"
#include "mwde/rng.hpp"

namespace mwde {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_sig3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

// Strict ordering used both for the canonical output sort and for lookups.
bool cell_less(const ExperimentResult& a, const ExperimentResult& b) {
  return std::tie(a.density, a.family, a.level) <
         std::tie(b.density, b.family, b.level);
}

// true when a is a strictly better pick than b under the tie rules.
bool better_cell(const ExperimentResult& a, const ExperimentResult& b) {
  if (a.ise != b.ise) return a.ise < b.ise;
  if (a.level != b.level) return a.level < b.level;
  if (a.coefficient_count != b.coefficient_count)
    return a.coefficient_count < b.coefficient_count;
  return a.family < b.family;
}

}  // namespace

std::vector<std::string> benchmark_families() {
  std::vector<std::string> names;
  for (int p = 2; p <= 10; ++p) names.push_back("db" + std::to_string(p));
  for (int p = 4; p <= 10; ++p) names.push_back("sym" + std::to_string(p));
  for (int p = 1; p <= 5; ++p) names.push_back("coif" + std::to_string(p));
  names.push_back("dmey");
  for (int p = 2; p <= 10; ++p) names.push_back("bal-db" + std::to_string(p));
  for (int p = 4; p <= 10; ++p) names.push_back("bal-sym" + std::to_string(p));
  names.push_back("dghm");
  names.push_back("cl3");
  names.push_back("stt");
  return names;
}

std::vector<std::string> benchmark_densities() {
  return {"normal", "bimodal", "skewed-bimodal", "claw", "double-claw"};
}

ExperimentConfig config_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected an object");

  static const char* allowed[] = {
      "densities", "families",        "j_lo",
      "j_hi",      "sample_size",     "seed",
      "grid_points", "normalize",     "per_cell_seeding",
      "results_path", "summary_path"};
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known)
      throw std::invalid_argument("config: unknown key '" + item.key() + "'");
  }

  ExperimentConfig cfg;
  cfg.densities = benchmark_densities();
  cfg.families = benchmark_families();
  try {
    if (j.contains("densities"))
      cfg.densities = j["densities"].get<std::vector<std::string>>();
    if (j.contains("families"))
      cfg.families = j["families"].get<std::vector<std::string>>();
    if (j.contains("j_lo")) cfg.j_lo = j["j_lo"].get<int>();
    if (j.contains("j_hi")) cfg.j_hi = j["j_hi"].get<int>();
    if (j.contains("sample_size"))
      cfg.sample_size = j["sample_size"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("grid_points"))
      cfg.grid_points = j["grid_points"].get<std::size_t>();
    if (j.contains("normalize")) cfg.normalize = j["normalize"].get<bool>();
    if (j.contains("per_cell_seeding"))
      cfg.per_cell_seeding = j["per_cell_seeding"].get<bool>();
    if (j.contains("results_path"))
      cfg.results_path = j["results_path"].get<std::string>();
    if (j.contains("summary_path"))
      cfg.summary_path = j["summary_path"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  if (cfg.densities.empty())
    throw std::invalid_argument("config: densities must be non-empty");
  if (cfg.families.empty())
    throw std::invalid_argument("config: families must be non-empty");
  if (cfg.j_lo > cfg.j_hi)
    throw std::invalid_argument("config: j_lo must not exceed j_hi");
  if (cfg.j_lo < -30 || cfg.j_hi > 30)
    throw std::invalid_argument("config: resolution levels must lie in [-30, 30]");
  if (cfg.sample_size == 0)
    throw std::invalid_argument("config: sample_size must be positive");
  if (cfg.grid_points < 2)
    throw std::invalid_argument("config: grid_points must be at least 2");
  return cfg;
}

std::uint64_t cell_seed(const ExperimentConfig& config,
                        const std::string& density, const std::string& family,
                        int level) {
  std::string key = "seed=" + std::to_string(config.seed) +
                    "|density=" + density;
  if (config.per_cell_seeding)
    key += "|family=" + family + "|j=" + std::to_string(level);
  return stable_hash(key);
}

std::vector<ExperimentResult> run_benchmark(const ExperimentConfig& config) {
  struct FamilyEntry {
    std::shared_ptr<const ScalingTable> table;
    int multiplicity = 0;
    std::string error;
  };

  // Cascades and shared samples are prepared serially up front; the cells
  // only read them.
  std::map<std::string, FamilyEntry> families;
  for (const auto& name : config.families) {
    if (families.count(name)) continue;
    FamilyEntry entry;
    try {
      Multifilter filter = load_filter(name);
      entry.multiplicity = filter.multiplicity;
      CascadeOptions options;
      options.max_iters = 200;  // db2/coif1 need ~50 sweeps for 1e-8
      entry.table = std::make_shared<const ScalingTable>(
          cascade(filter, options));
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    families.emplace(name, std::move(entry));
  }

  struct DensityEntry {
    MixtureDensity density;
    QuadratureGrid grid{0.0, 1.0, 2};
    std::vector<double> truth;
    SampleResult shared_sample;
    std::uint64_t shared_seed = 0;
  };
  std::map<std::string, DensityEntry> densities;
  for (const auto& name : config.densities) {
    if (densities.count(name)) continue;
    DensityEntry entry{density_by_name(name),
                       QuadratureGrid{0.0, 1.0, 2},
                       {},
                       {},
                       0};
    entry.grid = make_grid(entry.density.domain_lo, entry.density.domain_hi,
                           config.grid_points);
    entry.truth.resize(entry.grid.points);
    for (std::size_t i = 0; i < entry.grid.points; ++i)
      entry.truth[i] = entry.density.pdf(entry.grid.x_at(i));
    if (!config.per_cell_seeding) {
      entry.shared_seed = cell_seed(config, name, "", 0);
      entry.shared_sample = sample(entry.density, config.sample_size,
                                   entry.shared_seed);
    }
    densities.emplace(name, std::move(entry));
  }

  struct Cell {
    const std::string* density;
    const std::string* family;
    int level;
  };
  std::vector<Cell> cells;
  for (const auto& den : config.densities)
    for (const auto& fam : config.families)
      for (int level = config.j_lo; level <= config.j_hi; ++level)
        cells.push_back(Cell{&den, &fam, level});

  std::vector<ExperimentResult> results(cells.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells.size());
       ++c) {
    const Cell& cell = cells[static_cast<std::size_t>(c)];
    ExperimentResult row;
    row.density = *cell.density;
    row.family = *cell.family;
    row.level = cell.level;
    row.sample_size = config.sample_size;
    row.ise = kNaN;
    row.ise_raw = kNaN;
    row.ise_normalized = kNaN;
    row.raw_mass = kNaN;
    row.negative_mass_removed = kNaN;
    row.final_mass = kNaN;
    row.truncation_fraction = kNaN;

    const FamilyEntry& fam = families.at(row.family);
    const DensityEntry& den = densities.at(row.density);
    row.multiplicity = fam.multiplicity;
    row.seed = config.per_cell_seeding
                   ? cell_seed(config, row.density, row.family, row.level)
                   : den.shared_seed;

    if (!fam.table) {
      row.status = "cascade: " + fam.error;
      results[static_cast<std::size_t>(c)] = std::move(row);
      continue;
    }

    try {
      const SampleResult* data = &den.shared_sample;
      SampleResult local;
      if (config.per_cell_seeding) {
        local = sample(den.density, config.sample_size, row.seed);
        data = &local;
      }
      row.truncation_fraction = data->truncation_fraction;

      BasisSpec spec = make_basis(fam.table, row.level, den.density.domain_lo,
                                  den.density.domain_hi);
      row.coefficient_count = spec.coefficient_count();
      DensityEstimate estimate = make_estimate(spec, data->values);

      std::vector<double> values = reconstruct(estimate, den.grid);
      row.ise_raw = ise(values, den.truth, den.grid);
      if (config.normalize) {
        NormalizationDiagnostics diag = normalize_values(values, den.grid);
        row.raw_mass = diag.raw_mass;
        row.negative_mass_removed = diag.negative_mass_removed;
        row.final_mass = diag.final_mass;
        row.ise_normalized = ise(values, den.truth, den.grid);
        row.ise = row.ise_normalized;
      } else {
        row.raw_mass = trapezoid(values, den.grid.step());
        row.ise = row.ise_raw;
      }
    } catch (const std::exception& e) {
      row.status = e.what();
      row.ise = kNaN;
    }
    results[static_cast<std::size_t>(c)] = std::move(row);
  }

  std::sort(results.begin(), results.end(), cell_less);
  return results;
}

std::vector<BestPerDensity> best_per_density(
    const std::vector<ExperimentResult>& results) {
  std::vector<BestPerDensity> rows;
  for (const auto& r : results) {
    if (rows.empty() || rows.back().density != r.density) {
      rows.push_back(BestPerDensity{r.density, std::nullopt, std::nullopt});
    }
    if (r.status != "ok" || !std::isfinite(r.ise)) continue;
    std::optional<ExperimentResult>& slot =
        (r.multiplicity >= 2) ? rows.back().mwde : rows.back().wde;
    if (!slot || better_cell(r, *slot)) slot = r;
  }
  return rows;
}

void write_results_csv(const std::vector<ExperimentResult>& results,
                       std::ostream& out) {
  out << "density,family,multiplicity,level,ise,ise_raw,ise_normalized,"
         "coefficient_count,seed,sample_size,raw_mass,negative_mass_removed,"
         "final_mass,truncation_fraction,status\n";
  for (const auto& r : results) {
    out << csv_safe(r.density) << ',' << csv_safe(r.family) << ','
        << r.multiplicity << ',' << r.level << ',' << fmt_double(r.ise) << ','
        << fmt_double(r.ise_raw) << ',' << fmt_double(r.ise_normalized) << ','
        << r.coefficient_count << ',' << r.seed << ',' << r.sample_size << ','
        << fmt_double(r.raw_mass) << ',' << fmt_double(r.negative_mass_removed)
        << ',' << fmt_double(r.final_mass) << ','
        << fmt_double(r.truncation_fraction) << ',' << csv_safe(r.status)
        << '\n';
  }
}

void write_summary_csv(const std::vector<BestPerDensity>& rows,
                       std::ostream& out) {
  out << "density,mwde_family,mwde_ise_x1e3,mwde_level,mwde_coefficients,"
         "wde_family,wde_ise_x1e3,wde_level,wde_coefficients\n";
  for (const auto& row : rows) {
    out << csv_safe(row.density) << ',';
    if (row.mwde) {
      out << csv_safe(row.mwde->family) << ',' << fmt_sig3(row.mwde->ise * 1e3)
          << ',' << row.mwde->level << ',' << row.mwde->coefficient_count;
    } else {
      out << ",,,";
    }
    out << ',';
    if (row.wde) {
      out << csv_safe(row.wde->family) << ',' << fmt_sig3(row.wde->ise * 1e3)
          << ',' << row.wde->level << ',' << row.wde->coefficient_count;
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

}  // namespace mwde
