#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mwde {

// One full sweep: densities x families x resolution levels at a fixed sample
// size. Cell samples default to one shared draw per density (every family
// and level sees the same data); per_cell_seeding re-keys the seed on
// (density, family, level) instead.
struct ExperimentConfig {
  std::vector<std::string> densities;
  std::vector<std::string> families;
  int j_lo = -2;
  int j_hi = 3;
  std::size_t sample_size = 10000;
  std::uint64_t seed = 1;
  std::size_t grid_points = 4096;
  bool normalize = true;
  bool per_cell_seeding = false;
  std::string results_path;
  std::string summary_path;
};

struct ExperimentResult {
  std::string density;
  std::string family;
  int multiplicity = 0;
  int level = 0;
  double ise = 0.0;             // headline score (normalized when enabled)
  double ise_raw = 0.0;
  double ise_normalized = 0.0;  // nan when normalization is off
  int coefficient_count = 0;
  std::uint64_t seed = 0;       // the cell's sample seed
  std::size_t sample_size = 0;
  double raw_mass = 0.0;
  double negative_mass_removed = 0.0;
  double final_mass = 0.0;
  double truncation_fraction = 0.0;
  std::string status = "ok";
};

// Minimum-ISE rows per density, split into the scalar (WDE) and
// multiplicity->=2 (MWDE) classes. Ties break toward coarser level, then
// fewer coefficients, then family name order.
struct BestPerDensity {
  std::string density;
  std::optional<ExperimentResult> mwde;
  std::optional<ExperimentResult> wde;
};

// The default sweep set: Daubechies 2-10, Symlets 4-10, Coiflets 1-5, and
// the truncated Meyer filter on the scalar side; their balanced constructions
// plus dghm, cl3, and stt on the multiwavelet side.
std::vector<std::string> benchmark_families();
std::vector<std::string> benchmark_densities();

ExperimentConfig config_from_json(const std::string& json_text);

std::uint64_t cell_seed(const ExperimentConfig& config,
                        const std::string& density, const std::string& family,
                        int level);

// One result per cell. Cell failures (e.g. a non-convergent cascade) are
// recorded in the row's status, not thrown. Results come back canonically
// sorted by (density, family, level) so reruns are byte-identical.
std::vector<ExperimentResult> run_benchmark(const ExperimentConfig& config);

std::vector<BestPerDensity> best_per_density(
    const std::vector<ExperimentResult>& results);

void write_results_csv(const std::vector<ExperimentResult>& results,
                       std::ostream& out);
// Per-density class winners: ISE reported x10^-3 with 3 significant figures.
void write_summary_csv(const std::vector<BestPerDensity>& rows,
                       std::ostream& out);

}  // namespace mwde
