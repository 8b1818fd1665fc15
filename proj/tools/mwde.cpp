#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwde/basis.hpp"
#include "mwde/bench.hpp"
#include "mwde/cascade.hpp"
#include "mwde/densities.hpp"
#include "mwde/estimator.hpp"
#include "mwde/metrics.hpp"
#include "mwde/multifilter.hpp"

namespace {

std::pair<double, double> parse_domain(const std::string& text) {
  double lo = 0.0, hi = 0.0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%lf:%lf%c", &lo, &hi, &tail) != 2 ||
      !(lo < hi)) {
    throw std::invalid_argument("domain must be A:B with A < B, got '" + text +
                                "'");
  }
  return {lo, hi};
}

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sample file " + path);
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) values.push_back(v);
  if (!in.eof())
    throw std::invalid_argument("sample file " + path +
                                " contains non-numeric data");
  if (values.empty())
    throw std::invalid_argument("sample file " + path + " is empty");
  return values;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  return out;
}

std::string sidecar_path(const std::string& csv_path) {
  if (csv_path.size() > 4 &&
      csv_path.compare(csv_path.size() - 4, 4, ".csv") == 0) {
    return csv_path.substr(0, csv_path.size() - 4) + ".json";
  }
  return csv_path + ".json";
}

int run_filters_list() {
  for (const auto& name : mwde::builtin_filter_names()) {
    mwde::Multifilter f = mwde::load_filter(name);
    std::printf("%-12s r=%d support=[%d,%d] taps=%d\n", name.c_str(),
                f.multiplicity, f.support_lo, f.support_hi, f.tap_count());
  }
  return 0;
}

struct CascadeArgs {
  std::string filter;
  int depth = 10;
  int max_iters = 40;
  double tol = 1e-8;
  std::string out;
};

int run_cascade(const CascadeArgs& args) {
  mwde::Multifilter filter = mwde::load_filter(args.filter);
  mwde::CascadeOptions options;
  options.depth = args.depth;
  options.max_iters = args.max_iters;
  options.tol = args.tol;
  mwde::ScalingTable table = mwde::cascade(filter, options);
  std::ofstream out = open_output(args.out);
  mwde::write_table_csv(table, out);
  std::printf("%s: depth=%d iterations=%d refinement_residual=%.3e -> %s\n",
              filter.name.c_str(), table.depth, table.iterations,
              table.refinement_residual, args.out.c_str());
  return 0;
}

struct EstimateArgs {
  std::string filter;
  int level = 0;
  std::string samples_path;
  std::string density;
  std::size_t n = 10000;
  std::uint64_t seed = 1;
  std::string domain;
  std::size_t grid_points = 4096;
  bool normalize = false;
  std::string out;
};

int run_estimate(const EstimateArgs& args) {
  if (args.samples_path.empty() == args.density.empty()) {
    throw std::invalid_argument(
        "exactly one of --samples and --density is required");
  }

  std::vector<double> data;
  double lo = -4.0, hi = 4.0;
  if (!args.density.empty()) {
    mwde::MixtureDensity density = mwde::density_by_name(args.density);
    lo = density.domain_lo;
    hi = density.domain_hi;
    mwde::SampleResult drawn = mwde::sample(density, args.n, args.seed);
    data = std::move(drawn.values);
    if (drawn.truncation_fraction > 0.0) {
      std::fprintf(stderr, "note: truncation fraction %.3e\n",
                   drawn.truncation_fraction);
    }
  } else {
    data = read_sample_file(args.samples_path);
  }
  if (!args.domain.empty()) std::tie(lo, hi) = parse_domain(args.domain);

  mwde::Multifilter filter = mwde::load_filter(args.filter);
  mwde::CascadeOptions options;
  options.max_iters = 200;
  auto table = std::make_shared<const mwde::ScalingTable>(
      mwde::cascade(filter, options));
  mwde::BasisSpec spec = mwde::make_basis(table, args.level, lo, hi);
  mwde::DensityEstimate estimate = mwde::make_estimate(spec, data);

  mwde::QuadratureGrid grid = mwde::make_grid(lo, hi, args.grid_points);
  std::vector<double> values;
  if (args.normalize) {
    estimate = mwde::normalize(estimate, grid, values);
  } else {
    values = mwde::reconstruct(estimate, grid);
  }

  std::ofstream out = open_output(args.out);
  mwde::write_estimate_csv(grid, values, out);
  std::string sidecar = sidecar_path(args.out);
  std::ofstream side = open_output(sidecar);
  side << mwde::estimate_sidecar_json(estimate) << '\n';

  std::printf("%s j0=%d translates=%d coefficients=%d mass=%.6f -> %s, %s\n",
              filter.name.c_str(), args.level, spec.translate_count(),
              spec.coefficient_count(),
              args.normalize ? estimate.normalization.final_mass
                             : mwde::trapezoid(values, grid.step()),
              args.out.c_str(), sidecar.c_str());
  return 0;
}

struct BenchmarkArgs {
  std::string config_path;
  std::string out;
  std::string summary;
};

int run_benchmark_cmd(const BenchmarkArgs& args) {
  mwde::ExperimentConfig config;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in)
      throw std::invalid_argument("cannot open config " + args.config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    config = mwde::config_from_json(buffer.str());
  }
  if (!args.out.empty()) config.results_path = args.out;
  if (!args.summary.empty()) config.summary_path = args.summary;
  if (config.results_path.empty())
    throw std::invalid_argument("no results path (--out or config)");

  // Unknown names are config errors; fail before any cells run.
  for (const auto& name : config.densities) mwde::density_by_name(name);
  for (const auto& name : config.families) mwde::load_filter(name);

  std::vector<mwde::ExperimentResult> results = mwde::run_benchmark(config);
  {
    std::ofstream out = open_output(config.results_path);
    mwde::write_results_csv(results, out);
  }
  if (!config.summary_path.empty()) {
    std::ofstream out = open_output(config.summary_path);
    mwde::write_summary_csv(mwde::best_per_density(results), out);
  }

  std::size_t failed = 0;
  for (const auto& row : results) {
    if (row.status != "ok") {
      ++failed;
      std::fprintf(stderr, "cell failed: %s %s j=%d: %s\n",
                   row.density.c_str(), row.family.c_str(), row.level,
                   row.status.c_str());
    }
  }
  std::printf("%zu cells (%zu failed) -> %s\n", results.size(), failed,
              config.results_path.c_str());
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiwavelet density estimation toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  CLI::App* filters = app.add_subcommand("filters", "inspect filter banks");
  filters->require_subcommand(1);
  CLI::App* filters_list =
      filters->add_subcommand("list", "list built-in filter banks");
  filters_list->callback([&] { exit_code = run_filters_list(); });

  CascadeArgs cascade_args;
  CLI::App* cascade =
      app.add_subcommand("cascade", "tabulate scaling functions");
  cascade->add_option("--filter", cascade_args.filter, "filter name or JSON path")
      ->required();
  cascade->add_option("--depth", cascade_args.depth, "dyadic grid depth");
  cascade->add_option("--max-iters", cascade_args.max_iters,
                      "iteration budget");
  cascade->add_option("--tol", cascade_args.tol, "sup-norm tolerance");
  cascade->add_option("--out", cascade_args.out, "output CSV path")->required();
  cascade->callback([&] { exit_code = run_cascade(cascade_args); });

  EstimateArgs estimate_args;
  CLI::App* estimate = app.add_subcommand("estimate", "estimate a density");
  estimate
      ->add_option("--filter", estimate_args.filter, "filter name or JSON path")
      ->required();
  estimate->add_option("--level", estimate_args.level, "resolution level j0")
      ->required();
  estimate->add_option("--samples", estimate_args.samples_path,
                       "whitespace-separated sample file");
  estimate->add_option("--density", estimate_args.density,
                       "built-in density to sample from");
  estimate->add_option("--n", estimate_args.n, "sample size for --density");
  estimate->add_option("--seed", estimate_args.seed, "seed for --density");
  estimate->add_option("--domain", estimate_args.domain, "domain as A:B");
  estimate->add_option("--grid", estimate_args.grid_points,
                       "output grid points");
  estimate->add_flag("--normalize", estimate_args.normalize,
                     "clip negatives and rescale to unit mass");
  estimate->add_option("--out", estimate_args.out, "output CSV path")
      ->required();
  estimate->callback([&] { exit_code = run_estimate(estimate_args); });

  BenchmarkArgs bench_args;
  CLI::App* benchmark =
      app.add_subcommand("benchmark", "run a density x family x level sweep");
  benchmark->add_option("--config", bench_args.config_path,
                        "JSON experiment config");
  benchmark->add_option("--out", bench_args.out, "results CSV path");
  benchmark->add_option("--summary", bench_args.summary, "summary CSV path");
  benchmark->callback([&] { exit_code = run_benchmark_cmd(bench_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return exit_code;
}
