#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mwde/bench.hpp"
#include "mwde/rng.hpp"

using namespace mwde;

TEST_CASE("config parses with defaults and overrides") {
  ExperimentConfig defaults = config_from_json("{}");
  CHECK(defaults.densities == benchmark_densities());
  CHECK(defaults.families == benchmark_families());
  CHECK(defaults.j_lo == -2);
  CHECK(defaults.j_hi == 3);
  CHECK(defaults.sample_size == 10000);
  CHECK(defaults.seed == 1);
  CHECK(defaults.grid_points == 4096);
  CHECK(defaults.normalize);
  CHECK(!defaults.per_cell_seeding);

  ExperimentConfig cfg = config_from_json(R"({
    "densities": ["claw"],
    "families": ["db2", "dghm"],
    "j_lo": 0,
    "j_hi": 2,
    "sample_size": 500,
    "seed": 9,
    "grid_points": 1024,
    "normalize": false,
    "per_cell_seeding": true,
    "results_path": "r.csv",
    "summary_path": "s.csv"
  })");
  CHECK(cfg.densities == std::vector<std::string>{"claw"});
  CHECK(cfg.families == std::vector<std::string>{"db2", "dghm"});
  CHECK(cfg.j_lo == 0);
  CHECK(cfg.j_hi == 2);
  CHECK(cfg.sample_size == 500);
  CHECK(cfg.seed == 9);
  CHECK(cfg.grid_points == 1024);
  CHECK(!cfg.normalize);
  CHECK(cfg.per_cell_seeding);
  CHECK(cfg.results_path == "r.csv");
  CHECK(cfg.summary_path == "s.csv");
}

TEST_CASE("config rejects malformed input") {
  CHECK_THROWS_AS(config_from_json("nope"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(config_from_json(R"({"familise": []})"),
                       doctest::Contains("familise"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"densities": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"j_lo": 3, "j_hi": 0})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"j_lo": "zero"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"sample_size": 0})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"grid_points": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"j_lo": -40})"),
                  std::invalid_argument);
}

TEST_CASE("benchmark family list covers both classes") {
  const auto& fams = benchmark_families();
  auto has = [&](const std::string& n) {
    return std::find(fams.begin(), fams.end(), n) != fams.end();
  };
  for (int p = 2; p <= 10; ++p) {
    CHECK(has("db" + std::to_string(p)));
    CHECK(has("bal-db" + std::to_string(p)));
  }
  for (int p = 4; p <= 10; ++p) {
    CHECK(has("sym" + std::to_string(p)));
    CHECK(has("bal-sym" + std::to_string(p)));
  }
  for (int p = 1; p <= 5; ++p) CHECK(has("coif" + std::to_string(p)));
  CHECK(has("dmey"));
  CHECK(has("dghm"));
  CHECK(has("cl3"));
  CHECK(has("stt"));
  CHECK(benchmark_densities().size() == 5);
}

TEST_CASE("cell seeds depend on the configured scheme") {
  ExperimentConfig shared;
  shared.seed = 4;
  const std::uint64_t a = cell_seed(shared, "claw", "db2", 0);
  const std::uint64_t b = cell_seed(shared, "claw", "dghm", 2);
  CHECK(a == b);  // shared scheme ignores family and level
  CHECK(a == stable_hash("seed=4|density=claw"));
  CHECK(cell_seed(shared, "normal", "db2", 0) != a);

  ExperimentConfig per_cell = shared;
  per_cell.per_cell_seeding = true;
  const std::uint64_t c = cell_seed(per_cell, "claw", "db2", 0);
  const std::uint64_t d = cell_seed(per_cell, "claw", "dghm", 0);
  CHECK(c != d);
  CHECK(c == stable_hash("seed=4|density=claw|family=db2|j=0"));
}

TEST_CASE("single cell run produces a scored row") {
  ExperimentConfig cfg;
  cfg.densities = {"normal"};
  cfg.families = {"haar"};
  cfg.j_lo = 0;
  cfg.j_hi = 0;
  cfg.sample_size = 2000;
  cfg.grid_points = 1024;
  std::vector<ExperimentResult> rows = run_benchmark(cfg);
  REQUIRE(rows.size() == 1);
  const ExperimentResult& r = rows[0];
  CHECK(r.density == "normal");
  CHECK(r.family == "haar");
  CHECK(r.multiplicity == 1);
  CHECK(r.level == 0);
  CHECK(r.status == "ok");
  CHECK(std::isfinite(r.ise));
  CHECK(r.ise == r.ise_normalized);
  CHECK(r.ise > 0.0);
  CHECK(r.sample_size == 2000);
  // haar at j=0 on [-4,4]: translates -5..4 hit the domain, r=1 each
  CHECK(r.coefficient_count == 10);
  CHECK(r.raw_mass == doctest::Approx(1.0).epsilon(0.05));
  CHECK(r.final_mass == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.seed == stable_hash("seed=1|density=normal"));
}

TEST_CASE("results are canonically ordered and reruns are byte identical") {
  ExperimentConfig cfg;
  cfg.densities = {"bimodal", "normal"};
  cfg.families = {"dghm", "haar"};
  cfg.j_lo = -1;
  cfg.j_hi = 1;
  cfg.sample_size = 1000;
  cfg.grid_points = 512;

  std::vector<ExperimentResult> first = run_benchmark(cfg);
  REQUIRE(first.size() == 2 * 2 * 3);
  for (std::size_t i = 1; i < first.size(); ++i) {
    const auto& a = first[i - 1];
    const auto& b = first[i];
    const auto ka = std::tie(a.density, a.family, a.level);
    const auto kb = std::tie(b.density, b.family, b.level);
    CHECK(ka < kb);
  }

  std::vector<ExperimentResult> second = run_benchmark(cfg);
  std::ostringstream csv_a, csv_b;
  write_results_csv(first, csv_a);
  write_results_csv(second, csv_b);
  CHECK(csv_a.str() == csv_b.str());
  CHECK(csv_a.str().rfind("density,family,multiplicity,level,ise,", 0) == 0);
}

TEST_CASE("normalization toggle controls the headline score") {
  ExperimentConfig cfg;
  cfg.densities = {"normal"};
  cfg.families = {"db2"};
  cfg.j_lo = 0;
  cfg.j_hi = 0;
  cfg.sample_size = 5000;
  cfg.grid_points = 1024;
  cfg.normalize = false;
  std::vector<ExperimentResult> raw = run_benchmark(cfg);
  REQUIRE(raw.size() == 1);
  CHECK(raw[0].ise == raw[0].ise_raw);
  CHECK(std::isnan(raw[0].ise_normalized));

  cfg.normalize = true;
  std::vector<ExperimentResult> fixed = run_benchmark(cfg);
  CHECK(fixed[0].ise == fixed[0].ise_normalized);
  CHECK(fixed[0].ise_raw == raw[0].ise_raw);
  CHECK(fixed[0].ise_normalized <= fixed[0].ise_raw);
}

TEST_CASE("failing families are recorded, not fatal") {
  ExperimentConfig cfg;
  cfg.densities = {"normal"};
  cfg.families = {"haar", "no-such-family"};
  cfg.j_lo = 0;
  cfg.j_hi = 1;
  cfg.sample_size = 200;
  cfg.grid_points = 256;
  std::vector<ExperimentResult> rows = run_benchmark(cfg);
  REQUIRE(rows.size() == 4);
  int ok = 0, failed = 0;
  for (const auto& r : rows) {
    if (r.status == "ok") {
      ++ok;
      CHECK(r.family == "haar");
    } else {
      ++failed;
      CHECK(r.family == "no-such-family");
      CHECK(r.status.find("cascade:") == 0);
      CHECK(std::isnan(r.ise));
    }
  }
  CHECK(ok == 2);
  CHECK(failed == 2);

  // failed rows never win a summary slot
  std::vector<BestPerDensity> best = best_per_density(rows);
  REQUIRE(best.size() == 1);
  REQUIRE(best[0].wde.has_value());
  CHECK(best[0].wde->family == "haar");
  CHECK(!best[0].mwde.has_value());
}

TEST_CASE("best per density prefers low ise, then coarse, then small") {
  auto row = [](const char* den, const char* fam, int mult, int level,
                double ise, int coeffs) {
    ExperimentResult r;
    r.density = den;
    r.family = fam;
    r.multiplicity = mult;
    r.level = level;
    r.ise = ise;
    r.coefficient_count = coeffs;
    r.status = "ok";
    return r;
  };
  std::vector<ExperimentResult> rows{
      row("claw", "db2", 1, 2, 0.5, 40),
      row("claw", "db3", 1, 1, 0.5, 30),   // same ise, coarser level wins
      row("claw", "db4", 1, 1, 0.5, 20),   // same ise+level, fewer coeffs
      row("claw", "db5", 1, 3, 0.1, 99),   // lower ise beats everything
      row("claw", "dghm", 2, 2, 0.7, 44),
      row("claw", "stt", 2, 2, 0.7, 22),
      row("normal", "bal-db2", 2, 0, 0.3, 12),
  };
  std::vector<BestPerDensity> best = best_per_density(rows);
  REQUIRE(best.size() == 2);
  const BestPerDensity* claw = &best[0];
  const BestPerDensity* normal = &best[1];
  if (claw->density != "claw") std::swap(claw, normal);
  REQUIRE(claw->wde.has_value());
  CHECK(claw->wde->family == "db5");
  REQUIRE(claw->mwde.has_value());
  CHECK(claw->mwde->family == "stt");  // tie broken by coefficient count
  REQUIRE(normal->mwde.has_value());
  CHECK(normal->mwde->family == "bal-db2");
  CHECK(!normal->wde.has_value());

  std::vector<ExperimentResult> tie{
      row("x", "db2", 1, 2, 0.5, 40),
      row("x", "db3", 1, 1, 0.5, 30),
  };
  CHECK(best_per_density(tie)[0].wde->family == "db3");
}

TEST_CASE("summary table lists both classes") {
  ExperimentConfig cfg;
  cfg.densities = {"normal"};
  cfg.families = {"haar", "bal-haar"};
  cfg.j_lo = 0;
  cfg.j_hi = 2;
  cfg.sample_size = 3000;
  cfg.grid_points = 512;
  std::vector<ExperimentResult> rows = run_benchmark(cfg);
  std::vector<BestPerDensity> best = best_per_density(rows);
  REQUIRE(best.size() == 1);
  REQUIRE(best[0].mwde.has_value());
  REQUIRE(best[0].wde.has_value());
  CHECK(best[0].mwde->family == "bal-haar");
  CHECK(best[0].wde->family == "haar");

  std::ostringstream out;
  write_summary_csv(best, out);
  std::istringstream lines(out.str());
  std::string header, row_line;
  std::getline(lines, header);
  CHECK(header ==
        "density,mwde_family,mwde_ise_x1e3,mwde_level,mwde_coefficients,"
        "wde_family,wde_ise_x1e3,wde_level,wde_coefficients");
  std::getline(lines, row_line);
  CHECK(row_line.find("normal,bal-haar,") == 0);
}

TEST_CASE("per cell seeding changes samples between families") {
  ExperimentConfig cfg;
  cfg.densities = {"normal"};
  cfg.families = {"haar", "db2"};
  cfg.j_lo = 0;
  cfg.j_hi = 0;
  cfg.sample_size = 500;
  cfg.grid_points = 256;
  cfg.per_cell_seeding = true;
  std::vector<ExperimentResult> rows = run_benchmark(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].seed != rows[1].seed);

  cfg.per_cell_seeding = false;
  std::vector<ExperimentResult> shared = run_benchmark(cfg);
  CHECK(shared[0].seed == shared[1].seed);
}
