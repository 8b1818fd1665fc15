#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "mwde/densities.hpp"
#include "mwde/estimator.hpp"
#include "mwde/multifilter.hpp"

using namespace mwde;

namespace {

std::shared_ptr<const ScalingTable> table_for(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const ScalingTable>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  CascadeOptions options;
  options.max_iters = 200;
  auto table = std::make_shared<ScalingTable>(cascade(load_filter(name), options));
  cache.emplace(name, table);
  return table;
}

// Direct sample-mean loop, written independently of the production
// accumulation (no chunking, plain running sums in sample order).
std::map<int, Eigen::VectorXd> direct_alpha(const BasisSpec& spec,
                                            const std::vector<double>& xs) {
  std::map<int, Eigen::VectorXd> out;
  for (int k = spec.k_min; k <= spec.k_max; ++k) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(spec.multiplicity());
    for (double x : xs) {
      for (int i = 0; i < spec.multiplicity(); ++i)
        acc[i] += evaluate(spec, i, k, x);
    }
    out[k] = acc / static_cast<double>(xs.size());
  }
  return out;
}

double rel_l2(const std::vector<double>& f, const std::vector<double>& g,
              const QuadratureGrid& grid) {
  std::vector<double> zero(grid.points, 0.0);
  return l2_distance(f, g, grid) / l2_distance(g, zero, grid);
}

}  // namespace

TEST_CASE("haar coefficients for interior samples") {
  auto t = table_for("haar");
  BasisSpec j0 = make_basis(t, 0, 0.0, 1.0);
  std::vector<double> xs{0.1, 0.25, 0.4, 0.6, 0.9};
  CoefficientSet c = estimate_coefficients(j0, xs);
  CHECK(c.sample_size == 5);
  REQUIRE(c.alpha.count(0) == 1);
  CHECK(c.alpha.at(0)[0] == 1.0);
  CHECK(c.alpha.at(-1)[0] == 0.0);
  CHECK(c.alpha.at(1)[0] == 0.0);

  BasisSpec j1 = make_basis(t, 1, 0.0, 1.0);
  std::vector<double> lower{0.05, 0.2, 0.3, 0.45};
  CoefficientSet d = estimate_coefficients(j1, lower);
  CHECK(d.alpha.at(0)[0] ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d.alpha.at(1)[0] == 0.0);
}

TEST_CASE("vector coefficients match an independent direct loop") {
  MixtureDensity normal = density_by_name("normal");
  SampleResult draw = sample(normal, 10000, 17);
  auto t = table_for("dghm");
  BasisSpec spec = make_basis(t, 0, -4.0, 4.0);
  CoefficientSet c = estimate_coefficients(spec, draw.values);
  auto oracle = direct_alpha(spec, draw.values);
  REQUIRE(c.alpha.size() == oracle.size());
  for (const auto& [k, v] : oracle) {
    CAPTURE(k);
    REQUIRE(c.alpha.count(k) == 1);
    for (int i = 0; i < spec.multiplicity(); ++i)
      CHECK(c.alpha.at(k)[i] == doctest::Approx(v[i]).epsilon(1e-12));
  }
}

TEST_CASE("chunked accumulation equals the serial reference") {
  MixtureDensity claw = density_by_name("claw");
  SampleResult draw = sample(claw, 20000, 23);
  for (const char* name : {"db3", "dghm", "bal-sym4"}) {
    CAPTURE(name);
    BasisSpec spec = make_basis(table_for(name), 1, -4.0, 4.0);
    CoefficientSet par = estimate_coefficients(spec, draw.values, 2);
    CoefficientSet ser = estimate_coefficients_serial(spec, draw.values, 2);
    REQUIRE(par.alpha.size() == ser.alpha.size());
    for (const auto& [k, v] : ser.alpha) {
      for (int i = 0; i < spec.multiplicity(); ++i)
        CHECK(par.alpha.at(k)[i] == doctest::Approx(v[i]).epsilon(1e-12));
    }
    REQUIRE(par.beta.size() == 2);
    for (const auto& [j, row] : ser.beta) {
      for (const auto& [k, v] : row) {
        for (int i = 0; i < spec.multiplicity(); ++i)
          CHECK(par.beta.at(j).at(k)[i] == doctest::Approx(v[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("coefficient magnitudes respect the evaluation bound") {
  MixtureDensity normal = density_by_name("normal");
  SampleResult draw = sample(normal, 5000, 31);
  for (const char* name : {"haar", "db4", "dghm"}) {
    CAPTURE(name);
    auto t = table_for(name);
    for (int level : {0, 1, 2}) {
      BasisSpec spec = make_basis(t, level, -4.0, 4.0);
      CoefficientSet c = estimate_coefficients(spec, draw.values);
      for (int i = 0; i < spec.multiplicity(); ++i) {
        double node_max = 0.0;
        for (double v : t->phi[i]) node_max = std::max(node_max, std::fabs(v));
        // small headroom for spline values between nodes
        const double bound =
            spec.level_scale * node_max * 1.05 + 1e-12;
        for (const auto& [k, v] : c.alpha) {
          CAPTURE(k);
          CHECK(std::fabs(v[i]) <= bound);
          CHECK(std::isfinite(v[i]));
        }
      }
    }
  }
}

TEST_CASE("pooled samples give the weighted coefficient average") {
  MixtureDensity bimodal = density_by_name("bimodal");
  std::vector<double> xs = sample(bimodal, 3000, 41).values;
  std::vector<double> ys = sample(bimodal, 1000, 43).values;
  std::vector<double> pooled(xs);
  pooled.insert(pooled.end(), ys.begin(), ys.end());

  BasisSpec spec = make_basis(table_for("db5"), 1, -4.0, 4.0);
  CoefficientSet cx = estimate_coefficients(spec, xs);
  CoefficientSet cy = estimate_coefficients(spec, ys);
  CoefficientSet cp = estimate_coefficients(spec, pooled);
  const double wx = 3000.0 / 4000.0, wy = 1000.0 / 4000.0;
  for (const auto& [k, v] : cp.alpha) {
    const double merged = wx * cx.alpha.at(k)[0] + wy * cy.alpha.at(k)[0];
    CHECK(v[0] == doctest::Approx(merged).epsilon(1e-12));
  }
}

TEST_CASE("sample validation errors") {
  BasisSpec spec = make_basis(table_for("haar"), 0, 0.0, 1.0);
  std::vector<double> empty;
  CHECK_THROWS_AS(estimate_coefficients(spec, empty), std::invalid_argument);
  std::vector<double> stray{0.5, 2.5};
  CHECK_THROWS_WITH_AS(estimate_coefficients(spec, stray),
                       doctest::Contains("2.5"), std::invalid_argument);
  std::vector<double> ok{0.5};
  CHECK_THROWS_AS(estimate_coefficients(spec, ok, -1), std::invalid_argument);
}

TEST_CASE("reconstruct constant and zero series") {
  auto t = table_for("haar");
  BasisSpec spec = make_basis(t, 0, 0.0, 1.0);
  std::vector<double> xs{0.1, 0.3, 0.55, 0.72};
  DensityEstimate est = make_estimate(spec, xs);
  REQUIRE(est.coefficients.alpha.at(0)[0] == 1.0);
  // stay clear of the spline corner at the jump to 0 at x = 1
  QuadratureGrid grid = make_grid(0.0, 0.95, 513);
  std::vector<double> values = reconstruct(est, grid);
  for (double v : values) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));

  for (auto& [k, v] : est.coefficients.alpha) v.setZero();
  std::vector<double> zeroed = reconstruct(est, grid);
  for (double v : zeroed) CHECK(v == 0.0);
}

TEST_CASE("detail coefficients refine the estimate across scales") {
  // base level plus one detail level spans the same space as the next
  // finer scaling level
  MixtureDensity normal = density_by_name("normal");
  SampleResult draw = sample(normal, 4000, 53);
  auto t = table_for("db4");
  QuadratureGrid grid = make_grid(-4.0, 4.0, 2048);

  BasisSpec coarse = make_basis(t, -1, -4.0, 4.0);
  DensityEstimate with_detail = make_estimate(coarse, draw.values, 1);
  REQUIRE(with_detail.detail_levels == 1);
  REQUIRE(!with_detail.coefficients.beta.empty());

  BasisSpec fine = make_basis(t, 0, -4.0, 4.0);
  DensityEstimate direct = make_estimate(fine, draw.values);

  std::vector<double> a = reconstruct(with_detail, grid);
  std::vector<double> b = reconstruct(direct, grid);
  CHECK(rel_l2(a, b, grid) <= 1e-2);

  // without the detail level the two disagree badly
  DensityEstimate coarse_only = make_estimate(coarse, draw.values);
  std::vector<double> c = reconstruct(coarse_only, grid);
  CHECK(rel_l2(c, b, grid) > 1e-2);
}

TEST_CASE("two-block estimate at level j tracks the scalar parent at j+1") {
  MixtureDensity skewed = density_by_name("skewed-bimodal");
  SampleResult draw = sample(skewed, 10000, 61);
  QuadratureGrid grid = make_grid(-4.0, 4.0, 2048);

  DensityEstimate mw =
      make_estimate(make_basis(table_for("bal-db5"), 0, -4.0, 4.0), draw.values);
  DensityEstimate sc =
      make_estimate(make_basis(table_for("db5"), 1, -4.0, 4.0), draw.values);
  std::vector<double> f = reconstruct(mw, grid);
  std::vector<double> g = reconstruct(sc, grid);
  CHECK(rel_l2(f, g, grid) <= 1e-2);
}

TEST_CASE("raw estimate mass stays near one") {
  QuadratureGrid grid = make_grid(-4.0, 4.0, 4096);
  for (const char* family : {"db3", "dghm"}) {
    for (const char* density : {"normal", "claw"}) {
      CAPTURE(family);
      CAPTURE(density);
      SampleResult draw = sample(density_by_name(density), 10000, 71);
      DensityEstimate est = make_estimate(
          make_basis(table_for(family), 0, -4.0, 4.0), draw.values);
      std::vector<double> values = reconstruct(est, grid);
      CHECK(trapezoid(values, grid.step()) ==
            doctest::Approx(1.0).epsilon(0.05));
    }
  }
}

TEST_CASE("normalization fixes mass and sign") {
  SUBCASE("valid pdf is a fixed point") {
    QuadratureGrid grid = make_grid(-4.0, 4.0, 4096);
    MixtureDensity normal = density_by_name("normal");
    std::vector<double> values(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i)
      values[i] = normal.pdf(grid.x_at(i));
    const double mass = trapezoid(values, grid.step());
    for (double& v : values) v /= mass;
    std::vector<double> before = values;
    NormalizationDiagnostics diag = normalize_values(values, grid);
    for (std::size_t i = 0; i < values.size(); ++i)
      CHECK(values[i] == doctest::Approx(before[i]).epsilon(1e-12));
    CHECK(diag.negative_mass_removed == 0.0);
    CHECK(diag.final_mass == doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("one clip and rescale on a two-cell example") {
    QuadratureGrid grid = make_grid(0.0, 2.0, 2);
    std::vector<double> values{-0.1, 1.1};
    NormalizationDiagnostics diag = normalize_values(values, grid);
    CHECK(values[0] == 0.0);
    CHECK(values[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(diag.raw_mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(diag.negative_mass_removed > 0.0);
    CHECK(diag.final_mass == doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("normalizing a raw estimate never hurts and here helps") {
    QuadratureGrid grid = make_grid(-4.0, 4.0, 4096);
    MixtureDensity normal = density_by_name("normal");
    SampleResult draw = sample(normal, 10000, 83);
    DensityEstimate est = make_estimate(
        make_basis(table_for("db2"), 0, -4.0, 4.0), draw.values);
    std::vector<double> truth(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i)
      truth[i] = normal.pdf(grid.x_at(i));

    std::vector<double> raw = reconstruct(est, grid);
    const double ise_raw = ise(raw, truth, grid);

    std::vector<double> fixed;
    DensityEstimate done = normalize(est, grid, fixed);
    const double ise_fixed = ise(fixed, truth, grid);
    CHECK(ise_fixed < ise_raw);
    CHECK(done.normalized);
    CHECK(done.normalization.final_mass == doctest::Approx(1.0).epsilon(1e-6));
    for (double v : fixed) CHECK(v >= 0.0);
    CHECK(trapezoid(fixed, grid.step()) == doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("degenerate input cannot be normalized") {
    QuadratureGrid grid = make_grid(0.0, 1.0, 64);
    std::vector<double> values(64, -0.5);
    CHECK_THROWS_AS(normalize_values(values, grid), std::runtime_error);
    std::vector<double> wrong(63, 1.0);
    CHECK_THROWS_AS(normalize_values(wrong, grid), std::invalid_argument);
  }
}

TEST_CASE("estimates sharpen with sample size") {
  QuadratureGrid grid = make_grid(-4.0, 4.0, 4096);
  MixtureDensity normal = density_by_name("normal");
  std::vector<double> truth(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i)
    truth[i] = normal.pdf(grid.x_at(i));
  BasisSpec spec = make_basis(table_for("stt"), 1, -4.0, 4.0);

  double previous = 0.0;
  bool first = true;
  for (std::size_t n : {100, 1000, 10000, 100000}) {
    CAPTURE(n);
    SampleResult draw = sample(normal, n, 97);
    DensityEstimate est = make_estimate(spec, draw.values);
    std::vector<double> values;
    normalize(est, grid, values);
    const double err = ise(values, truth, grid);
    if (!first) CHECK(err <= previous * 1.2);
    previous = err;
    first = false;
  }
  CHECK(previous <= 5e-3);
}

TEST_CASE("estimate export round trips") {
  auto t = table_for("dghm");
  BasisSpec spec = make_basis(t, 0, 0.0, 1.0);
  std::vector<double> xs{0.2, 0.4, 0.6, 0.8};
  DensityEstimate est = make_estimate(spec, xs);
  QuadratureGrid grid = make_grid(0.0, 1.0, 17);
  std::vector<double> values = reconstruct(est, grid);

  std::ostringstream csv;
  write_estimate_csv(grid, values, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,p_hat");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == grid.points);

  nlohmann::json sidecar = nlohmann::json::parse(estimate_sidecar_json(est));
  CHECK(sidecar.contains("filter"));
  CHECK(sidecar.contains("level"));
  REQUIRE(sidecar.contains("alpha"));
  CHECK(sidecar["alpha"].size() ==
        static_cast<std::size_t>(spec.translate_count()));
  CHECK(sidecar["coefficient_count"].get<int>() ==
        spec.coefficient_count());
  CHECK(sidecar["sample_size"].get<int>() == 4);
  CHECK(sidecar["normalized"].get<bool>() == false);
}
