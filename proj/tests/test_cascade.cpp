#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mwde/cascade.hpp"
#include "mwde/multifilter.hpp"

using namespace mwde;

namespace {

// Direct inner-product oracle, written independently of the library's
// residual helper: plain Riemann sums of component pairs at integer lags.
double direct_orthonormality(const ScalingTable& t) {
  const int r = t.multiplicity();
  const long span = 1L << t.depth;
  const long nodes = static_cast<long>(t.nodes());
  const int max_lag = t.filter.support_length();
  double worst = 0.0;
  auto inner = [&](const std::vector<double>& a, const std::vector<double>& b,
                   long lag_nodes) {
    double acc = 0.0;
    for (long n = 0; n < nodes; ++n) {
      long m = n - lag_nodes;
      if (m < 0 || m >= nodes) continue;
      acc += a[n] * b[m];
    }
    return acc * t.step();
  };
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        double phiphi = inner(t.phi[i], t.phi[j], lag * span);
        double want = (lag == 0 && i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::fabs(phiphi - want));
        if (t.has_psi()) {
          double psipsi = inner(t.psi[i], t.psi[j], lag * span);
          worst = std::max(worst, std::fabs(psipsi - want));
          worst = std::max(worst, std::fabs(inner(t.phi[i], t.psi[j], lag * span)));
        }
      }
    }
  }
  return worst;
}

ScalingTable run(const std::string& name, int max_iters = 200) {
  CascadeOptions options;
  options.max_iters = max_iters;
  return cascade(load_filter(name), options);
}

}  // namespace

TEST_CASE("haar table is the exact indicator at every node") {
  ScalingTable t = run("haar");
  CHECK(t.iterations == 1);
  CHECK(t.refinement_residual == 0.0);
  for (double d : t.defect_trace) CHECK(d == 0.0);
  const long nodes = static_cast<long>(t.nodes());
  for (long n = 0; n < nodes - 1; ++n) CHECK(t.phi[0][n] == 1.0);
  CHECK(t.phi[0][nodes - 1] == 0.0);
  REQUIRE(t.has_psi());
  for (long n = 0; n < nodes - 1; ++n) {
    double want = (2 * n < nodes - 1) ? 1.0 : -1.0;
    CHECK(t.psi[0][n] == want);
  }
}

TEST_CASE("balanced haar reproduces the two-block closed form exactly") {
  ScalingTable t = run("bal-haar");
  CHECK(t.refinement_residual == 0.0);
  const long nodes = static_cast<long>(t.nodes());
  const long half = (nodes - 1) / 2;
  const double s2 = std::sqrt(2.0);
  for (long n = 0; n < nodes; ++n) {
    CHECK(t.phi[0][n] == ((n < half) ? s2 : 0.0));
    CHECK(t.phi[1][n] == ((n >= half && n < nodes - 1) ? s2 : 0.0));
  }
}

TEST_CASE("initializer blocks are orthonormal piecewise constants") {
  for (int r : {1, 2, 3}) {
    CAPTURE(r);
    auto init = cascade_initializer(r, 10, 0, 4);
    REQUIRE(static_cast<int>(init.size()) == r);
    const double step = std::ldexp(1.0, -10);
    const double height = std::sqrt(static_cast<double>(r));
    for (int i = 0; i < r; ++i) {
      double mass = 0.0, l2 = 0.0;
      for (double v : init[i]) {
        CHECK((v == 0.0 || v == height));
        mass += v * step;
        l2 += v * v * step;
      }
      // Block edges at i/r are not dyadic when r does not divide 2^depth,
      // so the grid quantizes each block width by up to step.
      const double quant = ((1L << 10) % r == 0) ? 1e-9 : 4.0 * r / (1 << 10);
      CHECK(l2 == doctest::Approx(1.0).epsilon(quant));
      CHECK(mass == doctest::Approx(1.0 / height).epsilon(quant));
    }
    // blocks are disjoint
    for (size_t n = 0; n < init[0].size(); ++n) {
      int live = 0;
      for (int i = 0; i < r; ++i) live += init[i][n] != 0.0;
      CHECK(live <= 1);
    }
  }
}

TEST_CASE("dghm orthonormality against the direct oracle") {
  ScalingTable t = run("dghm");
  CHECK(t.refinement_residual <= 1e-8);
  CHECK(direct_orthonormality(t) <= 1e-3);
}

TEST_CASE("every family converges with compact support and orthonormality") {
  for (const auto& name : builtin_filter_names()) {
    CAPTURE(name);
    ScalingTable t = run(name);
    CHECK(t.refinement_residual <= 1e-8);
    CHECK(direct_orthonormality(t) <= 1e-3);
    const long nodes = static_cast<long>(t.nodes());
    bool indicator_family = name == "haar" || name == "bal-haar";
    if (!indicator_family) {
      for (int i = 0; i < t.multiplicity(); ++i) {
        CHECK(std::fabs(t.phi[i][0]) <= 1e-7);
        CHECK(std::fabs(t.phi[i][nodes - 1]) <= 1e-7);
      }
    }
    for (int i = 0; i < t.multiplicity(); ++i) {
      for (double v : t.phi[i]) CHECK(std::isfinite(v));
    }
  }
}

TEST_CASE("defect trace decreases within slack after its peak") {
  for (const char* name : {"db2", "db5", "sym7", "coif1", "dmey", "dghm",
                           "stt", "cl3", "bal-db5"}) {
    CAPTURE(name);
    ScalingTable t = run(name);
    const auto& trace = t.defect_trace;
    REQUIRE(!trace.empty());
    size_t peak = std::max_element(trace.begin(), trace.end()) - trace.begin();
    for (size_t i = peak; i + 1 < trace.size(); ++i) {
      CHECK(trace[i + 1] <= trace[i] * 1.1 + 1e-12);
    }
  }
}

TEST_CASE("partition of unity for scalar Daubechies") {
  for (const char* name : {"db2", "db5", "db8"}) {
    CAPTURE(name);
    ScalingTable t = run(name);
    const long span = 1L << t.depth;
    const long nodes = static_cast<long>(t.nodes());
    // sum phi(x - k) over every translate hitting x = l + m/2^d
    for (long m = 0; m < span; ++m) {
      double sum = 0.0;
      for (long idx = m; idx < nodes; idx += span) sum += t.phi[0][idx];
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("psi has zero mean") {
  for (const char* name : {"db5", "coif3", "dghm", "stt", "bal-sym6"}) {
    CAPTURE(name);
    ScalingTable t = run(name);
    REQUIRE(t.has_psi());
    for (int i = 0; i < t.multiplicity(); ++i) {
      double mass = 0.0;
      for (double v : t.psi[i]) mass += v;
      mass *= t.step();
      CHECK(std::fabs(mass) <= 1e-5);
    }
  }
}

TEST_CASE("db2 exhausts the default budget gracefully, converges with more") {
  ScalingTable capped = cascade(load_filter("db2"), CascadeOptions{});
  CHECK(capped.iterations == 40);
  CHECK(capped.refinement_residual > 1e-8);
  CHECK(capped.refinement_residual < 1e-5);

  CascadeOptions more;
  more.max_iters = 60;
  ScalingTable full = cascade(load_filter("db2"), more);
  CHECK(full.iterations < 60);
  CHECK(full.refinement_residual <= 1e-8);
}

TEST_CASE("a non-convergent filter raises a stagnation error with trace") {
  // Member of the one-parameter orthogonal 4-tap family with too little
  // smoothness for the iteration to settle (theta = 2; db2 is theta = pi/3).
  const double theta = 2.0;
  const double c = std::cos(theta), s = std::sin(theta), d = 2.0 * std::sqrt(2.0);
  Multifilter f;
  f.name = "rough4";
  f.multiplicity = 1;
  f.support_lo = 0;
  f.support_hi = 3;
  for (double v : {(1 - c + s) / d, (1 + c + s) / d, (1 + c - s) / d,
                   (1 - c - s) / d}) {
    f.lowpass.push_back(Eigen::MatrixXd::Constant(1, 1, v));
  }
  for (int k = 0; k < 4; ++k) {
    f.highpass.push_back((k % 2 ? -1.0 : 1.0) * f.lowpass[3 - k]);
  }
  CHECK(orthogonality_residual(f.lowpass) <= 1e-12);

  CascadeOptions options;
  options.max_iters = 80;
  try {
    cascade(f, options);
    FAIL("expected a stagnation error");
  } catch (const CascadeError& e) {
    CHECK(std::string(e.what()).find("stagnat") != std::string::npos);
    CHECK(e.defect_trace.size() >= 16);
    CHECK(e.defect_trace.back() > 1e-8);
  }
}

TEST_CASE("option preconditions are enforced") {
  Multifilter f = load_filter("db3");
  CascadeOptions bad;
  bad.depth = 3;
  CHECK_THROWS_AS(cascade(f, bad), std::invalid_argument);
  bad = CascadeOptions{};
  bad.tol = 0.0;
  CHECK_THROWS_AS(cascade(f, bad), std::invalid_argument);
  bad = CascadeOptions{};
  bad.max_iters = 0;
  CHECK_THROWS_AS(cascade(f, bad), std::invalid_argument);
}

TEST_CASE("balanced db5 components are the compressed translates of db5") {
  ScalingTable s = run("db5");
  ScalingTable b = run("bal-db5");
  REQUIRE(s.depth == b.depth);
  const long span = 1L << b.depth;
  const long bn = static_cast<long>(b.nodes());
  const long sn = static_cast<long>(s.nodes());
  const double s2 = std::sqrt(2.0);
  double worst = 0.0;
  for (long n = 0; n < bn; ++n) {
    long i1 = 2 * n;
    long i2 = 2 * n - span;
    double ref1 = (i1 >= 0 && i1 < sn) ? s2 * s.phi[0][i1] : 0.0;
    double ref2 = (i2 >= 0 && i2 < sn) ? s2 * s.phi[0][i2] : 0.0;
    worst = std::max(worst, std::fabs(b.phi[0][n] - ref1));
    worst = std::max(worst, std::fabs(b.phi[1][n] - ref2));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("table CSV has the right shape") {
  ScalingTable t = run("dghm");
  std::ostringstream out;
  write_table_csv(t, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,phi_1,phi_2,psi_1,psi_2");
  size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == t.nodes());
  ScalingTable h = run("haar");
  std::ostringstream out2;
  write_table_csv(h, out2);
  std::string header2;
  std::istringstream in2(out2.str());
  std::getline(in2, header2);
  CHECK(header2 == "x,phi_1,psi_1");
}
