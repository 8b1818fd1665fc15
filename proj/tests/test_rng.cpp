#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "mwde/rng.hpp"

using namespace mwde;

// Expected values below were produced by a separate Python transcription of
// the published splitmix64 / xoshiro256++ / FNV-1a reference algorithms and
// by scipy.stats.norm.ppf.

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 g0(0);
  CHECK(g0.next() == UINT64_C(0xe220a8397b1dcdaf));
  CHECK(g0.next() == UINT64_C(0x6e789e6aa1b965f4));
  CHECK(g0.next() == UINT64_C(0x06c45d188009454f));
  SplitMix64 g42(42);
  CHECK(g42.next() == UINT64_C(0xbdd732262feb6e95));
  CHECK(g42.next() == UINT64_C(0x28efe333b266f103));
  CHECK(g42.next() == UINT64_C(0x47526757130f9f52));
}

TEST_CASE("xoshiro256++ reference stream") {
  Xoshiro256pp a(1);
  CHECK(a.next() == UINT64_C(0xcfc5d07f6f03c29b));
  CHECK(a.next() == UINT64_C(0xbf424132963fe08d));
  CHECK(a.next() == UINT64_C(0x19a37d5757aaf520));
  CHECK(a.next() == UINT64_C(0xbf08119f05cd56d6));
  Xoshiro256pp b(123456789);
  CHECK(b.next() == UINT64_C(0x99e6bd73ed3f23b6));
  CHECK(b.next() == UINT64_C(0xc23a804d68730d49));
  CHECK(b.next() == UINT64_C(0x650e013620979041));
  CHECK(b.next() == UINT64_C(0x6f44f98493c7f9c3));
}

TEST_CASE("uniform01 bit-exact and inside (0,1)") {
  Xoshiro256pp g(7);
  CHECK(g.uniform01() == 0.055360436478333164);
  CHECK(g.uniform01() == 0.17211585444811778);
  CHECK(g.uniform01() == 0.7175761283586595);
  CHECK(g.uniform01() == 0.4272098192915053);
  Xoshiro256pp h(99);
  for (int i = 0; i < 100000; ++i) {
    double u = h.uniform01();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("identical seeds give identical streams") {
  Xoshiro256pp a(555), b(555);
  for (int i = 0; i < 64; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("normal quantile matches reference values") {
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-15));
  CHECK(normal_quantile(0.9) == doctest::Approx(1.2815515655446004).epsilon(1e-15));
  CHECK(normal_quantile(0.01) == doctest::Approx(-2.3263478740408408).epsilon(1e-15));
  CHECK(normal_quantile(0.25) == doctest::Approx(-0.6744897501960817).epsilon(1e-15));
  CHECK(normal_quantile(0.6) == doctest::Approx(0.2533471031357997).epsilon(1e-15));
  // tail branches
  CHECK(normal_quantile(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-15));
  CHECK(normal_quantile(1e-300) == doctest::Approx(-37.0470962993612).epsilon(1e-14));
}

TEST_CASE("normal quantile symmetry and edge handling") {
  // 1-p must be well conditioned for this identity to hold at fp precision,
  // so only moderate p are checked here; tails are covered by the cdf
  // round-trip below.
  for (double p : {0.31, 0.12, 0.05, 0.25}) {
    CHECK(normal_quantile(p) == doctest::Approx(-normal_quantile(1.0 - p)).epsilon(1e-12));
  }
  CHECK(std::isinf(normal_quantile(0.0)));
  CHECK(normal_quantile(0.0) < 0.0);
  CHECK(std::isinf(normal_quantile(1.0)));
  CHECK(normal_quantile(1.0) > 0.0);
  CHECK_THROWS_AS(normal_quantile(-0.1), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.5), std::domain_error);
}

TEST_CASE("normal quantile round-trips the normal cdf") {
  // Phi(q(p)) == p via erfc; checks all three rational branches agree with
  // the analytic cdf rather than with each other.
  for (double p : {0.9, 0.6, 0.4999, 0.05, 1e-3, 1e-7, 1e-12, 1e-30}) {
    double q = normal_quantile(p);
    double back = 0.5 * std::erfc(-q / std::sqrt(2.0));
    CHECK(back == doctest::Approx(p).epsilon(1e-10));
  }
}

TEST_CASE("stable_hash is FNV-1a 64") {
  CHECK(stable_hash("") == UINT64_C(0xcbf29ce484222325));
  CHECK(stable_hash("a") == UINT64_C(0xaf63dc4c8601ec8c));
  CHECK(stable_hash("seed=1|density=normal") == UINT64_C(0x219fb0288587aed2));
  CHECK(stable_hash("seed=1|density=normal") != stable_hash("seed=1|density=claw"));
}
