#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qdist/linalg.hpp"
#include "qdist/rng.hpp"
#include "qdist/states.hpp"

using namespace qdist;

TEST_CASE("ProbVector validation") {
  CHECK_NOTHROW(ProbVector{{0.5, 0.5}}.validate());
  CHECK_NOTHROW(ProbVector{{1.0, 0.0}}.validate());
  CHECK_THROWS_AS((ProbVector{{0.5, 0.4}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ProbVector{{1.5, -0.5}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ProbVector{{}}.validate()), std::invalid_argument);
}

TEST_CASE("DensityMatrix validation") {
  DensityMatrix rho{CMat::diag({0.5, 0.5})};
  CHECK_NOTHROW(rho.validate());
  DensityMatrix bad_trace{CMat::diag({0.5, 0.6})};
  CHECK_THROWS_AS(bad_trace.validate(), std::invalid_argument);
  DensityMatrix not_psd{CMat::diag({1.5, -0.5})};
  CHECK_THROWS_AS(not_psd.validate(), std::invalid_argument);
  CMat nh(2);
  nh(0, 0) = 0.5;
  nh(1, 1) = 0.5;
  nh(0, 1) = 0.3;
  DensityMatrix not_herm{nh};
  CHECK_THROWS_AS(not_herm.validate(), std::invalid_argument);
}

TEST_CASE("trace distance on distributions") {
  CHECK(trace_distance(ProbVector{{1.0, 0.0}}, ProbVector{{0.0, 1.0}}) == doctest::Approx(2.0));
  CHECK(trace_distance(ProbVector{{0.7, 0.3}}, ProbVector{{0.5, 0.5}}) == doctest::Approx(0.4));
  CHECK(trace_distance(ProbVector{{0.25, 0.75}}, ProbVector{{0.25, 0.75}}) == 0.0);
}

TEST_CASE("trace distance on density matrices") {
  const DensityMatrix a{CMat::diag({1.0, 0.0})};
  const DensityMatrix b{CMat::diag({0.0, 1.0})};
  CHECK(trace_distance(a, b) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace_distance(a, a) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));

  // classical embedding agrees with the vector version
  const DensityMatrix c{CMat::diag({0.7, 0.3})};
  const DensityMatrix d{CMat::diag({0.5, 0.5})};
  CHECK(trace_distance(c, d) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("trace distance satisfies the triangle inequality") {
  SplitMix64 g(314);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 5);
    const auto a = random_density(n, g.next_u64());
    const auto b = random_density(n, g.next_u64());
    const auto c = random_density(n, g.next_u64());
    CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-9);
    const auto p = random_distribution(n, g.next_u64());
    const auto q = random_distribution(n, g.next_u64());
    const auto r = random_distribution(n, g.next_u64());
    CHECK(trace_distance(p, r) <= trace_distance(p, q) + trace_distance(q, r) + 1e-9);
  }
}

TEST_CASE("random_density produces valid deterministic states") {
  const auto one = random_density(1, 3);
  CHECK(one.mat.dim() == 1);
  CHECK(one.mat(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));

  const auto a = random_density(5, 7);
  const auto b = random_density(5, 7);
  CHECK((a.mat - b.mat).max_abs() == 0.0);

  SplitMix64 g(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(g.next_u64() % 8);
    const auto rho = random_density(n, g.next_u64());
    CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-12);
    CHECK(std::abs(rho.mat.trace().imag()) < 1e-12);
    CHECK(rho.mat.hermiticity_error() < 1e-12);
    CHECK(is_psd(rho.mat, 1e-9));
  }
}

TEST_CASE("random_distribution produces valid deterministic vectors") {
  const auto a = random_distribution(6, 11);
  const auto b = random_distribution(6, 11);
  CHECK(a.p == b.p);
  SplitMix64 g(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(g.next_u64() % 10);
    const auto p = random_distribution(n, g.next_u64());
    REQUIRE(p.dim() == n);
    double sum = 0.0;
    for (double x : p.p) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measurement in the second state's eigenbasis") {
  const DensityMatrix rho{CMat::diag({0.3, 0.7})};
  const DensityMatrix sigma{CMat::diag({0.25, 0.75})};
  const auto [pr, ps] = measure_in_eigenbasis(rho, sigma);
  CHECK(pr.p[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(pr.p[1] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(ps.p[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ps.p[1] == doctest::Approx(0.75).epsilon(1e-12));

  // sigma maximally mixed: the sigma-side outcome is uniform whatever rho is
  CMat plus(2);
  plus(0, 0) = 0.5;
  plus(0, 1) = 0.5;
  plus(1, 0) = 0.5;
  plus(1, 1) = 0.5;
  const DensityMatrix rho_plus{plus};
  const DensityMatrix mixed{CMat::diag({0.5, 0.5})};
  const auto [qr, qs] = measure_in_eigenbasis(rho_plus, mixed);
  CHECK(qs.p[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qs.p[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qr.p[0] + qr.p[1] == doctest::Approx(1.0).epsilon(1e-12));

  SplitMix64 g(2718);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 5);
    const auto a = random_density(n, g.next_u64());
    const auto b = random_density(n, g.next_u64());
    const auto [pa, pb] = measure_in_eigenbasis(a, b);
    double sa = 0.0, sb = 0.0;
    for (double x : pa.p) {
      CHECK(x >= -1e-12);
      sa += x;
    }
    for (double x : pb.p) {
      CHECK(x >= -1e-12);
      sb += x;
    }
    CHECK(sa == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sb == doctest::Approx(1.0).epsilon(1e-10));
  }
}
