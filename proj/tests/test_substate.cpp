#include <cmath>
#include <vector>

#include "doctest.h"
#include "qdist/linalg.hpp"
#include "qdist/measures.hpp"
#include "qdist/rng.hpp"
#include "qdist/states.hpp"
#include "qdist/substate.hpp"
#include "support/l1_min_oracle.hpp"

using namespace qdist;

TEST_CASE("clip distance fixtures") {
  const ProbVector u{{0.5, 0.5}};
  const auto same = substate_min_distance_classical(u, u, 0.0, 2.0);
  CHECK(same.min_distance == 0.0);
  CHECK(same.clipped_mass == 0.0);
  CHECK(same.witness_pr.p == u.p);

  // capacity 8 covers everything
  const auto slack =
      substate_min_distance_classical(ProbVector{{1.0, 0.0}}, ProbVector{{0.5, 0.5}}, 1.0, 2.0);
  CHECK(slack.capacity == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(slack.min_distance == 0.0);

  // capacity 5: cell caps (0.05, 4.95), so 0.95 mass moves
  const auto tight = substate_min_distance_classical(ProbVector{{1.0, 0.0}},
                                                     ProbVector{{0.01, 0.99}}, 0.0, 1.25);
  CHECK(tight.capacity == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(tight.clipped_mass == doctest::Approx(0.95).epsilon(1e-12));
  CHECK(tight.min_distance == doctest::Approx(1.9).epsilon(1e-12));
  CHECK(tight.witness_pr.p[0] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(tight.witness_pr.p[1] == doctest::Approx(0.95).epsilon(1e-12));
}

TEST_CASE("clip witness is feasible and achieves the reported distance") {
  SplitMix64 g(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 7);
    const auto p = random_distribution(n, g.next_u64());
    const auto q = random_distribution(n, g.next_u64());
    const double k = 4.0 * g.uniform01();
    const double r = 1.0 + 3.0 * g.uniform01_open_low();
    const auto w = substate_min_distance_classical(p, q, k, r);

    CHECK_NOTHROW(w.witness_pr.validate());
    double dist = 0.0;
    const double damp = (1.0 - 1.0 / r) * std::exp2(-r * k);
    for (std::size_t i = 0; i < p.p.size(); ++i) {
      dist += std::fabs(p.p[i] - w.witness_pr.p[i]);
      // domination: q_i - (1 - 1/r) pr_i / 2^{rk} stays nonnegative
      CHECK(q.p[i] - damp * w.witness_pr.p[i] >= -1e-12);
    }
    CHECK(dist == doctest::Approx(w.min_distance).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("zero-capacity cells stay empty") {
  const auto w = substate_min_distance_classical(ProbVector{{0.4, 0.6}},
                                                 ProbVector{{1.0, 0.0}}, 2.0, 2.0);
  CHECK(w.witness_pr.p[1] == 0.0);
  CHECK(w.min_distance == doctest::Approx(1.2).epsilon(1e-12));

  // huge rk overflows the capacity to +inf; constraints go slack
  const auto big = substate_min_distance_classical(ProbVector{{0.4, 0.6}},
                                                   ProbVector{{0.5, 0.5}}, 500.0, 3.0);
  CHECK(big.min_distance == 0.0);
}

TEST_CASE("clip distance matches the transfer-descent reference") {
  SplitMix64 g(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 3);  // 2..4
    const auto p = random_distribution(n, g.next_u64());
    const auto q = random_distribution(n, g.next_u64());
    const double k = 2.0 * g.uniform01();
    const double r = 1.0 + 3.0 * g.uniform01_open_low();
    const double c = (r / (r - 1.0)) * std::exp2(r * k);
    const double clip = substate_min_distance_classical(p, q, k, r).min_distance;
    const double ref = l1_min_by_transfer(p.p, q.p, c);
    CHECK(clip == doctest::Approx(ref).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("min distance is nonincreasing in k") {
  SplitMix64 g(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 5);
    const auto p = random_distribution(n, g.next_u64());
    const auto q = random_distribution(n, g.next_u64());
    const double r = 1.0 + 3.0 * g.uniform01_open_low();
    double prev = kInfBits;
    for (double k : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      const double d = substate_min_distance_classical(p, q, k, r).min_distance;
      CHECK(d <= prev + 1e-12);
      prev = d;
    }
  }
}

TEST_CASE("default_r_grid endpoints and shape") {
  const auto grid = default_r_grid();
  REQUIRE(grid.size() == 64);
  CHECK(grid.front() == 1.0 + std::exp2(-6.0));
  CHECK(grid.back() == 1024.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) CHECK(grid[i] < grid[i + 1]);
}

TEST_CASE("substate property holds and fails where expected") {
  const ProbVector u{{0.5, 0.5}};
  CHECK(has_substate_property_classical(u, u, 0.0).holds);

  const ProbVector point{{1.0, 0.0}};
  const ProbVector skew{{0.01, 0.99}};
  CHECK(has_substate_property_classical(point, skew, 10.0).holds);
  const auto fail = has_substate_property_classical(point, skew, 0.0);
  CHECK_FALSE(fail.holds);
  CHECK(fail.worst_margin > 0.0);
  CHECK(fail.worst_distance > 2.0 / fail.worst_r);
}

TEST_CASE("substate_k brackets the transition") {
  CHECK(substate_k_classical(ProbVector{{0.5, 0.5}}, ProbVector{{0.5, 0.5}}) == 0.0);
  CHECK(std::isinf(substate_k_classical(ProbVector{{0.5, 0.5}}, ProbVector{{1.0, 0.0}})));

  SplitMix64 g(64);
  const double precision = 1e-4;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 5);
    const auto p = random_distribution(n, g.next_u64());
    const auto q = random_distribution(n, g.next_u64());
    const double k = substate_k_classical(p, q, precision);
    REQUIRE(std::isfinite(k));
    CHECK(has_substate_property_classical(p, q, k).holds);
    if (k > 2.0 * precision + 1e-12)
      CHECK_FALSE(has_substate_property_classical(p, q, k - 2.0 * precision).holds);
    // minimal k never exceeds the strong-substate exponent
    CHECK(k <= strong_substate_k(p, q) + precision + 1e-12);
  }
}

TEST_CASE("substate_k respects the divergence cap") {
  SplitMix64 g(75);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_distribution(6, g.next_u64());
    const auto q = random_distribution(6, g.next_u64());
    const double d = divergence_classical_exact(p, q).value;
    const double k = substate_k_classical(p, q);
    CHECK(k <= 8.0 * d + 14.0 + 1e-4 + 1e-12);
  }
}

TEST_CASE("strong substate exponent") {
  const DensityMatrix mixed{CMat::diag({0.5, 0.5})};
  CHECK(strong_substate_k(mixed, mixed) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(strong_substate_k(ProbVector{{1.0, 0.0}}, ProbVector{{0.5, 0.5}}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(strong_substate_k(mixed, DensityMatrix{CMat::diag({1.0, 0.0})})));

  SplitMix64 g(86);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 4);
    const auto rho = random_density(n, g.next_u64());
    const auto sigma = random_density(n, g.next_u64());
    const double k = strong_substate_k(rho, sigma);
    REQUIRE(std::isfinite(k));
    CHECK(k >= 0.0);
    // sigma - rho/2^k is psd at k and stops being psd just below it
    const CMat holds = sigma.mat - std::exp2(-k) * rho.mat;
    CHECK(is_psd(holds, 1e-8));
    if (k > 0.02) {
      const CMat broken = sigma.mat - std::exp2(-(k - 0.01)) * rho.mat;
      CHECK_FALSE(is_psd(broken, 1e-12));
    }
    // relative entropy never exceeds the exponent
    CHECK(rel_entropy_quantum(rho, sigma) <= k + 1e-9);
  }
}

TEST_CASE("verified inequalities on random classical pairs") {
  SplitMix64 g(97);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 5);
    const auto p = random_distribution(n, g.next_u64());
    const auto q = random_distribution(n, g.next_u64());

    const auto spot = verify_part5_classical(p, q);
    CHECK(spot.pass);
    CHECK_FALSE(spot.vacuous);

    const double k = substate_k_classical(p, q);
    const auto converse = verify_part6(p, q, k, 1e-4);
    CHECK(converse.pass);
    CHECK(converse.precondition_ok);
    CHECK_FALSE(converse.vacuous);
  }
}

TEST_CASE("verified inequalities on random quantum pairs") {
  SplitMix64 g(108);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 4);
    const auto rho = random_density(n, g.next_u64());
    const auto sigma = random_density(n, g.next_u64());
    const auto chk = verify_part7(rho, sigma);
    CHECK(chk.pass);
    CHECK_FALSE(chk.vacuous);
    CHECK(chk.margin >= -1e-6);
  }
}

TEST_CASE("strong substate bound is tight on the point-mass fixture") {
  const DensityMatrix rho{CMat::diag({1.0, 0.0})};
  const DensityMatrix sigma{CMat::diag({0.5, 0.5})};
  const auto chk = verify_part7(rho, sigma);
  CHECK(chk.pass);
  CHECK(chk.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(chk.rhs == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("vacuous cases are flagged, not passed silently") {
  const ProbVector p{{0.5, 0.5}};
  const ProbVector q{{1.0, 0.0}};
  const auto spot = verify_part5_classical(p, q);
  CHECK(spot.vacuous);
  const auto converse = verify_part6(p, q, 3.0);
  CHECK(converse.vacuous);

  const DensityMatrix mixed{CMat::diag({0.5, 0.5})};
  const DensityMatrix pure{CMat::diag({1.0, 0.0})};
  CHECK(verify_part7(mixed, pure).vacuous);
}
