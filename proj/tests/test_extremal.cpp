#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qdist/extremal.hpp"
#include "qdist/measures.hpp"
#include "qdist/states.hpp"
#include "qdist/substate.hpp"

using namespace qdist;

TEST_CASE("family at a=2, k=1, n=4 in exact dyadic arithmetic") {
  const auto [p, q] = part4_family({2.0, 1.0, 4});
  REQUIRE(p.dim() == 4);
  CHECK(p.p[0] == 0.5);
  CHECK(p.p[1] == 0.25);
  CHECK(p.p[2] == 0.125);
  CHECK(p.p[3] == 0.125);
  // q_i = p_i / 2^{k a^{i-1}} for i >= 2, q_1 absorbs the rest: 1903/2048
  CHECK(q.p[0] == 0.92919921875);
  CHECK(q.p[1] == 0.0625);
  CHECK(q.p[2] == 0.0078125);
  CHECK(q.p[3] == 0.00048828125);
  CHECK_NOTHROW(p.validate());
  CHECK_NOTHROW(q.validate());
}

TEST_CASE("log form agrees with the double form when q is representable") {
  const ExtremalParams params{2.0, 1.0, 4};
  const auto [p, q] = part4_family(params);
  const auto lg = part4_family_log(params);
  REQUIRE(lg.p.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(lg.p[static_cast<std::size_t>(i)] == p.p[static_cast<std::size_t>(i)]);
    CHECK(std::exp2(lg.log2_q[static_cast<std::size_t>(i)]) ==
          doctest::Approx(q.p[static_cast<std::size_t>(i)]).epsilon(1e-12));
  }
  CHECK(lg.q_tail == doctest::Approx(0.0625 + 0.0078125 + 0.00048828125).epsilon(1e-14));
}

TEST_CASE("p sums to one across the parameter sweep") {
  for (double a : {2.0, 4.0, 16.0, 64.0})
    for (double k : {0.5, 1.0, 2.0})
      for (int n : {4, 6, 8}) {
        const auto lg = part4_family_log({a, k, n});
        double sum = 0.0;
        for (double x : lg.p) {
          CHECK(x > 0.0);
          sum += x;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      }
}

TEST_CASE("gap report fixtures") {
  const auto small = part4_gap_report({2.0, 1.0, 4});
  CHECK(small.s == doctest::Approx(1.5529700768629890555).epsilon(1e-12));
  CHECK(small.d == doctest::Approx(1.4100454549925327657).epsilon(1e-12));
  CHECK(small.s_lower == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(small.ratio == doctest::Approx(0.36712057079777218518).epsilon(1e-12));
  CHECK(small.s_above_lower);
  CHECK(small.s_above_gap_bound);
  CHECK(small.d_within_cap);

  const auto big = part4_gap_report({64.0, 1.0, 8});
  CHECK(big.s == doctest::Approx(6.8838849246952302755).epsilon(1e-12));
  CHECK(big.d == doctest::Approx(1.0003550011953138052).epsilon(1e-12));
  CHECK(big.s_lower == doctest::Approx(5.90625).epsilon(1e-15));
  CHECK(big.s > 5.0);  // relative entropy clears k(n-2) - 1 despite d staying near 1
  CHECK(big.s_above_lower);
  CHECK(big.s_above_gap_bound);
  CHECK(big.d_within_cap);
}

TEST_CASE("gap inequalities hold across the sweep, ratio grows with a") {
  for (double k : {0.5, 1.0, 2.0})
    for (int n : {4, 6, 8}) {
      double prev_ratio = -kInfBits;
      for (double a : {2.0, 4.0, 16.0, 64.0}) {
        const auto rep = part4_gap_report({a, k, n});
        CHECK(rep.s_above_lower);
        CHECK(rep.s_above_gap_bound);
        CHECK(rep.d_within_cap);
        CHECK(std::isfinite(rep.d));
        // the family still obeys the entropy-scaling ceiling
        CHECK(rep.s <= rep.d * (n - 1.0) + 1e-9);
        CHECK(rep.ratio > prev_ratio - 1e-12);
        prev_ratio = rep.ratio;
      }
      // by a=64 the ratio is close to its ceiling of 1
      CHECK(prev_ratio > 0.9);
    }
}

TEST_CASE("truncation witness fixtures") {
  // r = 4 keeps the first floor(log_2 4) + 1 = 3 outcomes
  const auto t = part4_truncation_witness({2.0, 1.0, 4}, 4.0);
  CHECK(t.cut == 3);
  CHECK(t.distance == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(t.distance_bound == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.distance_ok);
  CHECK(t.domination_ok);

  // r beyond a^{n-1} keeps everything: zero distance
  const auto full = part4_truncation_witness({2.0, 1.0, 4}, 16.0);
  CHECK(full.cut == 4);
  CHECK(full.distance == doctest::Approx(0.0).epsilon(1e-15).scale(1.0));
  CHECK(full.distance_ok);
  CHECK(full.domination_ok);
}

TEST_CASE("truncation certificates hold on a 32-point budget grid") {
  const auto grid = default_r_grid(32);
  for (double a : {2.0, 4.0, 16.0, 64.0})
    for (double k : {0.5, 1.0, 2.0})
      for (int n : {4, 6, 8})
        for (double r : grid) {
          const auto t = part4_truncation_witness({a, k, n}, r);
          CHECK(t.distance_ok);
          CHECK(t.domination_ok);
          CHECK(t.distance <= t.distance_bound + 1e-9);
          CHECK(t.domination_margin_bits <= 1e-9);
        }
}

TEST_CASE("family satisfies the substate property at its own k") {
  // restricted to cells whose q stays a normal double: k * a^{n-1} small
  for (double a : {2.0, 4.0})
    for (double k : {0.5, 1.0, 2.0})
      for (int n : {4, 6, 8}) {
        if (k * std::pow(a, n - 1) > 900.0) continue;
        const auto [p, q] = part4_family({a, k, n});
        CHECK(has_substate_property_classical(p, q, k).holds);
        const auto converse = verify_part6(p, q, k, 1e-6);
        CHECK(converse.pass);
        CHECK(converse.precondition_ok);
        CHECK_FALSE(converse.vacuous);
      }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(part4_family({1.0, 1.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(part4_family({2.0, 0.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(part4_family({2.0, 1.0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(part4_gap_report({0.5, 1.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(part4_truncation_witness({2.0, -1.0, 4}, 4.0), std::invalid_argument);
}
