#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "qdist/linalg.hpp"
#include "qdist/rng.hpp"

using namespace qdist;

namespace {

CMat random_hermitian(int n, SplitMix64& g) {
  CMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx{g.gaussian(), g.gaussian()};
  CMat h = a + a.adjoint();
  return 0.5 * h;
}

double unitarity_error(const CMat& v) {
  const CMat gram = v.adjoint() * v;
  return (gram - CMat::identity(v.dim())).max_abs();
}

}  // namespace

TEST_CASE("eig of identity and simple diagonals") {
  const auto e1 = eig_hermitian(CMat::identity(2));
  CHECK(e1.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e1.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  const auto e2 = eig_hermitian(CMat::diag({0.25, 0.75}));
  CHECK(e2.eigenvalues[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(e2.eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-14));
  // eigenvectors of a diagonal matrix are standard basis vectors
  CHECK(std::abs(e2.vectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e2.vectors(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e2.vectors(1, 0)) < 1e-12);

  CMat x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const auto e3 = eig_hermitian(x);
  CHECK(e3.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e3.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig reconstructs random Hermitian matrices") {
  SplitMix64 g(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(g.next_u64() % 9);  // 2..10
    const CMat h = random_hermitian(n, g);
    const auto e = eig_hermitian(h);
    REQUIRE(e.eigenvalues.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < e.eigenvalues.size(); ++i)
      CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
    const CMat back = e.reconstruct();
    CHECK((back - h).frobenius_norm() < 1e-9);
    CHECK(unitarity_error(e.vectors) < 1e-9);

    // trace and Frobenius norm match eigenvalue sums
    double tr = 0.0, fr2 = 0.0;
    for (double ev : e.eigenvalues) {
      tr += ev;
      fr2 += ev * ev;
    }
    CHECK(tr == doctest::Approx(h.trace().real()).epsilon(1e-9).scale(1.0));
    CHECK(std::sqrt(fr2) == doctest::Approx(h.frobenius_norm()).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("eig is deterministic") {
  SplitMix64 g(5);
  const CMat h = random_hermitian(6, g);
  const auto a = eig_hermitian(h);
  const auto b = eig_hermitian(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK((a.vectors - b.vectors).max_abs() == 0.0);
}

TEST_CASE("eig rejects non-Hermitian input") {
  CMat m(2);
  m(0, 1) = 1.0;  // m(1,0) left zero
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("is_psd") {
  CHECK(is_psd(CMat::identity(3), 1e-9));
  CHECK_FALSE(is_psd(CMat::diag({1.0, -0.5}), 1e-9));
  CHECK(is_psd(CMat::diag({1e-12, 1.0}), 1e-9));
  CHECK(is_psd(CMat::diag({-1e-12, 1.0}), 1e-9));  // tiny negative noise tolerated
}

TEST_CASE("matrix arithmetic basics") {
  const CMat a = CMat::diag({1.0, 2.0});
  const CMat b = CMat::diag({3.0, 5.0});
  CHECK(((a + b) - CMat::diag({4.0, 7.0})).max_abs() == 0.0);
  CHECK(((a * b) - CMat::diag({3.0, 10.0})).max_abs() == 0.0);
  CHECK((2.0 * a).trace().real() == doctest::Approx(6.0));
  CMat c(2);
  c(0, 1) = cplx{0.0, 1.0};
  CHECK(c.hermiticity_error() == doctest::Approx(1.0));
  CHECK((c + c.adjoint()).hermiticity_error() == 0.0);

  // quadratic_form reads <v_j|M|v_j> off eigencolumns
  const auto e = eig_hermitian(CMat::diag({0.25, 0.75}));
  CHECK(quadratic_form(CMat::diag({1.0, 3.0}), e.vectors, 0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(quadratic_form(CMat::diag({1.0, 3.0}), e.vectors, 1) ==
        doctest::Approx(3.0).epsilon(1e-12));
}
