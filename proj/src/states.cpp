#include "qdist/states.hpp"

#include <cmath>
#include <stdexcept>

#include "qdist/rng.hpp"

namespace qdist {

void ProbVector::validate() const {
  if (p.empty()) throw std::invalid_argument("ProbVector: empty");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw std::invalid_argument("ProbVector: negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("ProbVector: entries sum to " + std::to_string(sum));
}

void DensityMatrix::validate() const {
  if (mat.dim() == 0) throw std::invalid_argument("DensityMatrix: empty");
  if (mat.hermiticity_error() > 1e-12)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  if (std::abs(mat.trace().real() - 1.0) > 1e-10 || std::abs(mat.trace().imag()) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  const EigenDecomposition dec = eig_hermitian(mat);
  if (dec.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(dec.eigenvalues.front()));
}

double trace_distance(const ProbVector& a, const ProbVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  const EigenDecomposition dec = eig_hermitian(a.mat - b.mat);
  double s = 0.0;
  for (double lam : dec.eigenvalues) s += std::abs(lam);
  return s;
}

DensityMatrix random_density(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_density: n must be >= 1");
  SplitMix64 rng(seed);
  CMat g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = cplx(re, im);
    }
  // G G^dagger, built exactly Hermitian
  CMat h(n);
  double tr = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += g(i, k) * std::conj(g(j, k));
      if (i == j) {
        h(i, i) = s.real();
        tr += s.real();
      } else {
        h(i, j) = s;
        h(j, i) = std::conj(s);
      }
    }
  }
  return DensityMatrix((1.0 / tr) * h);
}

ProbVector random_distribution(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_distribution: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> p(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& x : p) {
    x = rng.exponential();
    sum += x;
  }
  for (double& x : p) x /= sum;
  return ProbVector(std::move(p));
}

std::pair<ProbVector, ProbVector> measure_in_eigenbasis(const DensityMatrix& rho,
                                                        const DensityMatrix& sigma) {
  const int n = rho.dim();
  if (n != sigma.dim())
    throw std::invalid_argument("measure_in_eigenbasis: dimension mismatch");
  const EigenDecomposition dec = eig_hermitian(sigma.mat);

  std::vector<double> pr(static_cast<std::size_t>(n));
  std::vector<double> ps(static_cast<std::size_t>(n));
  double sum_r = 0.0, sum_s = 0.0;
  for (int i = 0; i < n; ++i) {
    pr[static_cast<std::size_t>(i)] = std::max(0.0, quadratic_form(rho.mat, dec.vectors, i));
    ps[static_cast<std::size_t>(i)] = std::max(0.0, dec.eigenvalues[static_cast<std::size_t>(i)]);
    sum_r += pr[static_cast<std::size_t>(i)];
    sum_s += ps[static_cast<std::size_t>(i)];
  }
  // sums are 1 up to eigensolver roundoff; renormalize so the invariants
  // hold exactly downstream
  for (double& x : pr) x /= sum_r;
  for (double& x : ps) x /= sum_s;
  return {ProbVector(std::move(pr)), ProbVector(std::move(ps))};
}

}  // namespace qdist
