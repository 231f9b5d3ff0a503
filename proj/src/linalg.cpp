#include "qdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdist {

CMat EigenDecomposition::reconstruct() const {
  const int n = vectors.dim();
  CMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k)
        s += vectors(i, k) * eigenvalues[static_cast<std::size_t>(k)] * std::conj(vectors(j, k));
      r(i, j) = s;
    }
  return r;
}

namespace {

double offdiag_mass(const CMat& a) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary acts in the (p,q)
// plane as G = [[c, s], [-s*w, c*w]] with w = conj(a_pq)/|a_pq|, which first
// rotates the phase out of the off-diagonal element and then applies the
// classic real rotation.
void rotate(CMat& a, CMat& v, int p, int q) {
  const cplx apq = a(p, q);
  const double beta = std::abs(apq);
  if (beta == 0.0) return;
  const cplx w = std::conj(apq) / beta;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * beta);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  a(p, p) = app - t * beta;
  a(q, q) = aqq + t * beta;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const cplx aip = a(i, p);
    const cplx aiq = a(i, q);
    a(i, p) = c * aip - s * w * aiq;
    a(i, q) = s * aip + c * w * aiq;
    a(p, i) = std::conj(a(i, p));
    a(q, i) = std::conj(a(i, q));
  }
  for (int i = 0; i < n; ++i) {
    const cplx vip = v(i, p);
    const cplx viq = v(i, q);
    v(i, p) = c * vip - s * w * viq;
    v(i, q) = s * vip + c * w * viq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const CMat& h) {
  const int n = h.dim();
  if (n == 0) throw std::invalid_argument("eig_hermitian: empty matrix");
  if (h.hermiticity_error() > 1e-12)
    throw std::invalid_argument("eig_hermitian: input is not Hermitian within 1e-12");

  // Work on the exactly-Hermitian average (H + H^dagger)/2.
  CMat a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cplx z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }

  CMat v = CMat::identity(n);
  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = 1e-12 * scale;
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_mass(a) <= target) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (sweep == kMaxSweeps && offdiag_mass(a) > 1e-9 * scale)
    throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge");

  EigenDecomposition dec;
  dec.eigenvalues.resize(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  dec.vectors = CMat(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    dec.eigenvalues[static_cast<std::size_t>(j)] = a(src, src).real();
    // phase fix: largest-magnitude component made real positive
    int imax = 0;
    double amax = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > amax + 1e-15) {
        amax = m;
        imax = i;
      }
    }
    cplx phase = v(imax, src);
    phase = (std::abs(phase) == 0.0) ? cplx{1.0, 0.0} : phase / std::abs(phase);
    for (int i = 0; i < n; ++i) dec.vectors(i, j) = v(i, src) * std::conj(phase);
  }
  return dec;
}

bool is_psd(const CMat& h, double tol) {
  const EigenDecomposition dec = eig_hermitian(h);
  double spectral = 0.0;
  for (double lam : dec.eigenvalues) spectral = std::max(spectral, std::abs(lam));
  return dec.eigenvalues.front() >= -tol * std::max(1.0, spectral);
}

double quadratic_form(const CMat& m, const CMat& v, int j) {
  const int n = m.dim();
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) {
    cplx row = 0.0;
    for (int k = 0; k < n; ++k) row += m(i, k) * v(k, j);
    s += std::conj(v(i, j)) * row;
  }
  return s.real();
}

}  // namespace qdist
