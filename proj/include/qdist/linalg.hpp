#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdist {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Dimensions in this project stay
// tiny (n <= ~16), so storage and algorithms favor clarity and determinism
// over speed.
class CMat {
 public:
  CMat() = default;
  explicit CMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::invalid_argument("CMat: negative dimension");
  }

  static CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMat diag(const std::vector<double>& d) {
    CMat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int dim() const { return n_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  CMat adjoint() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  // max_{i,j} |a_ij - conj(a_ji)|
  double hermiticity_error() const {
    double e = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return e;
  }

  CMat operator+(const CMat& o) const { return zip(o, [](cplx x, cplx y) { return x + y; }); }
  CMat operator-(const CMat& o) const { return zip(o, [](cplx x, cplx y) { return x - y; }); }

  CMat operator*(const CMat& o) const {
    require_same_dim(o, "CMat::operator*");
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  friend CMat operator*(double s, const CMat& m) {
    CMat r(m.n_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
    return r;
  }

  void require_same_dim(const CMat& o, const std::string& where) const {
    if (n_ != o.n_) throw std::invalid_argument(where + ": dimension mismatch");
  }

 private:
  template <class F>
  CMat zip(const CMat& o, F f) const {
    require_same_dim(o, "CMat arithmetic");
    CMat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f(a_[i], o.a_[i]);
    return r;
  }

  int n_ = 0;
  std::vector<cplx> a_;
};

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending; column j
// of `vectors` is the eigenvector of eigenvalues[j], with phase fixed so the
// largest-magnitude component is real positive (deterministic golden tests).
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  CMat vectors;

  // V diag(lambda) V^dagger
  CMat reconstruct() const;
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Sweeps until
// the off-diagonal Frobenius mass drops below 1e-12 relative to
// max(1, ||H||_F). Throws std::invalid_argument when the input is not
// Hermitian within 1e-12 (absolute, on elements), std::runtime_error if the
// sweep cap is hit without convergence.
EigenDecomposition eig_hermitian(const CMat& h);

// min eigenvalue >= -tol * max(1, spectral norm)
bool is_psd(const CMat& h, double tol);

// <v_j | M | v_j> for column j of V
double quadratic_form(const CMat& m, const CMat& v, int j);

}  // namespace qdist
