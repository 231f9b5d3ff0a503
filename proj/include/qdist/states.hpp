#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdist/linalg.hpp"

namespace qdist {

// Classical distribution on [n]: nonnegative entries summing to 1 (within
// 1e-12, checked by validate()).
struct ProbVector {
  std::vector<double> p;

  ProbVector() = default;
  explicit ProbVector(std::vector<double> entries) : p(std::move(entries)) {}

  int dim() const { return static_cast<int>(p.size()); }
  double operator[](int i) const { return p[static_cast<std::size_t>(i)]; }

  void validate() const;
};

// Quantum state: Hermitian, PSD (eigenvalues >= -1e-10), unit trace
// (within 1e-10).
struct DensityMatrix {
  CMat mat;

  DensityMatrix() = default;
  explicit DensityMatrix(CMat m) : mat(std::move(m)) {}

  int dim() const { return mat.dim(); }

  void validate() const;
};

// l1 distance; 2 for disjoint supports, 0 iff equal.
double trace_distance(const ProbVector& a, const ProbVector& b);
// sum of |eigenvalues| of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// G G^dagger / Tr(G G^dagger) with G an n x n matrix of entries
// gaussian() + i*gaussian() drawn row-major from SplitMix64(seed).
// Full rank almost surely; reproducible for a fixed seed.
DensityMatrix random_density(int n, std::uint64_t seed);

// Normalized i.i.d. unit exponentials: uniform on the simplex.
ProbVector random_distribution(int n, std::uint64_t seed);

// Measures rho and sigma in the eigenbasis of sigma: entry i of each output
// is <v_i|rho|v_i> resp. <v_i|sigma|v_i> for sigma's eigenvectors v_i. The
// second output equals sigma's eigenvalue list (ascending).
std::pair<ProbVector, ProbVector> measure_in_eigenbasis(const DensityMatrix& rho,
                                                        const DensityMatrix& sigma);

}  // namespace qdist
