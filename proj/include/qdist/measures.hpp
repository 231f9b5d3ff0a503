#pragma once

#include <limits>
#include <variant>
#include <vector>

#include "qdist/states.hpp"

namespace qdist {

// Measures are reported in bits (base-2 logarithms throughout) as a
// nonnegative double, with +infinity for support mismatches. Values within
// 1e-9 below zero are rounded up to 0.
using ExtendedReal = double;

inline constexpr double kInfBits = std::numeric_limits<double>::infinity();

// One two-outcome POVM element: a weight vector m in [0,1]^n for classical
// states, or a Hermitian M with 0 <= M <= I for quantum states.
struct TestOperator {
  std::variant<std::vector<double>, CMat> op;

  bool is_classical() const { return op.index() == 0; }
  const std::vector<double>& weights() const { return std::get<0>(op); }
  const CMat& matrix() const { return std::get<1>(op); }

  static TestOperator classical(std::vector<double> w) { return {std::move(w)}; }
  static TestOperator quantum(CMat m) { return {std::move(m)}; }
};

// Divergence value together with the operator achieving it and its accept
// probabilities p = Tr(M rho), q = Tr(M sigma).
struct DivergenceResult {
  ExtendedReal value = 0.0;
  TestOperator witness;
  double p = 0.0;
  double q = 0.0;
};

// Per-outcome log-ratio record used by the classical frontier algorithm.
// log_ratio = log2(p/q); +inf when q = 0 < p. log2_q carries the ratio in a
// form that stays usable when q itself underflows a double.
struct RatioItem {
  int index = 0;
  double log_ratio = 0.0;
  double p = 0.0;
  double q = 0.0;
  double log2_q = 0.0;
};

// One evaluated point of the Neyman-Pearson frontier (for CSV export).
struct FrontierRow {
  double threshold = 0.0;  // vertex ordinal (classical) or lambda (quantum)
  double p = 0.0;
  double q = 0.0;
  double objective = 0.0;
};

// --- relative entropy ---

// sum_i p_i log2(p_i / q_i); +inf iff some p_i > 0 = q_i.
ExtendedReal rel_entropy_classical(const ProbVector& p, const ProbVector& q);

// Tr(rho log2 rho - rho log2 sigma) via eigendecompositions; +inf iff rho
// puts weight > 1e-10 on sigma's null space (eigenvalues < 1e-12).
ExtendedReal rel_entropy_quantum(const DensityMatrix& rho, const DensityMatrix& sigma);

// p log2(p/q) + (1-p) log2((1-p)/(1-q)) on two-point distributions.
ExtendedReal binary_rel_entropy(double p, double q);

// --- observational divergence ---

// p log2(p/q) with p = Tr(M rho), q = Tr(M sigma); 0 when p = 0, +inf when
// p > 0 = q. Throws if M is outside [0, I] beyond 1e-10.
ExtendedReal divergence_observed(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 const TestOperator& m);
ExtendedReal divergence_observed(const ProbVector& p, const ProbVector& q,
                                 const TestOperator& m);

// Exact classical divergence: maximizes (sum m_i p_i) log2(sum m_i p_i / sum
// m_i q_i) over m in [0,1]^n. Sorts outcomes by likelihood ratio; the optimum
// sits on the resulting frontier, scanned vertex by vertex with a
// golden-section probe along each segment.
DivergenceResult divergence_classical_exact(const ProbVector& p, const ProbVector& q);

// Same algorithm on (p_i, log2 q_i) pairs, for instances whose q entries
// underflow a double (the extremal family at large k*a^i). weights is the
// maximizing m; log2_q describes the witness accept probability under Q.
struct LogDomainDivergence {
  double value = 0.0;
  std::vector<double> weights;
  double p = 0.0;
  double log2_q = 0.0;
};
LogDomainDivergence divergence_from_log_ratios(const std::vector<double>& p,
                                               const std::vector<double>& log2_q);

// Independent oracle: enumerates every subset plus one fractional coordinate
// on a theta grid. Cost 2^n * n * grid; requires n <= 12. OpenMP-parallel
// over subsets; the _serial variant is the reference implementation used to
// cross-check it (and by the benchmark).
double divergence_classical_bruteforce(const ProbVector& p, const ProbVector& q, int grid);
double divergence_classical_bruteforce_serial(const ProbVector& p, const ProbVector& q,
                                              int grid);

// Certified lower bound on quantum divergence via spectral threshold tests:
// for lambda on a geometric+linear grid over [0, lambda_max], M(lambda) is
// the projector onto the nonnegative eigenspace of rho - lambda*sigma with
// fractional weight on the boundary eigenvector; the best lambda neighborhood
// is refined by golden-section. Returns +inf (with a limiting witness) iff
// rho leaks outside sigma's support.
DivergenceResult divergence_quantum(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    int lambda_grid = 512);

// --- frontier exports for plotting ---

std::vector<FrontierRow> classical_frontier(const ProbVector& p, const ProbVector& q);
std::vector<FrontierRow> quantum_frontier(const DensityMatrix& rho, const DensityMatrix& sigma,
                                          int lambda_grid = 512);

}  // namespace qdist
