#pragma once

#include <vector>

#include "qdist/measures.hpp"
#include "qdist/states.hpp"

namespace qdist {

// Perturbation budget r > 1 and scale exponent k >= 0 (bits).
struct SubstateParams {
  double k = 0.0;
  double r = 2.0;
};

// Outcome of the exact classical feasibility problem at one (k, r): the
// closest distribution P_r to P satisfying P_r <= c*Q entrywise, where
// c = (r/(r-1)) * 2^{rk}. min_distance is l1; capacity may overflow to +inf
// for large rk, which just means the constraint is slack everywhere.
struct SubstateWitness {
  SubstateParams params;
  double capacity = 0.0;
  double clipped_mass = 0.0;
  double min_distance = 0.0;
  ProbVector witness_pr;
};

// Clip P to the capacities c*q_i and re-deposit the clipped mass on the
// largest-slack coordinates (any feasible deposit is optimal; this rule is
// deterministic). Minimal l1 distance is 2 * sum_i max(0, p_i - c*q_i).
SubstateWitness substate_min_distance_classical(const ProbVector& p, const ProbVector& q,
                                                double k, double r);

// Geometric grid of perturbation budgets, r in [1 + 2^-6, 2^10], endpoints
// exact. The universal "for all r > 1" quantifier is checked on this grid.
std::vector<double> default_r_grid(int points = 64);

struct SubstateReport {
  bool holds = true;
  double worst_r = 0.0;
  double worst_margin = 0.0;    // max over r of min_distance - 2/r
  double worst_distance = 0.0;  // min_distance at worst_r
};

// True iff min_distance(k, r) <= 2/r + 1e-12 for every grid r, plus the
// adversarial budget r = 2/p taken from the divergence witness (the value
// the converse argument actually uses). Reports the worst r either way.
SubstateReport has_substate_property_classical(const ProbVector& p, const ProbVector& q,
                                               double k,
                                               const std::vector<double>& r_grid);
SubstateReport has_substate_property_classical(const ProbVector& p, const ProbVector& q,
                                               double k);

// Smallest k (within precision) whose substate property holds on the grid,
// found by bisection over [0, max_i log2(p_i/q_i)]; the returned value is the
// upper end of the final bracket, so the property is guaranteed to hold at
// it. +inf when support(P) is not contained in support(Q).
ExtendedReal substate_k_classical(const ProbVector& p, const ProbVector& q,
                                  double precision = 1e-4);
ExtendedReal substate_k_classical(const ProbVector& p, const ProbVector& q, double precision,
                                  const std::vector<double>& r_grid);

// Minimal k with sigma - rho/2^k psd: log2 of the largest eigenvalue of
// sigma^{-1/2} rho sigma^{-1/2} on sigma's support. +inf when rho puts
// weight > 1e-10 on sigma's null space. Never negative (equal traces).
ExtendedReal strong_substate_k(const DensityMatrix& rho, const DensityMatrix& sigma);
ExtendedReal strong_substate_k(const ProbVector& p, const ProbVector& q);

// One verified inequality: lhs <= rhs + tol. vacuous marks instances where
// an input quantity is infinite, counted separately from genuine passes.
struct PartCheck {
  bool pass = true;
  bool vacuous = false;
  bool precondition_ok = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs; negative means violation
};

// relative entropy <= strong substate k
PartCheck verify_part7(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double tol = 1e-6);

// divergence <= 2k + 2, valid whenever the substate property holds at k;
// the precondition is checked and reported, not assumed
PartCheck verify_part6(const ProbVector& p, const ProbVector& q, double k,
                       double tol = 1e-6);
PartCheck verify_part6(const ProbVector& p, const ProbVector& q, double k, double tol,
                       const std::vector<double>& r_grid);

// the substate property holds at k = 8*divergence + 14
PartCheck verify_part5_classical(const ProbVector& p, const ProbVector& q,
                                 double tol = 1e-6);
PartCheck verify_part5_classical(const ProbVector& p, const ProbVector& q, double tol,
                                 const std::vector<double>& r_grid);

}  // namespace qdist
