#include "qdist/substate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdist {

namespace {

constexpr double kGridSlack = 1e-12;

// c = (r/(r-1)) * 2^{rk}; +inf for large rk is fine (constraint vacuous)
double capacity_factor(double k, double r) { return r / (r - 1.0) * std::exp2(r * k); }

double cell_capacity(double c, double qi) {
  if (qi <= 0.0) return 0.0;  // no mass allowed where q vanishes
  return c * qi;              // may overflow to +inf
}

bool holds_on_grid(const ProbVector& p, const ProbVector& q, double k,
                   const std::vector<double>& rs, SubstateReport* report) {
  SubstateReport rep;
  rep.worst_margin = -kInfBits;
  bool first = true;
  for (double r : rs) {
    if (!(r > 1.0)) continue;
    const double c = capacity_factor(k, r);
    double clipped = 0.0;
    for (int i = 0; i < p.dim(); ++i)
      clipped += std::max(0.0, p[i] - cell_capacity(c, q[i]));
    const double dist = 2.0 * clipped;
    const double margin = dist - 2.0 / r;
    if (first || margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_r = r;
      rep.worst_distance = dist;
      first = false;
    }
  }
  if (first) throw std::invalid_argument("has_substate_property_classical: empty r grid");
  rep.holds = rep.worst_margin <= kGridSlack;
  if (report) *report = rep;
  return rep.holds;
}

// grid plus the adversarial budget r = 2/p from the divergence witness
std::vector<double> augmented_grid(const ProbVector& p, const ProbVector& q,
                                   const std::vector<double>& rs) {
  std::vector<double> out = rs;
  const DivergenceResult d = divergence_classical_exact(p, q);
  if (d.p > 0.0) {
    const double adv = 2.0 / d.p;
    if (adv > 1.0 + kGridSlack && std::isfinite(adv)) out.push_back(adv);
  }
  return out;
}

}  // namespace

SubstateWitness substate_min_distance_classical(const ProbVector& p, const ProbVector& q,
                                                double k, double r) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("substate_min_distance_classical: dimension mismatch");
  if (!(r > 1.0)) throw std::invalid_argument("substate_min_distance_classical: r <= 1");
  if (k < 0.0) throw std::invalid_argument("substate_min_distance_classical: k < 0");

  const int n = p.dim();
  const double c = capacity_factor(k, r);

  std::vector<double> cap(static_cast<std::size_t>(n));
  std::vector<double> pr(static_cast<std::size_t>(n));
  double clipped = 0.0;
  for (int i = 0; i < n; ++i) {
    cap[static_cast<std::size_t>(i)] = cell_capacity(c, q[i]);
    pr[static_cast<std::size_t>(i)] = std::min(p[i], cap[static_cast<std::size_t>(i)]);
    clipped += p[i] - pr[static_cast<std::size_t>(i)];
  }

  if (clipped > 0.0) {
    // re-deposit on the largest-slack coordinates; total slack is at least
    // c - 1 > 0 since sum cap_i = c >= r/(r-1) > 1
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const double sa = cap[static_cast<std::size_t>(a)] - pr[static_cast<std::size_t>(a)];
      const double sb = cap[static_cast<std::size_t>(b)] - pr[static_cast<std::size_t>(b)];
      return sa > sb;
    });
    double remaining = clipped;
    for (int idx : order) {
      if (remaining <= 0.0) break;
      const double slack =
          cap[static_cast<std::size_t>(idx)] - pr[static_cast<std::size_t>(idx)];
      const double add = std::min(remaining, slack);
      pr[static_cast<std::size_t>(idx)] += add;
      remaining -= add;
    }
    if (remaining > 0.0)  // rounding residue, park it on the top slack cell
      pr[static_cast<std::size_t>(order.front())] += remaining;
  }

  SubstateWitness w;
  w.params = {k, r};
  w.capacity = c;
  w.clipped_mass = clipped;
  w.min_distance = 2.0 * clipped;
  w.witness_pr = ProbVector(std::move(pr));
  return w;
}

std::vector<double> default_r_grid(int points) {
  if (points < 2) throw std::invalid_argument("default_r_grid: need at least 2 points");
  const double lo = 1.0 + 0.015625;  // 1 + 2^-6
  const double hi = 1024.0;          // 2^10
  std::vector<double> rs(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 1; i + 1 < points; ++i)
    rs[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  rs.front() = lo;  // endpoints exact, not exp(log(...))
  rs.back() = hi;
  return rs;
}

SubstateReport has_substate_property_classical(const ProbVector& p, const ProbVector& q,
                                               double k,
                                               const std::vector<double>& r_grid) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("has_substate_property_classical: dimension mismatch");
  if (r_grid.empty())
    throw std::invalid_argument("has_substate_property_classical: empty r grid");
  SubstateReport rep;
  holds_on_grid(p, q, k, augmented_grid(p, q, r_grid), &rep);
  return rep;
}

SubstateReport has_substate_property_classical(const ProbVector& p, const ProbVector& q,
                                               double k) {
  return has_substate_property_classical(p, q, k, default_r_grid());
}

ExtendedReal substate_k_classical(const ProbVector& p, const ProbVector& q, double precision,
                                  const std::vector<double>& r_grid) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("substate_k_classical: dimension mismatch");
  if (!(precision > 0.0)) throw std::invalid_argument("substate_k_classical: precision <= 0");

  double k_hi = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInfBits;
    k_hi = std::max(k_hi, std::log2(p[i] / q[i]));
  }
  if (k_hi <= 0.0) return 0.0;  // P dominated by Q already

  const std::vector<double> rs = augmented_grid(p, q, r_grid);
  if (holds_on_grid(p, q, 0.0, rs, nullptr)) return 0.0;
  // at k_hi the capacity beats every ratio at every r, so the bracket is valid
  double lo = 0.0, hi = k_hi;
  while (!holds_on_grid(p, q, hi, rs, nullptr)) {
    lo = hi;
    hi *= 2.0;  // unreachable in exact arithmetic; defensive
    if (hi > 1e6) return hi;
  }
  while (hi - lo > precision) {
    const double mid = 0.5 * (lo + hi);
    if (holds_on_grid(p, q, mid, rs, nullptr))
      hi = mid;
    else
      lo = mid;
  }
  return hi;  // property holds here by construction
}

ExtendedReal substate_k_classical(const ProbVector& p, const ProbVector& q,
                                  double precision) {
  return substate_k_classical(p, q, precision, default_r_grid());
}

ExtendedReal strong_substate_k(const ProbVector& p, const ProbVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("strong_substate_k: dimension mismatch");
  double max_ratio = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInfBits;
    max_ratio = std::max(max_ratio, p[i] / q[i]);
  }
  return std::max(0.0, std::log2(max_ratio));
}

ExtendedReal strong_substate_k(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const int n = rho.dim();
  if (n != sigma.dim()) throw std::invalid_argument("strong_substate_k: dimension mismatch");
  const EigenDecomposition es = eig_hermitian(sigma.mat);

  double leak = 0.0;
  CMat isqrt(n);  // sigma^{-1/2} on the support
  for (int j = 0; j < n; ++j) {
    const double mu = es.eigenvalues[static_cast<std::size_t>(j)];
    if (mu < 1e-12) {
      leak += std::max(0.0, quadratic_form(rho.mat, es.vectors, j));
      continue;
    }
    const double w = 1.0 / std::sqrt(mu);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        isqrt(i, k) += w * es.vectors(i, j) * std::conj(es.vectors(k, j));
  }
  if (leak > 1e-10) return kInfBits;

  // the triple product amplifies roundoff by 1/mu and loses exact conjugate
  // symmetry; restore it before diagonalizing
  CMat t = isqrt * rho.mat * isqrt;
  t = 0.5 * (t + t.adjoint());
  const EigenDecomposition et = eig_hermitian(t);
  return std::max(0.0, std::log2(std::max(et.eigenvalues.back(), 1e-300)));
}

PartCheck verify_part7(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  PartCheck c;
  c.lhs = rel_entropy_quantum(rho, sigma);
  c.rhs = strong_substate_k(rho, sigma);
  if (std::isinf(c.rhs)) {
    c.vacuous = true;
    c.pass = true;
    c.margin = kInfBits;
    return c;
  }
  c.margin = c.rhs - c.lhs;
  c.pass = c.lhs <= c.rhs + tol;
  return c;
}

PartCheck verify_part6(const ProbVector& p, const ProbVector& q, double k, double tol,
                       const std::vector<double>& r_grid) {
  PartCheck c;
  c.precondition_ok = has_substate_property_classical(p, q, k, r_grid).holds;
  const DivergenceResult d = divergence_classical_exact(p, q);
  c.lhs = d.value;
  c.rhs = 2.0 * k + 2.0;
  if (std::isinf(c.lhs)) {
    // support mismatch: the substate property cannot hold at any finite k,
    // so the bound is not in force
    c.vacuous = true;
    c.pass = true;
    c.margin = -kInfBits;
    return c;
  }
  c.margin = c.rhs - c.lhs;
  c.pass = c.lhs <= c.rhs + tol;
  return c;
}

PartCheck verify_part6(const ProbVector& p, const ProbVector& q, double k, double tol) {
  return verify_part6(p, q, k, tol, default_r_grid());
}

PartCheck verify_part5_classical(const ProbVector& p, const ProbVector& q, double tol,
                                 const std::vector<double>& r_grid) {
  PartCheck c;
  const DivergenceResult d = divergence_classical_exact(p, q);
  if (std::isinf(d.value)) {
    c.vacuous = true;
    c.pass = true;
    c.margin = kInfBits;
    return c;
  }
  const double k = 8.0 * d.value + 14.0;
  const SubstateReport rep = has_substate_property_classical(p, q, k, r_grid);
  c.lhs = rep.worst_margin;  // max over r of min_distance - 2/r
  c.rhs = 0.0;
  c.margin = -rep.worst_margin;
  c.pass = rep.worst_margin <= tol;
  return c;
}

PartCheck verify_part5_classical(const ProbVector& p, const ProbVector& q, double tol) {
  return verify_part5_classical(p, q, tol, default_r_grid());
}

}  // namespace qdist
