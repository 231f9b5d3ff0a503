#include "qdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdist {

namespace {

constexpr double kSupportTol = 1e-12;  // sigma eigenvalues below this are null
constexpr double kLeakTol = 1e-10;     // rho weight on the null space => +inf
constexpr double kGolden = 0.6180339887498949;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// values within 1e-9 below zero are numerical noise around 0
ExtendedReal clamp_bits(double v) { return (v < 0.0 && v >= -1e-9) ? 0.0 : v; }

// p log2(p/q) with the 0 log 0 = 0 and p/0 = +inf conventions
double objective(double p, double q) {
  if (p <= 0.0) return 0.0;
  if (q <= 0.0) return kInfBits;
  return p * std::log2(p / q);
}

ExtendedReal observed_value(double p, double q) {
  return clamp_bits(objective(clamp01(p), clamp01(q)));
}

// log2(2^a + 2^b)
double lse2(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

// maximize f over [lo, hi] by golden-section probing; returns best argument
template <class F>
double golden_max(F f, double lo, double hi, int iters, double* best_val) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  if (f1 >= f2) {
    if (best_val) *best_val = f1;
    return x1;
  }
  if (best_val) *best_val = f2;
  return x2;
}

// --- classical frontier core ---
//
// Items are sorted by likelihood ratio descending and merged into groups of
// equal ratio (any order within a group traces the same frontier). The scan
// walks the prefix vertices, probing each connecting segment; the direct
// accumulator Q is used whenever it is representable, the log2 accumulator
// otherwise (extremal-family instances underflow q).

struct Group {
  double dp = 0.0;               // total p mass
  double dq = 0.0;               // total q mass (may underflow)
  double lq = -kInfBits;         // log2 of total q mass
  double ratio_key = 0.0;        // log ratio this group was opened with
  std::vector<int> members;      // original indices
};

struct ScanBest {
  double value = 0.0;
  int full_groups = 0;  // groups taken with weight 1
  double theta = 0.0;   // fractional weight on the next group
};

double frontier_value(double p, double q_direct, double lq) {
  if (p <= 0.0) return 0.0;
  if (q_direct > 1e-290) return p * std::log2(p / q_direct);
  if (std::isinf(lq) && lq < 0) return kInfBits;
  return p * (std::log2(p) - lq);
}

ScanBest scan_frontier(const std::vector<Group>& groups, std::vector<FrontierRow>* rows) {
  ScanBest best;  // empty prefix: p = q = 0, objective 0
  if (rows) rows->push_back({0.0, 0.0, 0.0, 0.0});

  double p_acc = 0.0;
  double q_acc = 0.0;
  double l_acc = -kInfBits;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Group& grp = groups[g];
    const auto segment = [&](double th) {
      const double pp = p_acc + th * grp.dp;
      const double qq = q_acc + th * grp.dq;
      const double ll = th > 0.0 ? lse2(l_acc, std::log2(th) + grp.lq) : l_acc;
      return frontier_value(pp, qq, ll);
    };
    double seg_val = 0.0;
    const double seg_theta = golden_max(segment, 0.0, 1.0, 70, &seg_val);
    if (seg_val > best.value) {
      best = {seg_val, static_cast<int>(g), seg_theta};
    }
    p_acc += grp.dp;
    q_acc += grp.dq;
    l_acc = lse2(l_acc, grp.lq);
    const double vertex_val = frontier_value(p_acc, q_acc, l_acc);
    if (rows) rows->push_back({static_cast<double>(g + 1), p_acc, q_acc, vertex_val});
    if (vertex_val >= best.value) {
      best = {vertex_val, static_cast<int>(g + 1), 0.0};
    }
  }
  return best;
}

// sort + merge items of equal ratio; items must have finite log2_q
std::vector<Group> build_groups(std::vector<RatioItem> items) {
  std::stable_sort(items.begin(), items.end(), [](const RatioItem& a, const RatioItem& b) {
    return a.log_ratio > b.log_ratio;
  });
  std::vector<Group> groups;
  for (const RatioItem& it : items) {
    if (!groups.empty() && groups.back().ratio_key == it.log_ratio) {
      Group& g = groups.back();
      g.dp += it.p;
      g.dq += it.q;
      g.lq = lse2(g.lq, it.log2_q);
      g.members.push_back(it.index);
    } else {
      Group g;
      g.dp = it.p;
      g.dq = it.q;
      g.lq = it.log2_q;
      g.ratio_key = it.log_ratio;
      g.members.push_back(it.index);
      groups.push_back(std::move(g));
    }
  }
  return groups;
}

std::vector<double> weights_from_best(const std::vector<Group>& groups, const ScanBest& best,
                                      int dim) {
  std::vector<double> w(static_cast<std::size_t>(dim), 0.0);
  for (int g = 0; g < best.full_groups; ++g)
    for (int idx : groups[static_cast<std::size_t>(g)].members)
      w[static_cast<std::size_t>(idx)] = 1.0;
  if (best.theta > 0.0 && best.full_groups < static_cast<int>(groups.size()))
    for (int idx : groups[static_cast<std::size_t>(best.full_groups)].members)
      w[static_cast<std::size_t>(idx)] = best.theta;
  return w;
}

void accept_probs_classical(const ProbVector& p, const ProbVector& q,
                            const std::vector<double>& w, double* tp, double* tq) {
  double sp = 0.0, sq = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    const double wi = clamp01(w[static_cast<std::size_t>(i)]);
    sp += wi * p[i];
    sq += wi * q[i];
  }
  *tp = sp;
  *tq = sq;
}

void accept_probs_quantum(const DensityMatrix& rho, const DensityMatrix& sigma, const CMat& m,
                          double* tp, double* tq) {
  *tp = (m * rho.mat).trace().real();
  *tq = (m * sigma.mat).trace().real();
}

void check_classical_operator(const std::vector<double>& w, int dim) {
  if (static_cast<int>(w.size()) != dim)
    throw std::invalid_argument("TestOperator: weight vector dimension mismatch");
  for (double x : w)
    if (x < -1e-10 || x > 1.0 + 1e-10)
      throw std::invalid_argument("TestOperator: weight outside [0, 1]");
}

void check_quantum_operator(const CMat& m, int dim) {
  if (m.dim() != dim) throw std::invalid_argument("TestOperator: matrix dimension mismatch");
  const EigenDecomposition dec = eig_hermitian(m);
  if (dec.eigenvalues.front() < -1e-10 || dec.eigenvalues.back() > 1.0 + 1e-10)
    throw std::invalid_argument("TestOperator: eigenvalues outside [0, 1]");
}

}  // namespace

// --- relative entropy ---

ExtendedReal rel_entropy_classical(const ProbVector& p, const ProbVector& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("rel_entropy_classical: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] <= 0.0) continue;  // 0 log 0 = 0
    if (q[i] <= 0.0) return kInfBits;
    s += p[i] * std::log2(p[i] / q[i]);
  }
  return clamp_bits(s);
}

ExtendedReal rel_entropy_quantum(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const int n = rho.dim();
  if (n != sigma.dim()) throw std::invalid_argument("rel_entropy_quantum: dimension mismatch");
  const EigenDecomposition er = eig_hermitian(rho.mat);
  const EigenDecomposition es = eig_hermitian(sigma.mat);

  // overlap weights |<u_i|v_j>|^2
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx ov = 0.0;
      for (int k = 0; k < n; ++k) ov += std::conj(er.vectors(k, i)) * es.vectors(k, j);
      w[static_cast<std::size_t>(i) * n + j] = std::norm(ov);
    }

  double leak = 0.0;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lam = std::max(0.0, er.eigenvalues[static_cast<std::size_t>(i)]);
    if (lam < 1e-15) continue;
    s += lam * std::log2(lam);
    for (int j = 0; j < n; ++j) {
      const double mu = es.eigenvalues[static_cast<std::size_t>(j)];
      const double wij = w[static_cast<std::size_t>(i) * n + j];
      if (mu < kSupportTol)
        leak += lam * wij;
      else
        s -= lam * wij * std::log2(mu);
    }
  }
  if (leak > kLeakTol) return kInfBits;
  return clamp_bits(s);
}

ExtendedReal binary_rel_entropy(double p, double q) {
  if (p < -1e-12 || p > 1.0 + 1e-12 || q < -1e-12 || q > 1.0 + 1e-12)
    throw std::invalid_argument("binary_rel_entropy: arguments outside [0, 1]");
  p = clamp01(p);
  q = clamp01(q);
  double s = 0.0;
  if (p > 0.0) {
    if (q <= 0.0) return kInfBits;
    s += p * std::log2(p / q);
  }
  if (p < 1.0) {
    if (q >= 1.0) return kInfBits;
    s += (1.0 - p) * std::log2((1.0 - p) / (1.0 - q));
  }
  return clamp_bits(s);
}

// --- observed divergence ---

ExtendedReal divergence_observed(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 const TestOperator& m) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("divergence_observed: dimension mismatch");
  if (m.is_classical())
    throw std::invalid_argument("divergence_observed: classical operator on quantum states");
  check_quantum_operator(m.matrix(), rho.dim());
  double p = 0.0, q = 0.0;
  accept_probs_quantum(rho, sigma, m.matrix(), &p, &q);
  return observed_value(p, q);
}

ExtendedReal divergence_observed(const ProbVector& p, const ProbVector& q,
                                 const TestOperator& m) {
  if (p.dim() != q.dim()) throw std::invalid_argument("divergence_observed: dimension mismatch");
  if (!m.is_classical())
    throw std::invalid_argument("divergence_observed: quantum operator on classical states");
  check_classical_operator(m.weights(), p.dim());
  double tp = 0.0, tq = 0.0;
  accept_probs_classical(p, q, m.weights(), &tp, &tq);
  return observed_value(tp, tq);
}

// --- exact classical divergence ---

DivergenceResult divergence_classical_exact(const ProbVector& p, const ProbVector& q) {
  const int n = p.dim();
  if (n != q.dim())
    throw std::invalid_argument("divergence_classical_exact: dimension mismatch");

  for (int i = 0; i < n; ++i) {
    if (p[i] > 0.0 && q[i] == 0.0) {
      std::vector<double> w(static_cast<std::size_t>(n), 0.0);
      w[static_cast<std::size_t>(i)] = 1.0;
      return {kInfBits, TestOperator::classical(std::move(w)), p[i], 0.0};
    }
  }

  std::vector<RatioItem> items;
  for (int i = 0; i < n; ++i) {
    if (p[i] == 0.0 && q[i] == 0.0) continue;  // dead outcome
    RatioItem it;
    it.index = i;
    it.p = p[i];
    it.q = q[i];
    it.log2_q = std::log2(q[i]);  // q > 0 here
    it.log_ratio = p[i] > 0.0 ? std::log2(p[i]) - it.log2_q : -kInfBits;
    items.push_back(it);
  }

  const std::vector<Group> groups = build_groups(std::move(items));
  const ScanBest best = scan_frontier(groups, nullptr);
  std::vector<double> w = weights_from_best(groups, best, n);

  double tp = 0.0, tq = 0.0;
  accept_probs_classical(p, q, w, &tp, &tq);
  DivergenceResult res;
  res.value = observed_value(tp, tq);
  res.witness = TestOperator::classical(std::move(w));
  res.p = clamp01(tp);
  res.q = clamp01(tq);
  return res;
}

LogDomainDivergence divergence_from_log_ratios(const std::vector<double>& p,
                                               const std::vector<double>& log2_q) {
  const int n = static_cast<int>(p.size());
  if (p.size() != log2_q.size())
    throw std::invalid_argument("divergence_from_log_ratios: dimension mismatch");

  std::vector<RatioItem> items;
  for (int i = 0; i < n; ++i) {
    const double pi = p[static_cast<std::size_t>(i)];
    const double lq = log2_q[static_cast<std::size_t>(i)];
    if (pi > 0.0 && std::isinf(lq) && lq < 0) {
      LogDomainDivergence inf;
      inf.value = kInfBits;
      inf.weights.assign(static_cast<std::size_t>(n), 0.0);
      inf.weights[static_cast<std::size_t>(i)] = 1.0;
      inf.p = pi;
      inf.log2_q = -kInfBits;
      return inf;
    }
    if (pi == 0.0 && std::isinf(lq)) continue;
    RatioItem it;
    it.index = i;
    it.p = pi;
    it.q = std::exp2(lq);  // may underflow to 0; log2_q stays authoritative
    it.log2_q = lq;
    it.log_ratio = pi > 0.0 ? std::log2(pi) - lq : -kInfBits;
    items.push_back(it);
  }

  const std::vector<Group> groups = build_groups(std::move(items));
  const ScanBest best = scan_frontier(groups, nullptr);

  LogDomainDivergence res;
  res.weights = weights_from_best(groups, best, n);
  double tp = 0.0;
  double lq_acc = -kInfBits;
  for (int i = 0; i < n; ++i) {
    const double wi = res.weights[static_cast<std::size_t>(i)];
    if (wi <= 0.0) continue;
    tp += wi * p[static_cast<std::size_t>(i)];
    lq_acc = lse2(lq_acc, std::log2(wi) + log2_q[static_cast<std::size_t>(i)]);
  }
  res.p = tp;
  res.log2_q = lq_acc;
  res.value = tp > 0.0 ? std::max(0.0, tp * (std::log2(tp) - lq_acc)) : 0.0;
  return res;
}

std::vector<FrontierRow> classical_frontier(const ProbVector& p, const ProbVector& q) {
  const int n = p.dim();
  if (n != q.dim()) throw std::invalid_argument("classical_frontier: dimension mismatch");
  std::vector<RatioItem> items;
  for (int i = 0; i < n; ++i) {
    if (p[i] == 0.0 && q[i] == 0.0) continue;
    RatioItem it;
    it.index = i;
    it.p = p[i];
    it.q = q[i];
    it.log2_q = q[i] > 0.0 ? std::log2(q[i]) : -kInfBits;
    it.log_ratio = p[i] > 0.0 ? (q[i] > 0.0 ? std::log2(p[i]) - it.log2_q : kInfBits)
                              : -kInfBits;
    items.push_back(it);
  }
  const std::vector<Group> groups = build_groups(std::move(items));
  std::vector<FrontierRow> rows;
  scan_frontier(groups, &rows);
  return rows;
}

// --- brute-force oracle ---

namespace {

double bruteforce_mask_best(const double* p, const double* q, int n, int grid,
                            unsigned mask) {
  double ps = 0.0, qs = 0.0;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) {
      ps += p[i];
      qs += q[i];
    }
  double best = objective(ps, qs);
  const double inv = 1.0 / grid;
  for (int j = 0; j < n; ++j) {
    if (mask >> j & 1u) continue;
    for (int t = 0; t <= grid; ++t) {
      const double th = t * inv;
      best = std::max(best, objective(ps + th * p[j], qs + th * q[j]));
    }
  }
  return best;
}

void bruteforce_check_args(const ProbVector& p, const ProbVector& q, int grid) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("divergence_classical_bruteforce: dimension mismatch");
  if (p.dim() > 12)
    throw std::invalid_argument("divergence_classical_bruteforce: dimension > 12");
  if (grid < 1) throw std::invalid_argument("divergence_classical_bruteforce: grid < 1");
}

}  // namespace

double divergence_classical_bruteforce_serial(const ProbVector& p, const ProbVector& q,
                                              int grid) {
  bruteforce_check_args(p, q, grid);
  const int n = p.dim();
  const long total = 1L << n;
  double best = 0.0;
  for (long mask = 0; mask < total; ++mask)
    best = std::max(best, bruteforce_mask_best(p.p.data(), q.p.data(), n, grid,
                                               static_cast<unsigned>(mask)));
  return best;
}

double divergence_classical_bruteforce(const ProbVector& p, const ProbVector& q, int grid) {
  bruteforce_check_args(p, q, grid);
  const int n = p.dim();
  const long total = 1L << n;
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (long mask = 0; mask < total; ++mask)
    best = std::max(best, bruteforce_mask_best(p.p.data(), q.p.data(), n, grid,
                                               static_cast<unsigned>(mask)));
  return best;
}

// --- quantum divergence ---

namespace {

struct LambdaEval {
  double value = 0.0;
  double p = 0.0;
  double q = 0.0;
  double theta = 0.0;
};

// best fractional-boundary threshold test at a fixed lambda
LambdaEval eval_lambda(const CMat& rho, const CMat& sigma, double lambda) {
  const CMat a = rho - lambda * sigma;
  const EigenDecomposition dec = eig_hermitian(a);
  const int n = a.dim();

  std::vector<double> dr(static_cast<std::size_t>(n)), ds(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    dr[static_cast<std::size_t>(i)] = std::max(0.0, quadratic_form(rho, dec.vectors, i));
    ds[static_cast<std::size_t>(i)] = std::max(0.0, quadratic_form(sigma, dec.vectors, i));
  }
  int boundary = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(dec.eigenvalues[static_cast<std::size_t>(i)]) <
        std::abs(dec.eigenvalues[static_cast<std::size_t>(boundary)]))
      boundary = i;

  double pb = 0.0, qb = 0.0;
  for (int i = 0; i < n; ++i)
    if (i != boundary && dec.eigenvalues[static_cast<std::size_t>(i)] >= 0.0) {
      pb += dr[static_cast<std::size_t>(i)];
      qb += ds[static_cast<std::size_t>(i)];
    }

  LambdaEval best;
  best.value = -1.0;
  for (double th : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double p = clamp01(pb + th * dr[static_cast<std::size_t>(boundary)]);
    const double q = clamp01(qb + th * ds[static_cast<std::size_t>(boundary)]);
    const double v = objective(p, q);
    if (v > best.value) best = {v, p, q, th};
  }
  return best;
}

CMat assemble_threshold_operator(const CMat& rho, const CMat& sigma, double lambda,
                                 double theta) {
  const CMat a = rho - lambda * sigma;
  const EigenDecomposition dec = eig_hermitian(a);
  const int n = a.dim();
  int boundary = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(dec.eigenvalues[static_cast<std::size_t>(i)]) <
        std::abs(dec.eigenvalues[static_cast<std::size_t>(boundary)]))
      boundary = i;
  CMat m(n);
  for (int col = 0; col < n; ++col) {
    double wgt = 0.0;
    if (col == boundary)
      wgt = theta;
    else if (dec.eigenvalues[static_cast<std::size_t>(col)] >= 0.0)
      wgt = 1.0;
    if (wgt == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) += wgt * dec.vectors(i, col) * std::conj(dec.vectors(j, col));
  }
  return m;
}

std::vector<double> lambda_grid_points(double lmax, int count) {
  count = std::max(count, 8);
  const int lin = count / 2;
  const int geo = count - lin;
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < lin; ++i) pts.push_back(lmax * i / (lin - 1));
  for (int i = 0; i < geo; ++i)
    pts.push_back(lmax * std::pow(1e-8, static_cast<double>(geo - 1 - i) / (geo - 1)));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

DivergenceResult divergence_quantum_impl(const DensityMatrix& rho, const DensityMatrix& sigma,
                                         int lambda_grid, std::vector<FrontierRow>* rows) {
  const int n = rho.dim();
  if (n != sigma.dim()) throw std::invalid_argument("divergence_quantum: dimension mismatch");

  const EigenDecomposition es = eig_hermitian(sigma.mat);
  double mu_min_pos = kInfBits;
  bool has_null = false;
  for (double mu : es.eigenvalues) {
    if (mu < kSupportTol)
      has_null = true;
    else
      mu_min_pos = std::min(mu_min_pos, mu);
  }

  if (has_null) {
    double leak = 0.0;
    for (int j = 0; j < n; ++j)
      if (es.eigenvalues[static_cast<std::size_t>(j)] < kSupportTol)
        leak += std::max(0.0, quadratic_form(rho.mat, es.vectors, j));
    if (leak > kLeakTol) {
      // limiting witness: sigma's null space intersected with rho's support,
      // i.e. the significant eigenvectors of Pi rho Pi
      CMat pi(n);
      for (int j = 0; j < n; ++j) {
        if (es.eigenvalues[static_cast<std::size_t>(j)] >= kSupportTol) continue;
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k)
            pi(i, k) += es.vectors(i, j) * std::conj(es.vectors(k, j));
      }
      const CMat projected = pi * rho.mat * pi;
      const EigenDecomposition ep = eig_hermitian(projected);
      CMat m(n);
      for (int col = 0; col < n; ++col) {
        if (ep.eigenvalues[static_cast<std::size_t>(col)] <= kSupportTol) continue;
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k)
            m(i, k) += ep.vectors(i, col) * std::conj(ep.vectors(k, col));
      }
      double p = 0.0, q = 0.0;
      accept_probs_quantum(rho, sigma, m, &p, &q);
      return {kInfBits, TestOperator::quantum(std::move(m)), clamp01(p), clamp01(q)};
    }
  }

  const EigenDecomposition er = eig_hermitian(rho.mat);
  const double lmax = std::max(er.eigenvalues.back(), 0.0) / mu_min_pos;

  const std::vector<double> grid = lambda_grid_points(lmax, lambda_grid);
  double best_val = -1.0;
  double best_lambda = 0.0;
  double best_theta = 0.0;
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const LambdaEval ev = eval_lambda(rho.mat, sigma.mat, grid[i]);
    if (rows) rows->push_back({grid[i], ev.p, ev.q, ev.value});
    if (ev.value > best_val) {
      best_val = ev.value;
      best_lambda = grid[i];
      best_theta = ev.theta;
      best_idx = i;
    }
  }

  // refine around the best grid point
  const double lo = grid[best_idx == 0 ? 0 : best_idx - 1];
  const double hi = grid[std::min(best_idx + 1, grid.size() - 1)];
  if (hi > lo) {
    const auto probe = [&](double lam) {
      const LambdaEval ev = eval_lambda(rho.mat, sigma.mat, lam);
      if (rows) rows->push_back({lam, ev.p, ev.q, ev.value});
      if (ev.value > best_val) {
        best_val = ev.value;
        best_lambda = lam;
        best_theta = ev.theta;
      }
      return ev.value;
    };
    golden_max(probe, lo, hi, 48, nullptr);
  }

  CMat m = assemble_threshold_operator(rho.mat, sigma.mat, best_lambda, best_theta);
  double p = 0.0, q = 0.0;
  accept_probs_quantum(rho, sigma, m, &p, &q);
  DivergenceResult res;
  res.value = observed_value(p, q);
  res.witness = TestOperator::quantum(std::move(m));
  res.p = clamp01(p);
  res.q = clamp01(q);
  return res;
}

}  // namespace

DivergenceResult divergence_quantum(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    int lambda_grid) {
  return divergence_quantum_impl(rho, sigma, lambda_grid, nullptr);
}

std::vector<FrontierRow> quantum_frontier(const DensityMatrix& rho, const DensityMatrix& sigma,
                                          int lambda_grid) {
  std::vector<FrontierRow> rows;
  divergence_quantum_impl(rho, sigma, lambda_grid, &rows);
  return rows;
}

}  // namespace qdist
