#include "qdist/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdist {

namespace {

std::vector<double> family_p(const ExtremalParams& params) {
  const double a = params.a;
  const int n = params.n;
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i)
    p[static_cast<std::size_t>(i - 1)] = (a - 1.0) / std::pow(a, i);
  p[static_cast<std::size_t>(n - 1)] = std::pow(a, -(n - 1.0));
  return p;
}

}  // namespace

void ExtremalParams::validate() const {
  if (!(a > 1.0)) throw std::invalid_argument("ExtremalParams: a must exceed 1");
  if (!(k > 0.0)) throw std::invalid_argument("ExtremalParams: k must be positive");
  if (n < 3) throw std::invalid_argument("ExtremalParams: n must be at least 3");
}

ExtremalFamilyLog part4_family_log(const ExtremalParams& params) {
  params.validate();
  ExtremalFamilyLog fam;
  fam.p = family_p(params);
  fam.log2_q.resize(fam.p.size());
  double tail = 0.0;
  for (int i = 2; i <= params.n; ++i) {
    const double lq =
        std::log2(fam.p[static_cast<std::size_t>(i - 1)]) - params.k * std::pow(params.a, i - 1);
    fam.log2_q[static_cast<std::size_t>(i - 1)] = lq;
    tail += std::exp2(lq);
  }
  fam.q_tail = tail;
  // q_1 = 1 - tail; tail < 2^{-ka}/a < 1 for every valid (a, k), so the
  // deficit check below can only fire on broken arithmetic
  if (tail >= 1.0)
    throw std::domain_error("part4_family: q_1 deficit " + std::to_string(tail - 1.0) +
                            " (tail mass " + std::to_string(tail) + " reaches 1)");
  fam.log2_q[0] = std::log1p(-tail) / std::log(2.0);
  return fam;
}

std::pair<ProbVector, ProbVector> part4_family(const ExtremalParams& params) {
  const ExtremalFamilyLog fam = part4_family_log(params);
  std::vector<double> q(fam.p.size());
  for (std::size_t i = 1; i < q.size(); ++i) q[i] = std::exp2(fam.log2_q[i]);
  q[0] = 1.0 - fam.q_tail;
  return {ProbVector(fam.p), ProbVector(std::move(q))};
}

GapReport part4_gap_report(const ExtremalParams& params) {
  const ExtremalFamilyLog fam = part4_family_log(params);
  const double a = params.a, k = params.k;
  const int n = params.n;

  // S = sum p_i (log2 p_i - log2 q_i); the i >= 2 ratios are k*a^{i-1} exactly
  double s = fam.p[0] * (std::log2(fam.p[0]) - fam.log2_q[0]);
  for (int i = 2; i <= n; ++i)
    s += fam.p[static_cast<std::size_t>(i - 1)] * k * std::pow(a, i - 1);

  GapReport rep;
  rep.s = s;
  rep.d = divergence_from_log_ratios(fam.p, fam.log2_q).value;
  rep.s_lower = k * (n - 1.0) - k * (n - 2.0) / a - 1.0;
  rep.ratio = rep.s / (rep.d * (n - 1.0));
  rep.s_above_lower = rep.s > rep.s_lower;
  rep.s_above_gap_bound = rep.s > (rep.d / 2.0 - 1.0) * (n - 2.0) - 1.0;
  rep.d_within_cap = rep.d <= 2.0 * (k + 1.0);
  return rep;
}

TruncationReport part4_truncation_witness(const ExtremalParams& params, double r) {
  params.validate();
  if (!(r > 1.0)) throw std::invalid_argument("part4_truncation_witness: r <= 1");
  const ExtremalFamilyLog fam = part4_family_log(params);
  const int n = params.n;

  int m = static_cast<int>(std::floor(std::log(r) / std::log(params.a))) + 1;
  m = std::max(1, std::min(n, m));

  double head = 0.0;
  for (int i = 0; i < m; ++i) head += fam.p[static_cast<std::size_t>(i)];
  const double tail = std::max(0.0, 1.0 - head);

  TruncationReport rep;
  rep.cut = m;
  rep.distance = 2.0 * tail;  // renormalizing the head doubles the tail mass
  rep.distance_bound = 2.0 / r;
  rep.distance_ok = rep.distance <= rep.distance_bound + 1e-9;

  // domination in bits: log2((1-1/r) p_i / head) - rk <= log2 q_i for i <= m
  const double norm_bits = std::log2(1.0 - 1.0 / r) - std::log2(head) - r * params.k;
  double worst = -kInfBits;
  for (int i = 0; i < m; ++i) {
    const double margin =
        norm_bits + std::log2(fam.p[static_cast<std::size_t>(i)]) - fam.log2_q[static_cast<std::size_t>(i)];
    worst = std::max(worst, margin);
  }
  rep.domination_margin_bits = worst;
  rep.domination_ok = worst <= 1e-9;
  return rep;
}

}  // namespace qdist
