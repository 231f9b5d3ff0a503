#pragma once

#include <utility>
#include <vector>

#include "qdist/measures.hpp"
#include "qdist/states.hpp"

namespace qdist {

// Family parameters: ratio base a > 1, scale k > 0 bits, n >= 3 outcomes.
struct ExtremalParams {
  double a = 2.0;
  double k = 1.0;
  int n = 4;

  void validate() const;
};

// The two-distribution family with p_1 = (a-1)/a, p_i = (a-1)/a^i for
// i < n, p_n = 1/a^{n-1}, and q_i = p_i / 2^{k a^{i-1}} for i >= 2,
// q_1 = 1 - sum of the rest. Small relative-entropy gap ratio at small a,
// approaching the divergence*(n-1) ceiling as a grows.
std::pair<ProbVector, ProbVector> part4_family(const ExtremalParams& params);

// Same family with q kept in log2 form: the exponents k*a^{i-1} overflow
// any double representation of q_i long before n reaches 8.
struct ExtremalFamilyLog {
  std::vector<double> p;
  std::vector<double> log2_q;
  double q_tail = 0.0;  // sum_{i>=2} q_i (as a double; may underflow to 0)
};
ExtremalFamilyLog part4_family_log(const ExtremalParams& params);

struct GapReport {
  double s = 0.0;        // relative entropy, computed from log ratios
  double d = 0.0;        // divergence via the log-domain frontier scan
  double s_lower = 0.0;  // k(n-1) - k(n-2)/a - 1
  double ratio = 0.0;    // s / (d * (n-1))
  bool s_above_lower = false;      // s > s_lower
  bool s_above_gap_bound = false;  // s > (d/2 - 1)(n-2) - 1
  bool d_within_cap = false;       // d <= 2(k+1)
};
GapReport part4_gap_report(const ExtremalParams& params);

// Truncation certificate at budget r: keep the first m = floor(log_a r) + 1
// outcomes of P (clamped to [1, n]), renormalize, and check the two claimed
// properties: l1 distance to P at most 2/r, and (1-1/r) Ptilde_i / 2^{rk}
// dominated by q_i (margin tracked in bits; <= 0 means dominated).
struct TruncationReport {
  int cut = 0;
  double distance = 0.0;
  double distance_bound = 0.0;  // 2/r
  double domination_margin_bits = 0.0;
  bool distance_ok = false;
  bool domination_ok = false;
};
TruncationReport part4_truncation_witness(const ExtremalParams& params, double r);

}  // namespace qdist
