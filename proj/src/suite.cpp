#include "qdist/suite.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "qdist/json_io.hpp"
#include "qdist/rng.hpp"
#include "qdist/substate.hpp"

namespace qdist {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kChecksPerKind = 4;

struct CheckDef {
  const char* name;
  const char* claim;
};

constexpr std::array<CheckDef, kChecksPerKind> kClassicalChecks = {{
    {"classical_divergence_entropy_gap", "D(P|Q) <= S(P|Q) + 1"},
    {"classical_entropy_scaling", "S(P|Q) <= D(P|Q) * (n-1)"},
    {"classical_substate_spot_check", "substate property holds at k = 8*D + 14"},
    {"classical_substate_converse", "D(P|Q) <= 2k + 2 at the bisected minimal k"},
}};

constexpr std::array<CheckDef, kChecksPerKind> kQuantumChecks = {{
    {"quantum_divergence_entropy_gap", "D(rho|sigma) <= S(rho|sigma) + 1"},
    {"quantum_measured_entropy_chain", "S <= D_measured * (n-1) + log2 n"},
    {"quantum_strong_substate_bound", "S(rho|sigma) <= strong_substate_k(rho, sigma)"},
    {"quantum_binary_witness_floor", "S_bin(p,q) >= (S - log2 n)/(n-1) - 1"},
}};

// lhs <= rhs is the claim; a non-finite side marks the trial vacuous for
// that inequality (infinities arise only from support mismatches)
struct CheckSlot {
  double lhs = 0.0;
  double rhs = 0.0;
};

struct TrialSlot {
  int dim = 0;
  std::uint64_t seed_a = 0;
  std::uint64_t seed_b = 0;
  std::array<CheckSlot, kChecksPerKind> checks;
  std::string a_json;  // instances, rendered only when some check fails
  std::string b_json;
};

bool slot_vacuous(const CheckSlot& c) {
  return !std::isfinite(c.lhs) || !std::isfinite(c.rhs);
}

bool slot_fails(const CheckSlot& c, double tol) {
  return !slot_vacuous(c) && c.rhs - c.lhs < -tol;
}

bool any_failure(const TrialSlot& t, double tol) {
  for (const CheckSlot& c : t.checks)
    if (slot_fails(c, tol)) return true;
  return false;
}

void eval_classical_trial(const SuiteConfig& cfg, const std::vector<double>& r_grid, long t,
                          TrialSlot* slot) {
  slot->dim = cfg.dims[static_cast<std::size_t>(t) % cfg.dims.size()];
  slot->seed_a = derive_seed(cfg.seed, static_cast<std::uint64_t>(2 * t));
  slot->seed_b = derive_seed(cfg.seed, static_cast<std::uint64_t>(2 * t + 1));
  const ProbVector p = random_distribution(slot->dim, slot->seed_a);
  const ProbVector q = random_distribution(slot->dim, slot->seed_b);

  const double s = rel_entropy_classical(p, q);
  const double d = divergence_classical_exact(p, q).value;
  slot->checks[0] = {d, s + 1.0};
  slot->checks[1] = {s, d * (slot->dim - 1)};

  const PartCheck spot = verify_part5_classical(p, q, cfg.tolerance, r_grid);
  slot->checks[2] = spot.vacuous ? CheckSlot{kInfBits, kInfBits} : CheckSlot{spot.lhs, spot.rhs};

  const double k = substate_k_classical(p, q, 1e-4, r_grid);
  const PartCheck conv = verify_part6(p, q, std::isinf(k) ? 0.0 : k, cfg.tolerance, r_grid);
  slot->checks[3] = (conv.vacuous || std::isinf(k)) ? CheckSlot{kInfBits, kInfBits}
                                                    : CheckSlot{conv.lhs, conv.rhs};

  if (any_failure(*slot, cfg.tolerance)) {
    slot->a_json = state_to_json(p);
    slot->b_json = state_to_json(q);
  }
}

void eval_quantum_trial(const SuiteConfig& cfg, long t, TrialSlot* slot) {
  slot->dim = cfg.dims[static_cast<std::size_t>(t) % cfg.dims.size()];
  // distinct seed stream from the classical trials
  slot->seed_a = derive_seed(cfg.seed, static_cast<std::uint64_t>(2 * (cfg.trials + t)));
  slot->seed_b = derive_seed(cfg.seed, static_cast<std::uint64_t>(2 * (cfg.trials + t) + 1));
  const DensityMatrix rho = random_density(slot->dim, slot->seed_a);
  const DensityMatrix sigma = random_density(slot->dim, slot->seed_b);

  const double s = rel_entropy_quantum(rho, sigma);
  const DivergenceResult d = divergence_quantum(rho, sigma, cfg.lambda_grid);
  slot->checks[0] = {d.value, s + 1.0};

  const auto [pm, qm] = measure_in_eigenbasis(rho, sigma);
  const double dm = divergence_classical_exact(pm, qm).value;
  slot->checks[1] = {s, dm * (slot->dim - 1) + std::log2(slot->dim)};

  slot->checks[2] = {s, strong_substate_k(rho, sigma)};

  const double bin_floor = (s - std::log2(slot->dim)) / (slot->dim - 1) - 1.0;
  const double s_bin =
      std::isinf(d.value) ? kInfBits : binary_rel_entropy(d.p, d.q);
  slot->checks[3] = {bin_floor, s_bin};

  if (any_failure(*slot, cfg.tolerance)) {
    slot->a_json = state_to_json(rho);
    slot->b_json = state_to_json(sigma);
  }
}

void aggregate(const SuiteConfig& cfg, const std::array<CheckDef, kChecksPerKind>& defs,
               const std::vector<TrialSlot>& slots, SuiteReport* report) {
  for (int c = 0; c < kChecksPerKind; ++c) {
    PartStats st;
    st.name = defs[static_cast<std::size_t>(c)].name;
    for (long t = 0; t < static_cast<long>(slots.size()); ++t) {
      const CheckSlot& cs = slots[static_cast<std::size_t>(t)].checks[static_cast<std::size_t>(c)];
      if (slot_vacuous(cs)) {
        ++st.vacuous;
        continue;
      }
      const double margin = cs.rhs - cs.lhs;
      if (margin < -cfg.tolerance) {
        ++st.fail;
        const TrialSlot& ts = slots[static_cast<std::size_t>(t)];
        report->failures.push_back({st.name, t, ts.dim, margin, ts.seed_a, ts.seed_b,
                                    ts.a_json, ts.b_json});
      } else {
        ++st.pass;
      }
      if (margin < st.worst_margin) {
        st.worst_margin = margin;
        st.worst_trial = t;
      }
    }
    report->parts.push_back(std::move(st));
  }
}

}  // namespace

void SuiteConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("SuiteConfig: trials must be >= 1");
  if (dims.empty()) throw std::invalid_argument("SuiteConfig: dims must be nonempty");
  for (int d : dims)
    if (d < 2) throw std::invalid_argument("SuiteConfig: dims must all be >= 2");
  if (!(tolerance > 0.0)) throw std::invalid_argument("SuiteConfig: tolerance must be > 0");
  if (lambda_grid < 8) throw std::invalid_argument("SuiteConfig: lambda_grid must be >= 8");
  if (r_grid < 2) throw std::invalid_argument("SuiteConfig: r_grid must be >= 2");
}

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  SuiteReport report;
  report.config = config;
  const std::vector<double> r_grid = default_r_grid(config.r_grid);

  if (config.mode != SuiteMode::kQuantum) {
    std::vector<TrialSlot> slots(static_cast<std::size_t>(config.trials));
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < config.trials; ++t)
      eval_classical_trial(config, r_grid, t, &slots[static_cast<std::size_t>(t)]);
    aggregate(config, kClassicalChecks, slots, &report);
  }
  if (config.mode != SuiteMode::kClassical) {
    std::vector<TrialSlot> slots(static_cast<std::size_t>(config.trials));
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < config.trials; ++t)
      eval_quantum_trial(config, t, &slots[static_cast<std::size_t>(t)]);
    aggregate(config, kQuantumChecks, slots, &report);
  }

  report.total_failures = static_cast<long>(report.failures.size());
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

std::string suite_report_to_json(const SuiteReport& report) {
  ordered_json j;
  j["config"] = {{"seed", report.config.seed},
                 {"trials", report.config.trials},
                 {"dims", report.config.dims},
                 {"mode", suite_mode_name(report.config.mode)},
                 {"tolerance", report.config.tolerance},
                 {"lambda_grid", report.config.lambda_grid},
                 {"r_grid", report.config.r_grid}};

  const auto claim_of = [](const std::string& name) -> const char* {
    for (const CheckDef& d : kClassicalChecks)
      if (name == d.name) return d.claim;
    for (const CheckDef& d : kQuantumChecks)
      if (name == d.name) return d.claim;
    return "";
  };

  j["parts"] = ordered_json::array();
  for (const PartStats& st : report.parts) {
    ordered_json p;
    p["name"] = st.name;
    p["claim"] = claim_of(st.name);
    p["pass"] = st.pass;
    p["fail"] = st.fail;
    p["vacuous"] = st.vacuous;
    if (std::isfinite(st.worst_margin)) {
      p["worst_margin"] = st.worst_margin;
      p["worst_trial"] = st.worst_trial;
    } else {
      p["worst_margin"] = nullptr;  // every trial was vacuous
      p["worst_trial"] = nullptr;
    }
    j["parts"].push_back(std::move(p));
  }

  j["failures"] = ordered_json::array();
  for (const SuiteFailure& f : report.failures) {
    ordered_json rec;
    rec["part"] = f.part;
    rec["trial"] = f.trial;
    rec["dim"] = f.dim;
    rec["margin"] = f.margin;
    rec["seed_first"] = f.seed_first;
    rec["seed_second"] = f.seed_second;
    rec["first"] = ordered_json::parse(f.first_json);
    rec["second"] = ordered_json::parse(f.second_json);
    j["failures"].push_back(std::move(rec));
  }

  j["total_failures"] = report.total_failures;
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

bool parse_suite_mode(const std::string& text, SuiteMode* mode) {
  if (text == "classical") *mode = SuiteMode::kClassical;
  else if (text == "quantum") *mode = SuiteMode::kQuantum;
  else if (text == "both") *mode = SuiteMode::kBoth;
  else return false;
  return true;
}

std::string suite_mode_name(SuiteMode mode) {
  switch (mode) {
    case SuiteMode::kClassical: return "classical";
    case SuiteMode::kQuantum: return "quantum";
    default: return "both";
  }
}

}  // namespace qdist
