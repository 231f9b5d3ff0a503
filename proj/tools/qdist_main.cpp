#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdist/extremal.hpp"
#include "qdist/json_io.hpp"
#include "qdist/measures.hpp"
#include "qdist/substate.hpp"
#include "qdist/suite.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qdist;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// infinities become the string "infinite" so reports stay valid JSON
ordered_json json_number(double x) {
  if (std::isinf(x)) return "infinite";
  return x;
}

ordered_json witness_to_json(const TestOperator& m) {
  if (m.is_classical()) return m.weights();
  ordered_json j;
  const CMat& mat = m.matrix();
  j["dim"] = mat.dim();
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < mat.dim(); ++i)
    for (int k = 0; k < mat.dim(); ++k)
      entries.push_back({mat(i, k).real(), mat(i, k).imag()});
  j["entries"] = std::move(entries);
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QDIST_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

// --- suite ---

int run_suite_cmd(const SuiteConfig& cfg, const std::string& out_path) {
  const SuiteReport report = run_suite(cfg);
  const std::string json = suite_report_to_json(report);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    write_text(out_path, json);
    std::printf("suite: %ld trial(s) per kind, %ld failure(s), report written to %s\n",
                cfg.trials, report.total_failures, out_path.c_str());
  }
  return report.total_failures > 0 ? 1 : 0;
}

// --- measure ---

int run_measure_cmd(const std::string& file_a, const std::string& file_b, bool as_json,
                    int lambda_grid, int r_grid_size, const std::string& out_path) {
  const StateFile a = load_state(file_a);
  const StateFile b = load_state(file_b);
  if (is_classical(a) != is_classical(b))
    throw std::runtime_error("measure: state kinds differ (classical vs quantum)");
  if (state_dim(a) != state_dim(b))
    throw std::runtime_error("measure: state dimensions differ");

  ordered_json j;
  std::string text;
  if (is_classical(a)) {
    const ProbVector& p = std::get<0>(a);
    const ProbVector& q = std::get<0>(b);
    const double s = rel_entropy_classical(p, q);
    const DivergenceResult d = divergence_classical_exact(p, q);
    const double ks = strong_substate_k(p, q);
    const double ksub = substate_k_classical(p, q, 1e-4, default_r_grid(r_grid_size));

    j["kind"] = "classical";
    j["dim"] = p.dim();
    j["rel_entropy_bits"] = json_number(s);
    j["divergence_bits"] = json_number(d.value);
    j["divergence_method"] = "ratio-threshold frontier scan (exact)";
    j["witness"] = {{"accept_p", d.p}, {"accept_q", d.q}, {"weights", witness_to_json(d.witness)}};
    j["strong_substate_k_bits"] = json_number(ks);
    j["substate_k_bits"] = json_number(ksub);
    j["substate_r_grid"] = r_grid_size;

    text += "kind: classical  dim: " + std::to_string(p.dim()) + "\n";
    text += "rel_entropy_bits: " + (std::isinf(s) ? "infinite" : fmt(s)) + "\n";
    text += "divergence_bits: " + (std::isinf(d.value) ? "infinite" : fmt(d.value)) +
            "  [ratio-threshold frontier scan, exact]\n";
    text += "  witness accept_p: " + fmt(d.p) + "  accept_q: " + fmt(d.q) + "\n";
    text += "strong_substate_k_bits: " + (std::isinf(ks) ? "infinite" : fmt(ks)) + "\n";
    text += "substate_k_bits: " + (std::isinf(ksub) ? "infinite" : fmt(ksub)) +
            "  [bisection 1e-4, r grid " + std::to_string(r_grid_size) + "]\n";
  } else {
    const DensityMatrix& rho = std::get<1>(a);
    const DensityMatrix& sigma = std::get<1>(b);
    const double s = rel_entropy_quantum(rho, sigma);
    const DivergenceResult d = divergence_quantum(rho, sigma, lambda_grid);
    const double ks = strong_substate_k(rho, sigma);

    j["kind"] = "quantum";
    j["dim"] = rho.dim();
    j["rel_entropy_bits"] = json_number(s);
    j["divergence_bits"] = json_number(d.value);
    j["divergence_method"] = "spectral threshold tests (certified lower bound)";
    j["lambda_grid"] = lambda_grid;
    j["witness"] = {{"accept_p", d.p}, {"accept_q", d.q}, {"operator", witness_to_json(d.witness)}};
    j["strong_substate_k_bits"] = json_number(ks);

    text += "kind: quantum  dim: " + std::to_string(rho.dim()) + "\n";
    text += "rel_entropy_bits: " + (std::isinf(s) ? "infinite" : fmt(s)) + "\n";
    text += "divergence_bits: " + (std::isinf(d.value) ? "infinite" : fmt(d.value)) +
            "  [spectral threshold tests, " + std::to_string(lambda_grid) +
            " lambda points + refinement, certified lower bound]\n";
    text += "  witness accept_p: " + fmt(d.p) + "  accept_q: " + fmt(d.q) + "\n";
    text += "strong_substate_k_bits: " + (std::isinf(ks) ? "infinite" : fmt(ks)) + "\n";
  }

  write_text(out_path, as_json ? j.dump(2) + "\n" : text);
  return 0;
}

// --- extremal ---

int run_extremal_cmd(double a, double k, int n, int r_grid_size, bool as_json,
                     const std::string& out_path) {
  const ExtremalParams params{a, k, n};
  const GapReport rep = part4_gap_report(params);
  const std::vector<double> rs = default_r_grid(r_grid_size);

  std::string csv = "r,truncation_distance,distance_bound,domination_margin_bits\n";
  bool all_ok = true;
  for (double r : rs) {
    const TruncationReport tr = part4_truncation_witness(params, r);
    all_ok = all_ok && tr.distance_ok && tr.domination_ok;
    csv += fmt(r) + "," + fmt(tr.distance) + "," + fmt(tr.distance_bound) + "," +
           fmt(tr.domination_margin_bits) + "\n";
  }

  if (as_json) {
    ordered_json j;
    j["params"] = {{"a", a}, {"k", k}, {"n", n}};
    j["rel_entropy_bits"] = rep.s;
    j["divergence_bits"] = rep.d;
    j["entropy_lower_bound"] = rep.s_lower;
    j["entropy_above_lower_bound"] = rep.s_above_lower;
    j["entropy_above_gap_bound"] = rep.s_above_gap_bound;
    j["divergence_within_cap"] = rep.d_within_cap;
    j["ratio_vs_scaling_ceiling"] = rep.ratio;
    j["truncation_all_ok"] = all_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("family a=%s k=%s n=%d\n", fmt(a).c_str(), fmt(k).c_str(), n);
    std::printf("rel_entropy_bits: %s\n", fmt(rep.s).c_str());
    std::printf("divergence_bits:  %s  [log-domain frontier scan]\n", fmt(rep.d).c_str());
    std::printf("entropy lower bound k(n-1) - k(n-2)/a - 1 = %s  -> %s\n", fmt(rep.s_lower).c_str(),
                rep.s_above_lower ? "holds" : "VIOLATED");
    std::printf("entropy > (D/2 - 1)(n-2) - 1               -> %s\n",
                rep.s_above_gap_bound ? "holds" : "VIOLATED");
    std::printf("divergence <= 2(k+1)                       -> %s\n",
                rep.d_within_cap ? "holds" : "VIOLATED");
    std::printf("entropy / (divergence * (n-1)) = %s\n", fmt(rep.ratio).c_str());
    std::printf("truncation sweep over %d r values: %s\n", r_grid_size,
                all_ok ? "all certificates hold" : "VIOLATIONS FLAGGED");
  }

  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text(out_path, csv);
    std::printf("truncation CSV written to %s\n", out_path.c_str());
  }
  const bool gap_ok = rep.s_above_lower && rep.s_above_gap_bound && rep.d_within_cap;
  return (gap_ok && all_ok) ? 0 : 1;
}

// --- frontier ---

int run_frontier_cmd(const std::string& file_a, const std::string& file_b, int lambda_grid,
                     const std::string& out_path) {
  const StateFile a = load_state(file_a);
  const StateFile b = load_state(file_b);
  if (is_classical(a) != is_classical(b))
    throw std::runtime_error("frontier: state kinds differ (classical vs quantum)");
  if (state_dim(a) != state_dim(b))
    throw std::runtime_error("frontier: state dimensions differ");

  std::vector<FrontierRow> rows;
  if (is_classical(a))
    rows = classical_frontier(std::get<0>(a), std::get<0>(b));
  else
    rows = quantum_frontier(std::get<1>(a), std::get<1>(b), lambda_grid);

  std::string csv = "threshold,p,q,objective\n";
  for (const FrontierRow& row : rows)
    csv += fmt(row.threshold) + "," + fmt(row.p) + "," + fmt(row.q) + "," + fmt(row.objective) +
           "\n";
  write_text(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinguishability measures for small quantum and classical states"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  cfg.seed = default_seed();
  std::string mode = "both";
  std::string out_path;

  CLI::App* suite = app.add_subcommand("suite", "random-instance verification suite");
  suite->add_option("--seed", cfg.seed, "PRNG seed (default: QDIST_SEED env or 1)");
  suite->add_option("--trials", cfg.trials, "trials per kind")->check(CLI::PositiveNumber);
  suite->add_option("--dims", cfg.dims, "instance dimensions, cycled over trials")
      ->delimiter(',');
  suite->add_option("--mode", mode, "classical|quantum|both");
  suite->add_option("--tol", cfg.tolerance, "inequality slack in bits");
  suite->add_option("--lambda-grid", cfg.lambda_grid, "lambda grid size for quantum divergence");
  suite->add_option("--r-grid", cfg.r_grid, "r grid size for substate checks");
  suite->add_option("--out", out_path, "write the JSON report here instead of stdout");

  std::string file_a, file_b;
  bool as_json = false;
  int lambda_grid = 512;
  int r_grid_size = 64;

  CLI::App* measure = app.add_subcommand("measure", "measures for one state pair");
  measure->add_option("first", file_a, "first state file (JSON)")->required();
  measure->add_option("second", file_b, "second state file (JSON)")->required();
  measure->add_flag("--json", as_json, "emit JSON instead of text");
  measure->add_option("--lambda-grid", lambda_grid, "lambda grid size (quantum)");
  measure->add_option("--r-grid", r_grid_size, "r grid size (classical substate)");
  measure->add_option("--out", out_path, "write output here instead of stdout");

  double fam_a = 2.0, fam_k = 1.0;
  int fam_n = 4;

  CLI::App* extremal = app.add_subcommand("extremal", "near-tight family reports");
  extremal->add_option("--a", fam_a, "ratio base, > 1");
  extremal->add_option("--k", fam_k, "scale in bits, > 0");
  extremal->add_option("--n", fam_n, "number of outcomes, >= 3");
  extremal->add_option("--r-grid", r_grid_size, "r sweep size for the truncation CSV");
  extremal->add_flag("--json", as_json, "emit the gap report as JSON");
  extremal->add_option("--out", out_path, "write the CSV here instead of stdout");

  CLI::App* frontier = app.add_subcommand("frontier", "acceptance-probability frontier CSV");
  frontier->add_option("first", file_a, "first state file (JSON)")->required();
  frontier->add_option("second", file_b, "second state file (JSON)")->required();
  frontier->add_option("--lambda-grid", lambda_grid, "lambda grid size (quantum)");
  frontier->add_option("--out", out_path, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is 0
  }

  try {
    if (suite->parsed()) {
      if (!parse_suite_mode(mode, &cfg.mode))
        throw std::runtime_error("suite: mode must be classical, quantum, or both");
      return run_suite_cmd(cfg, out_path);
    }
    if (measure->parsed())
      return run_measure_cmd(file_a, file_b, as_json, lambda_grid, r_grid_size, out_path);
    if (extremal->parsed())
      return run_extremal_cmd(fam_a, fam_k, fam_n, r_grid_size, as_json, out_path);
    if (frontier->parsed())
      return run_frontier_cmd(file_a, file_b, lambda_grid, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
