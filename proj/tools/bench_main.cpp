#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "qdist/measures.hpp"
#include "qdist/states.hpp"
#include "qdist/suite.hpp"

namespace {

using namespace qdist;

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

template <class F>
double time_ms(F f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

std::string strip_timing(const std::string& report_json) {
  auto j = nlohmann::json::parse(report_json);
  j.erase("wall_ms");
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  int n = 12;
  int grid = 150;
  long trials = 80;
  int reps = 3;

  CLI::App app{"serial vs OpenMP timings for the heavy kernels"};
  app.add_option("--n", n, "bruteforce dimension (<= 12)");
  app.add_option("--grid", grid, "bruteforce theta grid");
  app.add_option("--trials", trials, "suite trials per thread setting");
  app.add_option("--reps", reps, "timing repetitions");
  CLI11_PARSE(app, argc, argv);

  const int threads = max_threads();
  std::printf("hardware threads available: %d\n\n", threads);

  // subset-enumeration oracle, the hottest loop in the acceptance run
  {
    const ProbVector p = random_distribution(n, 2024);
    const ProbVector q = random_distribution(n, 2025);
    double serial_val = 0.0, par_val = 0.0;
    const double t_serial =
        time_ms([&] { serial_val = divergence_classical_bruteforce_serial(p, q, grid); }, reps);
    set_threads(threads);
    const double t_par =
        time_ms([&] { par_val = divergence_classical_bruteforce(p, q, grid); }, reps);
    std::printf("bruteforce divergence  n=%d grid=%d\n", n, grid);
    std::printf("  serial   %9.2f ms\n", t_serial);
    std::printf("  parallel %9.2f ms  (%d threads, speedup %.2fx)\n", t_par, threads,
                t_serial / t_par);
    std::printf("  |serial - parallel| = %.3g\n\n", std::abs(serial_val - par_val));
  }

  // random-instance suite: same function, thread count varied; the report
  // must not depend on it
  {
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.trials = trials;
    cfg.mode = SuiteMode::kClassical;

    set_threads(1);
    std::string rep1;
    const double t1 = time_ms([&] { rep1 = suite_report_to_json(run_suite(cfg)); }, 1);
    set_threads(threads);
    std::string repN;
    const double tN = time_ms([&] { repN = suite_report_to_json(run_suite(cfg)); }, 1);

    std::printf("classical suite  trials=%ld dims=2..6\n", trials);
    std::printf("  1 thread   %9.2f ms\n", t1);
    std::printf("  %d thread%s %9.2f ms  (speedup %.2fx)\n", threads, threads == 1 ? " " : "s",
                tN, t1 / tN);
    std::printf("  reports identical modulo timing: %s\n",
                strip_timing(rep1) == strip_timing(repN) ? "yes" : "NO");
  }
  return 0;
}
