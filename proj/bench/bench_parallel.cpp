// Timing comparison of the parallel kernels against their serial reference
// paths: exhaustive enumeration and multi-trial experiments.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nfgmc/analysis_exact.hpp"
#include "nfgmc/experiment.hpp"

using namespace nfgmc;

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_enumeration() {
  // primal 2^20 and dual 3^12 configurations
  const ModelSpec p{.q = 2, .L = 4, .beta = 0.6, .kind = KernelKind::potts, .custom_kernel = {}};
  const ModelSpec d{.q = 3, .L = 3, .beta = 0.6, .kind = KernelKind::potts, .custom_kernel = {}};

  for (const auto& [name, spec, rep] :
       {std::tuple{"primal q=2 L=4", p, Representation::primal},
        std::tuple{"dual   q=3 L=3", d, Representation::dual}}) {
    ExactSums serial, parallel;
    const double ts = time_ms([&] { serial = exact_sums_serial(spec, rep); });
    const double tp = time_ms([&] { parallel = exact_sums(spec, rep); });
    std::printf("enumeration %-15s serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
                name, ts, tp, ts / tp,
                serial.log_z == parallel.log_z ? "identical" : "MISMATCH");
  }
}

void bench_trials() {
  ExperimentConfig cfg;
  cfg.model =
      ModelSpec{.q = 4, .L = 8, .beta = 0.8, .kind = KernelKind::potts, .custom_kernel = {}};
  cfg.rep = Representation::dual;
  cfg.estimator = EstimatorKind::ot;
  cfg.samples = 2000;
  cfg.trials = 16;
  cfg.burn_in = 50;
  cfg.base_seed = 7;

  cfg.jobs = 1;
  ExperimentResult serial, parallel;
  const double ts = time_ms([&] { serial = run_experiment(cfg); });
  cfg.jobs = 0;  // all hardware threads
  const double tp = time_ms([&] { parallel = run_experiment(cfg); });

  bool same = true;
  for (size_t t = 0; t < serial.trials.size(); ++t)
    same = same && serial.trials[t].per_site.checkpoints.back().second ==
                       parallel.trials[t].per_site.checkpoints.back().second;
  std::printf("trials      q=4 L=8 x16      serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
              ts, tp, ts / tp, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel paths run serially\n");
#endif
  bench_enumeration();
  bench_trials();
  return 0;
}
