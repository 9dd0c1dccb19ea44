// Command-line harness: partition-function estimation experiments on the
// primal and dual representations of Potts/clock models, exact oracles,
// variance bounds and self-checks.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nfgmc/analysis_exact.hpp"
#include "nfgmc/errors.hpp"
#include "nfgmc/experiment.hpp"

namespace {

using namespace nfgmc;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitTooLarge = 4;

struct CliOptions {
  std::string model = "potts";
  int q = 2;
  int L = 4;
  std::vector<double> betas;
  std::string rep = "primal";
  std::string estimator = "ot";
  std::int64_t samples = 10'000;
  int trials = 30;
  int burn_in = 0;
  std::uint64_t seed = 1;
  std::vector<std::int64_t> checkpoints;
  int jobs = 1;
  std::string out = "out";
};

KernelKind parse_kind(const std::string& name) {
  if (name == "potts") return KernelKind::potts;
  if (name == "clock") return KernelKind::clock;
  throw ConfigError("unknown model '" + name + "' (expected potts or clock)");
}

std::vector<Representation> parse_reps(const std::string& name) {
  if (name == "primal") return {Representation::primal};
  if (name == "dual") return {Representation::dual};
  if (name == "both") return {Representation::primal, Representation::dual};
  throw ConfigError("unknown representation '" + name + "'");
}

std::vector<EstimatorKind> parse_estimators(const std::string& name) {
  if (name == "ot") return {EstimatorKind::ot};
  if (name == "uniform") return {EstimatorKind::uniform};
  if (name == "both") return {EstimatorKind::ot, EstimatorKind::uniform};
  throw ConfigError("unknown estimator '" + name + "'");
}

ExperimentConfig base_config(const CliOptions& opt, double beta) {
  ExperimentConfig config;
  config.model = ModelSpec{opt.q, opt.L, beta, parse_kind(opt.model), std::nullopt};
  config.samples = opt.samples;
  config.trials = opt.trials;
  config.burn_in = opt.burn_in;
  config.checkpoints = opt.checkpoints;
  config.base_seed = opt.seed;
  config.jobs = opt.jobs;
  return config;
}

double single_beta(const CliOptions& opt, double fallback) {
  if (opt.betas.empty()) return fallback;
  return opt.betas.front();
}

int cmd_estimate(const CliOptions& opt) {
  if (opt.betas.size() > 1) throw ConfigError("estimate takes a single --beta; use sweep for lists");
  for (Representation rep : parse_reps(opt.rep)) {
    for (EstimatorKind est : parse_estimators(opt.estimator)) {
      ExperimentConfig config = base_config(opt, single_beta(opt, 0.5));
      config.rep = rep;
      config.estimator = est;
      const ExperimentResult result = run_experiment(config);
      const auto [raw, summary] = emit_csv(result, opt.out);
      std::printf("# %s %s  (raw: %s)\n", representation_name(rep).c_str(),
                  estimator_name(est).c_str(), raw.string().c_str());
      std::printf("%12s %22s %22s\n", "M", "mean log Z per site", "std");
      for (const SummaryRow& row : result.summary)
        std::printf("%12lld %22.12f %22.6e\n", static_cast<long long>(row.m), row.mean,
                    row.stddev);
    }
  }
  return kExitOk;
}

int cmd_sweep(const CliOptions& opt) {
  if (opt.betas.empty()) throw ConfigError("sweep needs at least one --beta");
  const ExperimentConfig base = base_config(opt, opt.betas.front());
  const auto rows =
      beta_sweep(base, opt.betas, parse_reps(opt.rep), parse_estimators(opt.estimator), opt.out);
  emit_sweep_csv(rows, opt.out);
  std::printf("%10s %8s %8s %12s %22s %14s\n", "beta", "rep", "est", "M", "mean/site", "std");
  for (const SweepRow& row : rows)
    std::printf("%10g %8s %8s %12lld %22.12f %14.6e\n", row.beta,
                representation_name(row.rep).c_str(), estimator_name(row.estimator).c_str(),
                static_cast<long long>(row.m), row.mean, row.stddev);
  std::printf("wrote %s/sweep_summary.csv\n", opt.out.c_str());
  return kExitOk;
}

int cmd_exact(const CliOptions& opt) {
  std::vector<double> betas = opt.betas.empty() ? std::vector<double>{0.5} : opt.betas;
  for (double beta : betas) {
    ModelSpec spec{opt.q, opt.L, beta, parse_kind(opt.model), std::nullopt};
    const int n = spec.n_sites();
    for (Representation rep : parse_reps(opt.rep)) {
      const double log_z = brute_force_log_z(spec, rep);
      const double model_log_z = to_model_log_z(log_z, rep, spec);
      std::printf("beta=%-8g rep=%-6s  log Z_rep=%.12f  model log Z=%.12f  per-site=%.12f\n",
                  beta, representation_name(rep).c_str(), log_z, model_log_z, model_log_z / n);
      std::printf("    asym var: OT=%.12e  uniform=%.12e\n", exact_asym_var_ot(spec, rep),
                  exact_asym_var_uniform(spec, rep));
    }
    try {
      std::printf("    transfer-matrix log Z=%.12f\n", transfer_matrix_log_z(spec));
    } catch (const TooLargeForTransfer&) {
      std::printf("    transfer-matrix: instance too large\n");
    }
  }
  return kExitOk;
}

int cmd_bounds(const CliOptions& opt) {
  std::vector<double> betas = opt.betas.empty() ? std::vector<double>{0.5} : opt.betas;
  const int n = opt.L * opt.L;
  std::printf("primal crossover beta0 = %.12f\n", prop1_bounds(betas.front(), n, opt.q).crossover);
  std::printf("%10s %6s %16s %16s %16s %16s\n", "beta", "rep", "log1p(L_OT)", "log1p(R_OT)",
              "log1p(L_U)", "log1p(R_U)");
  for (double beta : betas) {
    const BoundsReport p = prop1_bounds(beta, n, opt.q);
    std::printf("%10g %6s %16.8f %16.8f %16.8f %16.8f\n", beta, "primal", p.log1p_l_ot,
                p.log1p_r_ot, p.log1p_l_u, p.log1p_r_u);
    if (beta > 0.0 && n % 2 == 0) {
      const BoundsReport d = prop2_bounds(beta, n, opt.q);
      std::printf("%10g %6s %16.8f %16.8f %16.8f %16.8f   r=%.8f\n", beta, "dual", d.log1p_l_ot,
                  d.log1p_r_ot, d.log1p_l_u, d.log1p_r_u, d.r);
    }
  }
  if (n % 2 == 0)
    std::printf("dual crossover beta0' = %.12f\n",
                prop2_bounds(betas.front() > 0 ? betas.front() : 0.5, n, opt.q).crossover);
  return kExitOk;
}

int cmd_verify(const CliOptions& opt) {
  int failures = 0;
  auto report = [&failures](const std::string& name, bool ok, double worst) {
    std::printf("%-44s %s (max err %.3e)\n", name.c_str(), ok ? "PASS" : "FAIL", worst);
    if (!ok) ++failures;
  };

  {  // round trips and closed-form spectra
    double worst = 0.0;
    for (int q = 2; q <= 8; ++q) {
      for (double beta : {0.0, 0.18, 0.5, 1.2, 2.0}) {
        for (const KernelTable& kernel : {potts_kernel(beta, q), clock_kernel(beta, q)}) {
          const KernelTable back = idft(dft(kernel));
          for (int x = 0; x < q; ++x)
            worst = std::max(worst, std::abs(back.values[x] - kernel.values[x]));
        }
        const SpectrumTable numeric = dft(potts_kernel(beta, q));
        const SpectrumTable closed = potts_spectrum_closed_form(beta, q);
        for (int y = 0; y < q; ++y)
          worst = std::max(worst, std::abs(numeric.values[y] - closed.values[y]));
      }
    }
    report("transform round trip + closed-form spectra", worst < 1e-12, worst);
  }
  {  // clock spectrum positivity
    double worst = 1.0;
    for (int q = 2; q <= 12; ++q)
      for (int i = 1; i <= 30; ++i) {
        const SpectrumTable s = dft(clock_kernel(3.0 * i / 30.0, q));
        for (double v : s.values) worst = std::min(worst, v);
      }
    report("clock spectrum positivity", worst > 0.0, worst);
  }
  {  // duality on enumerable instances
    double worst = 0.0;
    for (auto [q, L] : {std::pair{2, 2}, {3, 2}, {2, 3}})
      for (double beta : {0.18, 0.5, 1.2}) {
        ModelSpec spec{q, L, beta, parse_kind(opt.model), std::nullopt};
        worst = std::max(worst, std::abs(duality_gap(spec)));
      }
    report("primal/dual partition-function identity", worst < 1e-9, worst);
  }
  {  // transfer matrix vs enumeration
    double worst = 0.0;
    for (auto [q, L] : {std::pair{2, 2}, {2, 3}, {3, 2}})
      for (double beta : {0.3, 0.7}) {
        ModelSpec spec{q, L, beta, parse_kind(opt.model), std::nullopt};
        const double bf = brute_force_log_z(spec, Representation::primal);
        worst = std::max(worst, std::abs(transfer_matrix_log_z(spec) - bf) / std::abs(bf));
      }
    report("transfer matrix vs enumeration", worst < 1e-9, worst);
  }
  return failures == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition-function estimation on primal/dual factor-graph representations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config")->description("key = value file mirroring the flags");

  CliOptions opt;
  app.add_option("--model", opt.model, "potts|clock")->check(CLI::IsMember({"potts", "clock"}));
  app.add_option("--q", opt.q, "alphabet size (>= 2)");
  app.add_option("--L", opt.L, "lattice side length (>= 2)");
  app.add_option("--beta", opt.betas, "inverse temperature (repeatable)");
  app.add_option("--rep", opt.rep, "primal|dual|both");
  app.add_option("--estimator", opt.estimator, "ot|uniform|both");
  app.add_option("--samples", opt.samples, "samples M per trial");
  app.add_option("--trials", opt.trials, "independent trials");
  app.add_option("--burn-in", opt.burn_in, "Gibbs burn-in sweeps");
  app.add_option("--seed", opt.seed, "base seed; trial t uses seed + t");
  app.add_option("--checkpoints", opt.checkpoints, "explicit checkpoint Ms (default geometric)");
  app.add_option("--jobs", opt.jobs, "concurrent trials (0 = hardware)");
  app.add_option("--out", opt.out, "output directory for CSV files");

  auto* estimate = app.add_subcommand("estimate", "run one experiment configuration");
  auto* sweep = app.add_subcommand("sweep", "run a beta sweep and tabulate std-devs");
  auto* exact = app.add_subcommand("exact", "exact oracle values (enumeration, transfer matrix)");
  auto* bounds = app.add_subcommand("bounds", "asymptotic-variance bound tables");
  auto* verify = app.add_subcommand("verify", "duality and transform self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (exact->parsed()) return cmd_exact(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const InvalidAlphabet& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const LatticeTooSmall& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const DegenerateSpectrum& e) {
    std::fprintf(stderr, "degenerate model: %s\n", e.what());
    return kExitDegenerate;
  } catch (const ZeroBeta& e) {
    std::fprintf(stderr, "degenerate model: %s\n", e.what());
    return kExitDegenerate;
  } catch (const TooLargeForExact& e) {
    std::fprintf(stderr, "exact oracle: %s\n", e.what());
    return kExitTooLarge;
  } catch (const TooLargeForTransfer& e) {
    std::fprintf(stderr, "exact oracle: %s\n", e.what());
    return kExitTooLarge;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
