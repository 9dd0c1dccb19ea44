#include "nfgmc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nfgmc/errors.hpp"

namespace nfgmc {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_double_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void validate_config(const ExperimentConfig& config) {
  validate(config.model);
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.samples < 1) throw ConfigError("samples must be >= 1");
  if (config.burn_in < 0) throw ConfigError("burn-in must be >= 0");
  std::int64_t prev = 0;
  for (std::int64_t m : config.checkpoints) {
    if (m <= prev || m > config.samples)
      throw ConfigError("checkpoints must be strictly increasing and within [1, samples]");
    prev = m;
  }
}

}  // namespace

std::vector<std::int64_t> geometric_schedule(std::int64_t m) {
  if (m < 1) throw ConfigError("schedule endpoint must be >= 1");
  std::vector<std::int64_t> out;
  for (double e = 1.0;; e += 0.5) {
    const auto v = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    if (v >= m) break;
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  out.push_back(m);
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const double log_support = support_log_size(config.model, config.rep);  // rejects dual at beta=0
  const SampleMethod method =
      config.estimator == EstimatorKind::ot ? SampleMethod::gibbs : SampleMethod::uniform;
  const double n_sites = config.model.n_sites();

  ExperimentResult result;
  result.config = config;
  result.schedule =
      config.checkpoints.empty() ? geometric_schedule(config.samples) : config.checkpoints;
  result.trials.resize(config.trials);

  std::exception_ptr failure;
#ifdef _OPENMP
  const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int t = 0; t < config.trials; ++t) {
    try {
      TrialResult& trial = result.trials[t];
      trial.trial_index = t;
      trial.seed = config.base_seed + static_cast<std::uint64_t>(t);
      const std::vector<double> values =
          run_chain(config.model, config.rep, method, config.samples,
                    SamplerConfig{trial.seed, config.burn_in});
      EstimateSeries series =
          streaming_curve(log_support, config.estimator, config.rep, values, result.schedule);
      for (auto& [m, v] : series.checkpoints)
        v = to_model_log_z(v, config.rep, config.model) / n_sites;
      trial.per_site = std::move(series);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  result.summary.reserve(result.schedule.size());
  for (std::size_t c = 0; c < result.schedule.size(); ++c) {
    double mean = 0.0;
    for (const TrialResult& trial : result.trials) mean += trial.per_site.checkpoints[c].second;
    mean /= config.trials;
    double var = 0.0;
    for (const TrialResult& trial : result.trials) {
      const double d = trial.per_site.checkpoints[c].second - mean;
      var += d * d;
    }
    var /= config.trials;  // population standard deviation over trials
    result.summary.push_back(SummaryRow{result.schedule[c], mean, std::sqrt(var)});
  }
  return result;
}

std::vector<SweepRow> beta_sweep(const ExperimentConfig& base, const std::vector<double>& betas,
                                 const std::vector<Representation>& reps,
                                 const std::vector<EstimatorKind>& estimators,
                                 const std::filesystem::path& out_dir) {
  if (betas.empty()) throw ConfigError("beta sweep needs at least one beta");
  std::vector<SweepRow> rows;
  for (double beta : betas) {
    for (Representation rep : reps) {
      for (EstimatorKind est : estimators) {
        ExperimentConfig config = base;
        config.model.beta = beta;
        config.rep = rep;
        config.estimator = est;
        const ExperimentResult result = run_experiment(config);
        if (!out_dir.empty()) emit_csv(result, out_dir);
        const SummaryRow& last = result.summary.back();
        rows.push_back(SweepRow{kernel_kind_name(config.model.kind), config.model.q,
                                config.model.L, beta, rep, est, last.m, last.mean, last.stddev,
                                config.trials});
      }
    }
  }
  return rows;
}

std::string kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::potts:
      return "potts";
    case KernelKind::clock:
      return "clock";
    case KernelKind::custom:
      return "custom";
  }
  return "?";
}

std::string representation_name(Representation rep) {
  return rep == Representation::primal ? "primal" : "dual";
}

std::string estimator_name(EstimatorKind kind) {
  return kind == EstimatorKind::ot ? "ot" : "uniform";
}

namespace {

std::string config_tag(const ExperimentConfig& c) {
  return kernel_kind_name(c.model.kind) + "_q" + std::to_string(c.model.q) + "_L" +
         std::to_string(c.model.L) + "_b" + fmt_double_short(c.model.beta) + "_" +
         representation_name(c.rep) + "_" + estimator_name(c.estimator);
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::pair<std::filesystem::path, std::filesystem::path> emit_csv(
    const ExperimentResult& result, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const ExperimentConfig& c = result.config;
  const std::string tag = config_tag(c);
  const auto raw_path = out_dir / ("raw_" + tag + ".csv");
  const auto summary_path = out_dir / ("summary_" + tag + ".csv");

  const std::string prefix = kernel_kind_name(c.model.kind) + "," + std::to_string(c.model.q) +
                             "," + std::to_string(c.model.L) + "," + fmt_double(c.model.beta) +
                             "," + representation_name(c.rep) + "," + estimator_name(c.estimator);

  std::ofstream raw = open_csv(raw_path);
  raw << "model,q,L,beta,representation,estimator,trial,seed,M,log_z_per_site\n";
  for (const TrialResult& trial : result.trials)
    for (const auto& [m, v] : trial.per_site.checkpoints)
      raw << prefix << ',' << trial.trial_index << ',' << trial.seed << ',' << m << ','
          << fmt_double(v) << '\n';

  std::ofstream summary = open_csv(summary_path);
  summary << "model,q,L,beta,representation,estimator,M,mean_log_z_per_site,std_log_z_per_site,"
             "trials\n";
  for (const SummaryRow& row : result.summary)
    summary << prefix << ',' << row.m << ',' << fmt_double(row.mean) << ','
            << fmt_double(row.stddev) << ',' << result.config.trials << '\n';
  return {raw_path, summary_path};
}

void emit_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream out = open_csv(out_dir / "sweep_summary.csv");
  out << "model,q,L,beta,representation,estimator,M,mean_log_z_per_site,std_log_z_per_site,"
         "trials\n";
  for (const SweepRow& row : rows)
    out << row.model << ',' << row.q << ',' << row.L << ',' << fmt_double(row.beta) << ','
        << representation_name(row.rep) << ',' << estimator_name(row.estimator) << ',' << row.m
        << ',' << fmt_double(row.mean) << ',' << fmt_double(row.stddev) << ',' << row.trials
        << '\n';

  // Companion gnuplot script: std-dev vs beta, one curve per representation.
  std::ofstream plot = open_csv(out_dir / "plot_sweep.gp");
  plot << "set datafile separator ','\n"
          "set logscale y\n"
          "set xlabel 'beta'\n"
          "set ylabel 'std of per-site log Z estimate'\n"
          "plot 'sweep_summary.csv' using 4:(strcol(5) eq 'primal' ? $9 : 1/0) with linespoints "
          "title 'primal', \\\n"
          "     '' using 4:(strcol(5) eq 'dual' ? $9 : 1/0) with linespoints title 'dual'\n";
}

}  // namespace nfgmc
