#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nfgmc/nfg_model.hpp"

namespace nfgmc {

using Rng = std::mt19937_64;

struct SamplerConfig {
  std::uint64_t seed = 0;
  int burn_in_sweeps = 0;
};

enum class SampleMethod { gibbs, uniform };

/// Single-site Gibbs chain on spin configurations. One sweep resamples
/// sites 0..N-1 in raster order from their exact conditionals. log f is
/// maintained incrementally and refreshed from scratch every 1000 sweeps.
class PrimalChain {
 public:
  PrimalChain(const PrimalEvaluator& eval, Rng& rng);
  PrimalChain(const PrimalEvaluator& eval, SpinConfig initial);

  void sweep(Rng& rng);
  double log_f() const { return log_f_; }
  const SpinConfig& spins() const { return spins_; }

  /// Exact conditional p(x_site = a | rest) as a probability vector.
  std::vector<double> site_conditional(int site) const;

 private:
  void site_log_weights(int site, std::vector<double>& lw) const;
  void refresh();

  const PrimalEvaluator* eval_;
  SpinConfig spins_;
  double log_f_ = 0.0;
  long sweeps_since_refresh_ = 0;
  std::vector<double> scratch_;
};

/// Gibbs chain on the dual support via the face/winding parametrization.
/// One sweep resamples the N face variables then the 2 winding variables;
/// the induced bond configuration stays divergence-free by construction.
class DualChain {
 public:
  DualChain(const DualEvaluator& eval, Rng& rng);
  DualChain(const DualEvaluator& eval, DualConfig initial);

  void sweep(Rng& rng);
  double log_f() const { return log_f_; }
  const DualConfig& config() const { return phi_; }
  const BondConfig& bonds() const { return bonds_; }

  std::vector<double> face_conditional(int face) const;
  std::vector<double> winding_conditional(Axis axis) const;

 private:
  void refresh();

  const DualEvaluator* eval_;
  DualConfig phi_;
  BondConfig bonds_;
  double log_f_ = 0.0;
  long sweeps_since_refresh_ = 0;
  std::vector<double> scratch_;
};

SpinConfig uniform_primal(const ModelSpec& spec, Rng& rng);
DualConfig uniform_dual(const ModelSpec& spec, Rng& rng);

/// Emits exactly M log-f values: one per sweep after burn-in (gibbs) or one
/// per independent draw (uniform). Identical (spec, rep, method, M, config)
/// produce identical streams.
std::vector<double> run_chain(const ModelSpec& spec, Representation rep, SampleMethod method,
                              std::int64_t n_samples, const SamplerConfig& config);

}  // namespace nfgmc
