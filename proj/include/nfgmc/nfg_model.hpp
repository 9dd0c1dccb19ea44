#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nfgmc/torus_lattice.hpp"
#include "nfgmc/zq_harmonics.hpp"

namespace nfgmc {

enum class KernelKind { potts, clock, custom };
enum class Representation { primal, dual };

struct ModelSpec {
  int q = 2;
  int L = 2;
  double beta = 0.0;
  KernelKind kind = KernelKind::potts;
  std::optional<KernelTable> custom_kernel;  // used when kind == custom

  int n_sites() const { return L * L; }
  int n_bonds() const { return 2 * L * L; }
};

/// Throws InvalidAlphabet / LatticeTooSmall / AlphabetMismatch on a bad spec.
void validate(const ModelSpec& spec);

/// The bond kernel selected by a model description.
KernelTable model_kernel(const ModelSpec& spec);

using SpinConfig = std::vector<int>;  // N entries in [0, q)

struct BondConfig {
  std::vector<int> values;  // 2N entries in [0, q)
};

/// Free parametrization of the dual support: one Z_q variable per face plus
/// the two winding variables. The induced bond configuration is always
/// divergence-free; the map onto the support is exactly q-to-1 (a global
/// shift of all face values is invisible).
struct DualConfig {
  std::vector<int> faces;         // N entries in [0, q)
  std::array<int, 2> windings{};  // horizontal, vertical
};

/// Internal energy: Potts bonds contribute -1 per agreeing / +1 per
/// disagreeing pair, clock bonds -cos(2*pi*(x-x')/q). Sums run over all 2N
/// oriented bonds.
double energy(const ModelSpec& spec, const SpinConfig& x);

/// Evaluates log f on primal spin configurations; precomputes log kappa.
class PrimalEvaluator {
 public:
  explicit PrimalEvaluator(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }
  const TorusLattice& lattice() const { return lattice_; }
  double log_kernel(int delta) const { return log_kernel_[delta]; }

  double log_f(const SpinConfig& x) const;

 private:
  ModelSpec spec_;
  TorusLattice lattice_;
  std::vector<double> log_kernel_;
};

/// Evaluates log f on dual bond configurations. The per-bond factor is
/// kappa_hat(y)/q, which makes the dual partition function exactly the
/// model partition function divided by q^N. Construction fails with
/// DegenerateSpectrum unless the spectrum is strictly positive.
class DualEvaluator {
 public:
  explicit DualEvaluator(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }
  const TorusLattice& lattice() const { return lattice_; }
  const SpectrumTable& spectrum() const { return spectrum_; }
  double log_factor(int y) const { return log_factor_[y]; }

  /// log f of a parity-valid bond configuration (no parity check here).
  double log_f_unchecked(const BondConfig& y) const;
  /// Same, but throws OutOfSupport if the configuration fails parity.
  double log_f(const BondConfig& y) const;

  BondConfig embed(const DualConfig& phi) const;

 private:
  ModelSpec spec_;
  TorusLattice lattice_;
  SpectrumTable spectrum_;
  std::vector<double> log_factor_;  // log(kappa_hat(y)/q)
};

double log_f_primal(const ModelSpec& spec, const SpinConfig& x);
double log_f_dual(const ModelSpec& spec, const BondConfig& y);

/// Signed sum of incident bond values vanishes mod q at every site.
bool check_parity(const TorusLattice& lattice, int q, const BondConfig& y);

BondConfig dual_embed(const TorusLattice& lattice, int q, const DualConfig& phi);

/// log |X_G|: N log q (primal) or (N+1) log q (dual; requires a strictly
/// positive spectrum).
double support_log_size(const ModelSpec& spec, Representation rep);

/// log Z_G - N log q - log Z_G' with both sides enumerated exactly; zero up
/// to roundoff on every enumerable instance.
double duality_gap(const ModelSpec& spec);

}  // namespace nfgmc
