#include "nfgmc/nfg_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nfgmc/analysis_exact.hpp"
#include "nfgmc/errors.hpp"

namespace nfgmc {

void validate(const ModelSpec& spec) {
  if (spec.q < 2) throw InvalidAlphabet("q must be >= 2, got " + std::to_string(spec.q));
  if (spec.L < 2) throw LatticeTooSmall("L must be >= 2, got " + std::to_string(spec.L));
  if (!std::isfinite(spec.beta) || spec.beta < 0.0) throw ConfigError("beta must be finite and >= 0");
  if (spec.kind == KernelKind::custom) {
    if (!spec.custom_kernel) throw ConfigError("custom kernel kind without a kernel table");
    if (spec.custom_kernel->q != spec.q ||
        spec.custom_kernel->values.size() != static_cast<std::size_t>(spec.q))
      throw AlphabetMismatch("custom kernel table does not match q");
  }
}

KernelTable model_kernel(const ModelSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case KernelKind::potts:
      return potts_kernel(spec.beta, spec.q);
    case KernelKind::clock:
      return clock_kernel(spec.beta, spec.q);
    case KernelKind::custom:
      return *spec.custom_kernel;
  }
  throw ConfigError("unknown kernel kind");
}

namespace {

void require_spins(const ModelSpec& spec, const SpinConfig& x) {
  if (x.size() != static_cast<std::size_t>(spec.n_sites()))
    throw AlphabetMismatch("spin configuration has " + std::to_string(x.size()) +
                           " entries, expected " + std::to_string(spec.n_sites()));
  for (int v : x)
    if (v < 0 || v >= spec.q) throw AlphabetMismatch("spin value outside [0, q)");
}

void require_bonds(const ModelSpec& spec, const BondConfig& y) {
  if (y.values.size() != static_cast<std::size_t>(spec.n_bonds()))
    throw AlphabetMismatch("bond configuration has " + std::to_string(y.values.size()) +
                           " entries, expected " + std::to_string(spec.n_bonds()));
  for (int v : y.values)
    if (v < 0 || v >= spec.q) throw AlphabetMismatch("bond value outside [0, q)");
}

}  // namespace

double energy(const ModelSpec& spec, const SpinConfig& x) {
  validate(spec);
  require_spins(spec, x);
  const TorusLattice lat(spec.L);
  double e = 0.0;
  for (int b = 0; b < lat.n_bonds(); ++b) {
    const Bond& bd = lat.bond(b);
    const int d = mod_q(x[bd.base] - x[bd.head], spec.q);
    switch (spec.kind) {
      case KernelKind::potts:
        e -= d == 0 ? 1.0 : -1.0;
        break;
      case KernelKind::clock:
        e -= std::cos(2.0 * std::numbers::pi * d / spec.q);
        break;
      case KernelKind::custom:
        throw ConfigError("energy is defined for potts and clock kernels only");
    }
  }
  return e;
}

PrimalEvaluator::PrimalEvaluator(const ModelSpec& spec)
    : spec_(spec), lattice_(spec.L), log_kernel_(spec.q) {
  const KernelTable kernel = model_kernel(spec);
  for (int d = 0; d < spec.q; ++d) {
    if (!(kernel.values[d] > 0.0) || !std::isfinite(kernel.values[d]))
      throw ConfigError("primal kernel entries must be strictly positive and finite");
    log_kernel_[d] = std::log(kernel.values[d]);
  }
}

double PrimalEvaluator::log_f(const SpinConfig& x) const {
  require_spins(spec_, x);
  double s = 0.0;
  for (int b = 0; b < lattice_.n_bonds(); ++b) {
    const Bond& bd = lattice_.bond(b);
    s += log_kernel_[mod_q(x[bd.base] - x[bd.head], spec_.q)];
  }
  return s;
}

DualEvaluator::DualEvaluator(const ModelSpec& spec)
    : spec_(spec), lattice_(spec.L), spectrum_(dft(model_kernel(spec))), log_factor_(spec.q) {
  if (!is_positive_spectrum(spectrum_))
    throw DegenerateSpectrum("spectrum has non-positive entries (e.g. Potts at beta = 0); "
                             "the dual representation is unavailable");
  // kappa_hat/q per bond: over the 2N bonds this contributes q^{-2N}, which
  // turns the raw parity-support sum q^N * Z into Z / q^N.
  const double log_q = std::log(static_cast<double>(spec.q));
  for (int y = 0; y < spec.q; ++y) log_factor_[y] = std::log(spectrum_.values[y]) - log_q;
}

double DualEvaluator::log_f_unchecked(const BondConfig& y) const {
  require_bonds(spec_, y);
  double s = 0.0;
  for (int v : y.values) s += log_factor_[v];
  return s;
}

double DualEvaluator::log_f(const BondConfig& y) const {
  require_bonds(spec_, y);
  if (!check_parity(lattice_, spec_.q, y))
    throw OutOfSupport("bond configuration fails the parity checks");
  return log_f_unchecked(y);
}

BondConfig DualEvaluator::embed(const DualConfig& phi) const {
  return dual_embed(lattice_, spec_.q, phi);
}

double log_f_primal(const ModelSpec& spec, const SpinConfig& x) {
  return PrimalEvaluator(spec).log_f(x);
}

double log_f_dual(const ModelSpec& spec, const BondConfig& y) {
  return DualEvaluator(spec).log_f(y);
}

bool check_parity(const TorusLattice& lattice, int q, const BondConfig& y) {
  if (y.values.size() != static_cast<std::size_t>(lattice.n_bonds()))
    throw AlphabetMismatch("bond configuration size does not match the lattice");
  for (int s = 0; s < lattice.n_sites(); ++s) {
    long long acc = 0;
    for (const BondRef& br : lattice.site_bonds(s)) acc += br.sign * y.values[br.bond];
    if (mod_q(acc, q) != 0) return false;
  }
  return true;
}

BondConfig dual_embed(const TorusLattice& lattice, int q, const DualConfig& phi) {
  if (phi.faces.size() != static_cast<std::size_t>(lattice.n_faces()))
    throw AlphabetMismatch("face configuration size does not match the lattice");
  std::vector<long long> acc(lattice.n_bonds(), 0);
  for (int f = 0; f < lattice.n_faces(); ++f)
    for (const BondRef& br : lattice.face_bonds(f)) acc[br.bond] += br.sign * phi.faces[f];
  const Axis axes[2] = {Axis::horizontal, Axis::vertical};
  for (int a = 0; a < 2; ++a)
    for (const BondRef& br : lattice.winding_bonds(axes[a])) acc[br.bond] += br.sign * phi.windings[a];
  BondConfig y;
  y.values.resize(lattice.n_bonds());
  for (int b = 0; b < lattice.n_bonds(); ++b) y.values[b] = mod_q(acc[b], q);
  return y;
}

double support_log_size(const ModelSpec& spec, Representation rep) {
  validate(spec);
  const double log_q = std::log(static_cast<double>(spec.q));
  if (rep == Representation::primal) return spec.n_sites() * log_q;
  if (!is_positive_spectrum(dft(model_kernel(spec))))
    throw DegenerateSpectrum("dual support undefined: spectrum has non-positive entries");
  return (spec.n_sites() + 1) * log_q;
}

double duality_gap(const ModelSpec& spec) {
  const double primal = brute_force_log_z(spec, Representation::primal);
  const double dual = brute_force_log_z(spec, Representation::dual);
  return primal - spec.n_sites() * std::log(static_cast<double>(spec.q)) - dual;
}

}  // namespace nfgmc
