#include "nfgmc/samplers.hpp"

#include <algorithm>
#include <cmath>

#include "nfgmc/errors.hpp"

namespace nfgmc {

namespace {

constexpr long kRefreshInterval = 1000;  // sweeps between from-scratch log-f refreshes

int sample_from_log_weights(const std::vector<double>& lw, Rng& rng) {
  const double m = *std::max_element(lw.begin(), lw.end());
  double total = 0.0;
  for (double v : lw) total += std::exp(v - m);
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * total;
  for (std::size_t a = 0; a + 1 < lw.size(); ++a) {
    u -= std::exp(lw[a] - m);
    if (u < 0.0) return static_cast<int>(a);
  }
  return static_cast<int>(lw.size()) - 1;
}

std::vector<double> normalize_log_weights(const std::vector<double>& lw) {
  const double m = *std::max_element(lw.begin(), lw.end());
  std::vector<double> p(lw.size());
  double total = 0.0;
  for (std::size_t a = 0; a < lw.size(); ++a) total += p[a] = std::exp(lw[a] - m);
  for (double& v : p) v /= total;
  return p;
}

}  // namespace

PrimalChain::PrimalChain(const PrimalEvaluator& eval, Rng& rng)
    : PrimalChain(eval, uniform_primal(eval.spec(), rng)) {}

PrimalChain::PrimalChain(const PrimalEvaluator& eval, SpinConfig initial)
    : eval_(&eval), spins_(std::move(initial)), scratch_(eval.spec().q) {
  log_f_ = eval_->log_f(spins_);
}

void PrimalChain::site_log_weights(int site, std::vector<double>& lw) const {
  const ModelSpec& spec = eval_->spec();
  const TorusLattice& lat = eval_->lattice();
  std::fill(lw.begin(), lw.end(), 0.0);
  for (const BondRef& br : lat.site_bonds(site)) {
    const Bond& bd = lat.bond(br.bond);
    const int other = br.sign > 0 ? spins_[bd.head] : spins_[bd.base];
    for (int a = 0; a < spec.q; ++a)
      lw[a] += eval_->log_kernel(mod_q(br.sign > 0 ? a - other : other - a, spec.q));
  }
}

void PrimalChain::sweep(Rng& rng) {
  for (int s = 0; s < eval_->lattice().n_sites(); ++s) {
    site_log_weights(s, scratch_);
    const int next = sample_from_log_weights(scratch_, rng);
    log_f_ += scratch_[next] - scratch_[spins_[s]];
    spins_[s] = next;
  }
  if (++sweeps_since_refresh_ >= kRefreshInterval) refresh();
}

std::vector<double> PrimalChain::site_conditional(int site) const {
  std::vector<double> lw(eval_->spec().q);
  site_log_weights(site, lw);
  return normalize_log_weights(lw);
}

void PrimalChain::refresh() {
  log_f_ = eval_->log_f(spins_);
  sweeps_since_refresh_ = 0;
}

DualChain::DualChain(const DualEvaluator& eval, Rng& rng)
    : DualChain(eval, uniform_dual(eval.spec(), rng)) {}

DualChain::DualChain(const DualEvaluator& eval, DualConfig initial)
    : eval_(&eval), phi_(std::move(initial)), scratch_(eval.spec().q) {
  bonds_ = eval_->embed(phi_);
  log_f_ = eval_->log_f_unchecked(bonds_);
}

std::vector<double> DualChain::face_conditional(int face) const {
  const ModelSpec& spec = eval_->spec();
  std::vector<double> lw(spec.q, 0.0);
  const int cur = phi_.faces[face];
  for (const BondRef& br : eval_->lattice().face_bonds(face))
    for (int a = 0; a < spec.q; ++a)
      lw[a] += eval_->log_factor(mod_q(bonds_.values[br.bond] + br.sign * (a - cur), spec.q));
  return normalize_log_weights(lw);
}

std::vector<double> DualChain::winding_conditional(Axis axis) const {
  const ModelSpec& spec = eval_->spec();
  std::vector<double> lw(spec.q, 0.0);
  const int cur = phi_.windings[axis == Axis::horizontal ? 0 : 1];
  for (const BondRef& br : eval_->lattice().winding_bonds(axis))
    for (int a = 0; a < spec.q; ++a)
      lw[a] += eval_->log_factor(mod_q(bonds_.values[br.bond] + br.sign * (a - cur), spec.q));
  return normalize_log_weights(lw);
}

void DualChain::sweep(Rng& rng) {
  const ModelSpec& spec = eval_->spec();
  const TorusLattice& lat = eval_->lattice();
  for (int f = 0; f < lat.n_faces(); ++f) {
    const int cur = phi_.faces[f];
    std::fill(scratch_.begin(), scratch_.end(), 0.0);
    for (const BondRef& br : lat.face_bonds(f))
      for (int a = 0; a < spec.q; ++a)
        scratch_[a] += eval_->log_factor(mod_q(bonds_.values[br.bond] + br.sign * (a - cur), spec.q));
    const int next = sample_from_log_weights(scratch_, rng);
    log_f_ += scratch_[next] - scratch_[cur];
    if (next != cur) {
      for (const BondRef& br : lat.face_bonds(f))
        bonds_.values[br.bond] = mod_q(bonds_.values[br.bond] + br.sign * (next - cur), spec.q);
      phi_.faces[f] = next;
    }
  }
  const Axis axes[2] = {Axis::horizontal, Axis::vertical};
  for (int w = 0; w < 2; ++w) {
    const int cur = phi_.windings[w];
    std::fill(scratch_.begin(), scratch_.end(), 0.0);
    for (const BondRef& br : lat.winding_bonds(axes[w]))
      for (int a = 0; a < spec.q; ++a)
        scratch_[a] += eval_->log_factor(mod_q(bonds_.values[br.bond] + br.sign * (a - cur), spec.q));
    const int next = sample_from_log_weights(scratch_, rng);
    log_f_ += scratch_[next] - scratch_[cur];
    if (next != cur) {
      for (const BondRef& br : lat.winding_bonds(axes[w]))
        bonds_.values[br.bond] = mod_q(bonds_.values[br.bond] + br.sign * (next - cur), spec.q);
      phi_.windings[w] = next;
    }
  }
  if (++sweeps_since_refresh_ >= kRefreshInterval) refresh();
}

void DualChain::refresh() {
  log_f_ = eval_->log_f_unchecked(bonds_);
  sweeps_since_refresh_ = 0;
}

SpinConfig uniform_primal(const ModelSpec& spec, Rng& rng) {
  validate(spec);
  std::uniform_int_distribution<int> dist(0, spec.q - 1);
  SpinConfig x(spec.n_sites());
  for (int& v : x) v = dist(rng);
  return x;
}

DualConfig uniform_dual(const ModelSpec& spec, Rng& rng) {
  validate(spec);
  std::uniform_int_distribution<int> dist(0, spec.q - 1);
  DualConfig phi;
  phi.faces.resize(spec.n_sites());
  for (int& v : phi.faces) v = dist(rng);
  phi.windings[0] = dist(rng);
  phi.windings[1] = dist(rng);
  return phi;
}

std::vector<double> run_chain(const ModelSpec& spec, Representation rep, SampleMethod method,
                              std::int64_t n_samples, const SamplerConfig& config) {
  if (n_samples < 1) throw EmptySample("sample count must be >= 1");
  if (config.burn_in_sweeps < 0) throw ConfigError("burn-in must be >= 0");
  Rng rng(config.seed);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_samples));
  if (rep == Representation::primal) {
    PrimalEvaluator eval(spec);
    if (method == SampleMethod::gibbs) {
      PrimalChain chain(eval, rng);
      for (int i = 0; i < config.burn_in_sweeps; ++i) chain.sweep(rng);
      for (std::int64_t i = 0; i < n_samples; ++i) {
        chain.sweep(rng);
        values.push_back(chain.log_f());
      }
    } else {
      for (std::int64_t i = 0; i < n_samples; ++i)
        values.push_back(eval.log_f(uniform_primal(spec, rng)));
    }
  } else {
    DualEvaluator eval(spec);
    if (method == SampleMethod::gibbs) {
      DualChain chain(eval, rng);
      for (int i = 0; i < config.burn_in_sweeps; ++i) chain.sweep(rng);
      for (std::int64_t i = 0; i < n_samples; ++i) {
        chain.sweep(rng);
        values.push_back(chain.log_f());
      }
    } else {
      for (std::int64_t i = 0; i < n_samples; ++i)
        values.push_back(eval.log_f_unchecked(eval.embed(uniform_dual(spec, rng))));
    }
  }
  return values;
}

}  // namespace nfgmc
