#include "nfgmc/analysis_exact.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nfgmc/errors.hpp"
#include "nfgmc/logsum.hpp"

namespace nfgmc {

namespace {

double lse2(double a, double b) {
  if (std::isinf(a) && a < 0.0) return b;
  if (std::isinf(b) && b < 0.0) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

std::int64_t checked_power(int q, int exponent, std::int64_t limit, const char* what) {
  std::int64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    total *= q;
    if (total > limit)
      throw TooLargeForExact(std::string(what) + ": q^" + std::to_string(exponent) +
                             " exceeds the enumeration limit " + std::to_string(limit));
  }
  return total;
}

// Walks support configurations by index. Primal: base-q digits are the N
// spins. Dual: digits are N-1 free face values (last face pinned to 0) and
// the two windings; the pinned face removes the global-shift redundancy so
// every support point is visited exactly once.
class SupportWalker {
 public:
  SupportWalker(const ModelSpec& spec, Representation rep) : rep_(rep) {
    if (rep == Representation::primal) {
      primal_ = std::make_unique<PrimalEvaluator>(spec);
      n_digits_ = spec.n_sites();
      total_ = checked_power(spec.q, n_digits_, kMaxExactConfigs, "primal enumeration");
      spins_.resize(spec.n_sites(), 0);
    } else {
      dual_ = std::make_unique<DualEvaluator>(spec);
      n_digits_ = spec.n_sites() + 1;
      total_ = checked_power(spec.q, n_digits_, kMaxExactConfigs, "dual enumeration");
      phi_.faces.assign(spec.n_sites(), 0);
    }
    q_ = spec.q;
  }

  std::int64_t total() const { return total_; }

  double log_f_at(std::int64_t index) {
    if (rep_ == Representation::primal) {
      std::int64_t v = index;
      for (int i = 0; i < n_digits_; ++i) {
        spins_[i] = static_cast<int>(v % q_);
        v /= q_;
      }
      return primal_->log_f(spins_);
    }
    std::int64_t v = index;
    const int n_faces = n_digits_ - 2;  // last face stays 0
    for (int i = 0; i < n_faces; ++i) {
      phi_.faces[i] = static_cast<int>(v % q_);
      v /= q_;
    }
    phi_.windings[0] = static_cast<int>(v % q_);
    v /= q_;
    phi_.windings[1] = static_cast<int>(v % q_);
    return dual_->log_f_unchecked(dual_->embed(phi_));
  }

 private:
  Representation rep_;
  int q_ = 0;
  int n_digits_ = 0;
  std::int64_t total_ = 0;
  std::unique_ptr<PrimalEvaluator> primal_;
  std::unique_ptr<DualEvaluator> dual_;
  SpinConfig spins_;
  DualConfig phi_;
};

struct PartialSums {
  StreamingLogSumExp f, inv_f, f2;
  void add(double log_f) {
    f.add(log_f);
    inv_f.add(-log_f);
    f2.add(2.0 * log_f);
  }
  void merge(const PartialSums& o) {
    f.merge(o.f);
    inv_f.merge(o.inv_f);
    f2.merge(o.f2);
  }
};

ExactSums finish(const PartialSums& p, std::int64_t total) {
  return ExactSums{p.f.value(), p.inv_f.value(), p.f2.value(), total};
}

}  // namespace

namespace {

// Fixed chunking keeps the merge order (and hence the result bits)
// independent of the thread count, so the serial reference walk below is
// bit-identical to the parallel one.
ExactSums chunked_sums(const ModelSpec& spec, Representation rep, bool parallel) {
  SupportWalker probe(spec, rep);
  const std::int64_t total = probe.total();
  const std::int64_t n_chunks = std::min<std::int64_t>(256, total);
  std::vector<PartialSums> partials(n_chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    SupportWalker walker(spec, rep);
    const std::int64_t lo = total * c / n_chunks;
    const std::int64_t hi = total * (c + 1) / n_chunks;
    for (std::int64_t i = lo; i < hi; ++i) partials[c].add(walker.log_f_at(i));
  }
  PartialSums acc;
  for (const PartialSums& p : partials) acc.merge(p);
  return finish(acc, total);
}

}  // namespace

ExactSums exact_sums_serial(const ModelSpec& spec, Representation rep) {
  return chunked_sums(spec, rep, false);
}

ExactSums exact_sums(const ModelSpec& spec, Representation rep) {
  return chunked_sums(spec, rep, true);
}

double brute_force_log_z(const ModelSpec& spec, Representation rep) {
  return exact_sums(spec, rep).log_z;
}

void for_each_log_f(const ModelSpec& spec, Representation rep,
                    const std::function<void(double)>& visit) {
  SupportWalker walker(spec, rep);
  for (std::int64_t i = 0; i < walker.total(); ++i) visit(walker.log_f_at(i));
}

double transfer_matrix_log_z(const ModelSpec& spec) {
  validate(spec);
  const int q = spec.q, L = spec.L;
  std::int64_t dim = 1;
  for (int i = 0; i < L; ++i) {
    dim *= q;
    if (dim > kMaxTransferDim)
      throw TooLargeForTransfer("q^L exceeds the transfer-matrix limit " +
                                std::to_string(kMaxTransferDim));
  }
  const KernelTable kernel = model_kernel(spec);

  std::vector<int> digits(static_cast<std::size_t>(dim) * L);
  for (std::int64_t s = 0; s < dim; ++s) {
    std::int64_t v = s;
    for (int c = 0; c < L; ++c) {
      digits[s * L + c] = static_cast<int>(v % q);
      v /= q;
    }
  }

  // sqrt of the wrapped intra-row weight on both sides keeps T symmetric.
  std::vector<double> half_row(dim);
  for (std::int64_t s = 0; s < dim; ++s) {
    double w = 1.0;
    for (int c = 0; c < L; ++c)
      w *= kernel.values[mod_q(digits[s * L + c] - digits[s * L + (c + 1) % L], q)];
    half_row[s] = std::sqrt(w);
  }

  std::vector<double> t(static_cast<std::size_t>(dim) * dim);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t s = 0; s < dim; ++s) {
    for (std::int64_t u = 0; u < dim; ++u) {
      double w = 1.0;
      for (int c = 0; c < L; ++c) w *= kernel.values[mod_q(digits[s * L + c] - digits[u * L + c], q)];
      t[s * dim + u] = half_row[s] * w * half_row[u];
    }
  }

  std::vector<double> power = t, next(t.size());
  double log_scale = 0.0;
  auto rescale = [&](std::vector<double>& m) {
    double peak = 0.0;
    for (double v : m) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
      for (double& v : m) v /= peak;
      log_scale += std::log(peak);
    }
  };
  rescale(power);
  for (int step = 1; step < L; ++step) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < dim; ++i) {
      for (std::int64_t j = 0; j < dim; ++j) {
        double acc = 0.0;
        for (std::int64_t k = 0; k < dim; ++k) acc += t[i * dim + k] * power[k * dim + j];
        next[i * dim + j] = acc;
      }
    }
    power.swap(next);
    rescale(power);
  }
  double trace = 0.0;
  for (std::int64_t i = 0; i < dim; ++i) trace += power[i * dim + i];
  return std::log(trace) + log_scale;
}

double exact_asym_var_ot(const ModelSpec& spec, Representation rep) {
  const ExactSums sums = exact_sums(spec, rep);
  return std::expm1(sums.log_z + sums.log_sum_inv_f - 2.0 * support_log_size(spec, rep));
}

double exact_asym_var_uniform(const ModelSpec& spec, Representation rep) {
  const ExactSums sums = exact_sums(spec, rep);
  return std::expm1(support_log_size(spec, rep) + sums.log_sum_f2 - 2.0 * sums.log_z);
}

double BoundsReport::l_ot() const { return std::expm1(log1p_l_ot); }
double BoundsReport::r_ot() const { return std::expm1(log1p_r_ot); }
double BoundsReport::l_u() const { return std::expm1(log1p_l_u); }
double BoundsReport::r_u() const { return std::expm1(log1p_r_u); }

BoundsReport prop1_bounds(double beta, int n_sites, int q) {
  if (q < 2) throw InvalidAlphabet("q must be >= 2");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be finite and >= 0");
  const double log_q = std::log(static_cast<double>(q));
  const double n = static_cast<double>(n_sites);
  BoundsReport rpt;
  rpt.beta = beta;
  rpt.n_sites = n_sites;
  rpt.q = q;
  rpt.rep = Representation::primal;
  rpt.log1p_l_ot = 2.0 * n * beta - 2.0 * n * log_q;
  rpt.log1p_r_ot = 4.0 * n * beta;
  // q + (q^N - q) e^{-8b} = q(1 - e^{-8b}) + q^N e^{-8b}, kept in logs.
  const double log_denom =
      lse2(log_q + std::log1p(-std::exp(-8.0 * beta)), n * log_q - 8.0 * beta);
  rpt.log1p_l_u = n * log_q - 2.0 * log_denom;
  rpt.log1p_r_u = 8.0 * n * beta;
  rpt.log1p_uniform_upper = n * log_q;
  rpt.crossover = 1.5 * log_q;
  return rpt;
}

BoundsReport prop2_bounds(double beta, int n_sites, int q) {
  if (q < 2) throw InvalidAlphabet("q must be >= 2");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ZeroBeta("dual bounds require beta > 0");
  if (n_sites % 2 != 0) throw OddN("dual bounds require an even site count");
  const double log_q = std::log(static_cast<double>(q));
  const double n = static_cast<double>(n_sites);
  const double e2 = std::exp(-2.0 * beta);
  BoundsReport rpt;
  rpt.beta = beta;
  rpt.n_sites = n_sites;
  rpt.q = q;
  rpt.rep = Representation::dual;
  rpt.a0 = -std::expm1(-2.0 * beta);  // 1 - e^{-2b}
  rpt.aq = 1.0 + (q - 1) * e2;
  rpt.r = rpt.aq / rpt.a0;
  const double log_r = std::log(rpt.aq) - std::log(rpt.a0);
  const double log_xd = (n + 1.0) * log_q;
  rpt.log1p_l_ot = 2.0 * n * log_r - 2.0 * log_xd;
  rpt.log1p_r_ot = 2.0 * n * log_r;
  // q + (q^{N+1} - q) A_0 = q e^{-2b} + q^{N+1} A_0, kept in logs.
  const double log_denom = lse2(log_q - 2.0 * beta, log_xd + std::log(rpt.a0));
  rpt.log1p_l_u = log_xd - 2.0 * log_denom;
  rpt.log1p_r_u = 4.0 * n * log_r;
  rpt.log1p_uniform_upper = log_xd;
  rpt.crossover = 0.5 * std::log1p(static_cast<double>(q) / (static_cast<double>(q) * q - 1.0));
  return rpt;
}

}  // namespace nfgmc
