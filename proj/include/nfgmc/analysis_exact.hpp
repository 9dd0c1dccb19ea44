#pragma once

#include <cstdint>
#include <functional>

#include "nfgmc/nfg_model.hpp"

namespace nfgmc {

/// Largest configuration count accepted by exhaustive enumeration.
inline constexpr std::int64_t kMaxExactConfigs = 2'000'000;
/// Largest row-state count accepted by the transfer matrix.
inline constexpr std::int64_t kMaxTransferDim = 4096;

/// Exhaustive log-domain sums over the chosen representation's support.
/// The dual side is enumerated through the face/winding parametrization
/// with one face pinned to 0, which walks the support exactly once.
struct ExactSums {
  double log_z = 0.0;          // log sum f
  double log_sum_inv_f = 0.0;  // log sum 1/f
  double log_sum_f2 = 0.0;     // log sum f^2
  std::int64_t n_configs = 0;
};

ExactSums exact_sums(const ModelSpec& spec, Representation rep);
/// Plain single-threaded reference; identical output to exact_sums.
ExactSums exact_sums_serial(const ModelSpec& spec, Representation rep);

double brute_force_log_z(const ModelSpec& spec, Representation rep);

/// log tr(T^L) with the row transfer operator T (horizontal bond weights
/// split as sqrt factors on both sides so T is symmetric), rescaled after
/// every multiplication. Requires q^L <= kMaxTransferDim.
double transfer_matrix_log_z(const ModelSpec& spec);

/// lim_M M Var[log Z_OT(M)] = (Z/|X|^2) sum 1/f - 1, exactly enumerated.
double exact_asym_var_ot(const ModelSpec& spec, Representation rep);
/// lim_M M Var[log Z_U(M)] = (|X|/Z^2) sum f^2 - 1, exactly enumerated.
double exact_asym_var_uniform(const ModelSpec& spec, Representation rep);

/// Visit every support configuration's log f (serial; order fixed).
void for_each_log_f(const ModelSpec& spec, Representation rep,
                    const std::function<void(double)>& visit);

/// Lower/upper bounds on the asymptotic variances plus the crossover
/// temperature, all stored as log(1 + bound) so they stay representable
/// when the raw bound overflows (e.g. e^{8 N beta}).
struct BoundsReport {
  double beta = 0.0;
  int n_sites = 0;
  int q = 0;
  Representation rep = Representation::primal;

  double log1p_l_ot = 0.0;
  double log1p_r_ot = 0.0;
  double log1p_l_u = 0.0;
  double log1p_r_u = 0.0;
  double log1p_uniform_upper = 0.0;  // log |X|, i.e. log(1 + (|X| - 1))

  double a0 = 0.0;  // 1 - e^{-2 beta} (dual only)
  double aq = 0.0;  // 1 + (q - 1) e^{-2 beta} (dual only)
  double r = 0.0;   // aq / a0 (dual only)

  double crossover = 0.0;  // (3/2) log q (primal), (1/2) log(1 + q/(q^2-1)) (dual)

  double l_ot() const;
  double r_ot() const;
  double l_u() const;
  double r_u() const;
};

/// Primal bounds: L_OT = e^{2Nb}/q^{2N} - 1, R_OT = e^{4Nb} - 1,
/// L_U = q^N/(q + (q^N - q)e^{-8b})^2 - 1, R_U = e^{8Nb} - 1.
BoundsReport prop1_bounds(double beta, int n_sites, int q);

/// Dual bounds with r = A_q/A_0, A_k = 1 + (k-1)e^{-2b} and |X'| = q^{N+1}:
/// L'_OT = r^{2N}/|X'|^2 - 1, R'_OT = r^{2N} - 1,
/// L'_U = |X'|/(q + (|X'| - q)A_0)^2 - 1, R'_U = r^{4N} - 1.
/// Requires beta > 0 and even N.
BoundsReport prop2_bounds(double beta, int n_sites, int q);

}  // namespace nfgmc
