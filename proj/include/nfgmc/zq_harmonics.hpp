#pragma once

#include <complex>
#include <vector>

namespace nfgmc {

// Reduce into [0, q). Works for negative inputs.
inline int mod_q(long long v, int q) {
  long long m = v % q;
  return static_cast<int>(m < 0 ? m + q : m);
}

/// Bond kernel kappa as a length-q real table over Z_q.
struct KernelTable {
  int q = 0;
  std::vector<double> values;  // values[x] = kappa(x)
};

/// Fourier transform kappa_hat, also a length-q real table. Real-valuedness
/// is guaranteed for even kernels kappa(x) = kappa(q-x) and enforced at
/// construction (imaginary residue tolerance 1e-10).
struct SpectrumTable {
  int q = 0;
  std::vector<double> values;  // values[y] = kappa_hat(y)
};

/// chi_y(x) = exp(2*pi*i*x*y/q).
std::complex<double> character(int y, int x, int q);

/// Unnormalized forward transform f_hat(y) = sum_x f(x) chi_y(x).
/// Throws NonRealSpectrum if any entry has imaginary residue above 1e-10.
SpectrumTable dft(const KernelTable& kernel);

/// Inverse transform with 1/q normalization; idft(dft(k)) == k within 1e-12.
KernelTable idft(const SpectrumTable& spectrum);

/// kappa(0) = e^beta, kappa(x != 0) = e^{-beta}.
KernelTable potts_kernel(double beta, int q);

/// kappa_hat(0) = e^beta + (q-1)e^{-beta}, kappa_hat(y != 0) = e^beta - e^{-beta}.
SpectrumTable potts_spectrum_closed_form(double beta, int q);

/// kappa(x) = exp(beta * cos(2*pi*x/q)).
KernelTable clock_kernel(double beta, int q);

/// q=4 clock spectrum: [e^b + e^-b + 2, e^b - e^-b, e^b + e^-b - 2, e^b - e^-b].
SpectrumTable clock_spectrum_closed_form_q4(double beta);

/// Truncated character series for the clock spectrum at frequency k:
///   sum_{n<=n_max} beta^n/n! * g_hat_n(k),
///   g_hat_n(k) = (q/2^n) sum_l binom(n,l) [n+k-2l == 0 (mod q)].
/// Tail is bounded by q*(e^beta - sum_{n<=n_max} beta^n/n!).
double clock_spectrum_series(double beta, int q, int k, int n_max);

/// n_max making the series tail < 1e-12 for beta <= 3.
int default_series_terms(double beta);

/// True iff every spectrum entry is strictly positive.
bool is_positive_spectrum(const SpectrumTable& spectrum);

}  // namespace nfgmc
