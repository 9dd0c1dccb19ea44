#include "nfgmc/zq_harmonics.hpp"

#include <cmath>
#include <numbers>

#include "nfgmc/errors.hpp"

namespace nfgmc {

namespace {

constexpr double kImagTol = 1e-10;

void require_alphabet(int q) {
  if (q < 2) throw InvalidAlphabet("alphabet size must be >= 2, got " + std::to_string(q));
}

void require_table(int q, std::size_t n, const char* what) {
  require_alphabet(q);
  if (n != static_cast<std::size_t>(q))
    throw InvalidAlphabet(std::string(what) + " length does not match q");
}

}  // namespace

std::complex<double> character(int y, int x, int q) {
  require_alphabet(q);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(x) * static_cast<double>(y) /
                       static_cast<double>(q);
  return {std::cos(angle), std::sin(angle)};
}

SpectrumTable dft(const KernelTable& kernel) {
  require_table(kernel.q, kernel.values.size(), "kernel");
  const int q = kernel.q;
  SpectrumTable out{q, std::vector<double>(q)};
  for (int y = 0; y < q; ++y) {
    std::complex<double> acc{0.0, 0.0};
    for (int x = 0; x < q; ++x) acc += kernel.values[x] * character(y, x, q);
    if (std::abs(acc.imag()) > kImagTol)
      throw NonRealSpectrum("non-symmetric kernel: imaginary residue " +
                            std::to_string(acc.imag()) + " at frequency " + std::to_string(y));
    out.values[y] = acc.real();
  }
  return out;
}

KernelTable idft(const SpectrumTable& spectrum) {
  require_table(spectrum.q, spectrum.values.size(), "spectrum");
  const int q = spectrum.q;
  KernelTable out{q, std::vector<double>(q)};
  for (int x = 0; x < q; ++x) {
    std::complex<double> acc{0.0, 0.0};
    for (int y = 0; y < q; ++y) acc += spectrum.values[y] * std::conj(character(y, x, q));
    if (std::abs(acc.imag()) > kImagTol)
      throw NonRealSpectrum("non-symmetric spectrum: imaginary residue " +
                            std::to_string(acc.imag()) + " at " + std::to_string(x));
    out.values[x] = acc.real() / static_cast<double>(q);
  }
  return out;
}

KernelTable potts_kernel(double beta, int q) {
  require_alphabet(q);
  KernelTable out{q, std::vector<double>(q, std::exp(-beta))};
  out.values[0] = std::exp(beta);
  return out;
}

SpectrumTable potts_spectrum_closed_form(double beta, int q) {
  require_alphabet(q);
  const double ep = std::exp(beta), em = std::exp(-beta);
  SpectrumTable out{q, std::vector<double>(q, ep - em)};
  out.values[0] = ep + (q - 1) * em;
  return out;
}

KernelTable clock_kernel(double beta, int q) {
  require_alphabet(q);
  KernelTable out{q, std::vector<double>(q)};
  for (int x = 0; x < q; ++x)
    out.values[x] = std::exp(beta * std::cos(2.0 * std::numbers::pi * x / q));
  return out;
}

SpectrumTable clock_spectrum_closed_form_q4(double beta) {
  const double ep = std::exp(beta), em = std::exp(-beta);
  return SpectrumTable{4, {ep + em + 2.0, ep - em, ep + em - 2.0, ep - em}};
}

double clock_spectrum_series(double beta, int q, int k, int n_max) {
  // Term n carries beta^n/n! * (q/2^n) * sum_l binom(n,l) [n+k-2l = 0 mod q].
  double total = 0.0;
  double beta_pow_over_fact = 1.0;  // beta^n / n!
  for (int n = 0; n <= n_max; ++n) {
    double hits = 0.0;
    double binom = 1.0;  // binom(n, l)
    for (int l = 0; l <= n; ++l) {
      if (mod_q(static_cast<long long>(n) + k - 2LL * l, q) == 0) hits += binom;
      binom = binom * (n - l) / (l + 1.0);
    }
    total += beta_pow_over_fact * hits * q * std::pow(0.5, n);
    beta_pow_over_fact *= beta / (n + 1.0);
  }
  return total;
}

int default_series_terms(double beta) {
  return static_cast<int>(std::ceil(std::numbers::e * beta)) + 40;
}

bool is_positive_spectrum(const SpectrumTable& spectrum) {
  for (double v : spectrum.values)
    if (!(v > 0.0)) return false;
  return !spectrum.values.empty();
}

}  // namespace nfgmc
