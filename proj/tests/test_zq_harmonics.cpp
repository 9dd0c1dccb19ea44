#include <doctest.h>

#include <cmath>
#include <vector>

#include "nfgmc/errors.hpp"
#include "nfgmc/zq_harmonics.hpp"

using namespace nfgmc;

namespace {
const std::vector<double> kBetaGrid = {0.0, 0.18, 0.5, 1.2, 2.0};
}

TEST_CASE("characters take the expected roots of unity") {
  CHECK(character(0, 3, 5).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(character(0, 3, 5).imag() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(character(1, 1, 2).real() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(character(1, 1, 4).real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(character(1, 1, 4).imag() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("transform of simple tables") {
  SUBCASE("constant table") {
    for (int q = 2; q <= 6; ++q) {
      const SpectrumTable s = dft(KernelTable{q, std::vector<double>(q, 1.0)});
      CHECK(s.values[0] == doctest::Approx(q).epsilon(1e-14));
      for (int y = 1; y < q; ++y) CHECK(std::abs(s.values[y]) < 1e-12);
    }
  }
  SUBCASE("point mass at 0") {
    KernelTable delta{5, std::vector<double>(5, 0.0)};
    delta.values[0] = 1.0;
    const SpectrumTable s = dft(delta);
    for (double v : s.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("binary bond kernel at beta=1") {
    const SpectrumTable s = dft(potts_kernel(1.0, 2));
    CHECK(s.values[0] == doctest::Approx(std::exp(1.0) + std::exp(-1.0)).epsilon(1e-14));
    CHECK(s.values[1] == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
  }
}

TEST_CASE("inverse transform") {
  SUBCASE("spike spectrum gives constant kernel") {
    SpectrumTable s{4, {4.0, 0.0, 0.0, 0.0}};
    for (double v : idft(s).values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("flat spectrum gives point mass") {
    const KernelTable k = idft(SpectrumTable{4, {1.0, 1.0, 1.0, 1.0}});
    CHECK(k.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (int x = 1; x < 4; ++x) CHECK(std::abs(k.values[x]) < 1e-13);
  }
  SUBCASE("round trip within 1e-12 for every built kernel") {
    for (int q = 2; q <= 8; ++q) {
      for (double beta : kBetaGrid) {
        for (const KernelTable& kernel : {potts_kernel(beta, q), clock_kernel(beta, q)}) {
          const KernelTable back = idft(dft(kernel));
          for (int x = 0; x < q; ++x)
            CHECK(std::abs(back.values[x] - kernel.values[x]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("non-symmetric kernels are rejected") {
  KernelTable skew{3, {1.0, 2.0, 0.5}};  // kappa(1) != kappa(2)
  CHECK_THROWS_AS(dft(skew), NonRealSpectrum);
}

TEST_CASE("potts kernel values") {
  for (double v : potts_kernel(0.0, 3).values) CHECK(v == doctest::Approx(1.0));
  const KernelTable k2 = potts_kernel(1.0, 2);
  CHECK(k2.values[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(k2.values[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  const KernelTable k4 = potts_kernel(1.2, 4);
  CHECK(k4.values[0] == doctest::Approx(std::exp(1.2)).epsilon(1e-15));
  for (int x = 1; x < 4; ++x) CHECK(k4.values[x] == doctest::Approx(std::exp(-1.2)).epsilon(1e-15));
  CHECK_THROWS_AS(potts_kernel(1.0, 1), InvalidAlphabet);
}

TEST_CASE("potts spectrum closed form") {
  const SpectrumTable s5 = potts_spectrum_closed_form(0.0, 5);
  CHECK(s5.values[0] == doctest::Approx(5.0));
  for (int y = 1; y < 5; ++y) CHECK(s5.values[y] == doctest::Approx(0.0));

  const SpectrumTable s2 = potts_spectrum_closed_form(1.0, 2);
  CHECK(s2.values[0] == doctest::Approx(std::exp(1.0) + std::exp(-1.0)).epsilon(1e-15));
  CHECK(s2.values[1] == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-15));

  for (int q = 2; q <= 8; ++q)
    for (double beta : kBetaGrid) {
      const SpectrumTable numeric = dft(potts_kernel(beta, q));
      const SpectrumTable closed = potts_spectrum_closed_form(beta, q);
      for (int y = 0; y < q; ++y) CHECK(std::abs(numeric.values[y] - closed.values[y]) < 1e-12);
    }
}

TEST_CASE("clock kernel values") {
  const double beta = 0.8;
  const KernelTable k4 = clock_kernel(beta, 4);
  CHECK(k4.values[0] == doctest::Approx(std::exp(beta)).epsilon(1e-15));
  CHECK(k4.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k4.values[2] == doctest::Approx(std::exp(-beta)).epsilon(1e-14));
  CHECK(k4.values[3] == doctest::Approx(1.0).epsilon(1e-14));
  for (double v : clock_kernel(0.0, 6).values) CHECK(v == doctest::Approx(1.0));
  const KernelTable k2 = clock_kernel(1.0, 2);  // coincides with the binary bond kernel
  CHECK(k2.values[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(k2.values[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("q=4 clock spectrum closed form") {
  const SpectrumTable zero = clock_spectrum_closed_form_q4(0.0);
  CHECK(zero.values[0] == doctest::Approx(4.0));
  for (int y = 1; y < 4; ++y) CHECK(zero.values[y] == doctest::Approx(0.0));

  for (double beta : {0.18, 0.5, 1.2, 2.0}) {
    const SpectrumTable numeric = dft(clock_kernel(beta, 4));
    const SpectrumTable closed = clock_spectrum_closed_form_q4(beta);
    for (int y = 0; y < 4; ++y) CHECK(std::abs(numeric.values[y] - closed.values[y]) < 1e-12);
  }
  CHECK(clock_spectrum_closed_form_q4(0.18).values[2] ==
        doctest::Approx(std::exp(0.18) + std::exp(-0.18) - 2.0).epsilon(1e-12));
  CHECK(clock_spectrum_closed_form_q4(0.18).values[2] > 0.0);
}

TEST_CASE("clock spectrum character series") {
  for (int q : {2, 3, 4, 7}) {
    CHECK(clock_spectrum_series(0.0, q, 0, 0) == doctest::Approx(q));
    for (int k = 1; k < q; ++k) CHECK(clock_spectrum_series(0.0, q, k, 0) == doctest::Approx(0.0));
  }
  SUBCASE("matches the transform at q=4") {
    const SpectrumTable closed = clock_spectrum_closed_form_q4(0.5);
    CHECK(std::abs(clock_spectrum_series(0.5, 4, 2, 40) - closed.values[2]) < 1e-10);
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(clock_spectrum_series(0.5, 4, k, default_series_terms(0.5)) -
                     closed.values[k]) < 1e-10);
  }
  SUBCASE("tail bound holds on a grid") {
    for (int q : {3, 4, 5}) {
      for (double beta : {0.3, 1.0, 2.5}) {
        const SpectrumTable s = dft(clock_kernel(beta, q));
        for (int n_max : {2, 5, 10, 30, default_series_terms(beta)}) {
          double partial_exp = 0.0, term = 1.0;
          for (int n = 0; n <= n_max; ++n) {
            partial_exp += term;
            term *= beta / (n + 1.0);
          }
          const double tail = q * (std::exp(beta) - partial_exp);
          for (int k = 0; k < q; ++k)
            CHECK(std::abs(clock_spectrum_series(beta, q, k, n_max) - s.values[k]) <=
                  tail + 1e-10);
        }
      }
    }
  }
}

TEST_CASE("spectrum positivity predicate") {
  CHECK(is_positive_spectrum(dft(clock_kernel(1.0, 5))));
  CHECK_FALSE(is_positive_spectrum(dft(potts_kernel(0.0, 3))));
  CHECK(is_positive_spectrum(dft(potts_kernel(0.5, 4))));

  // strict positivity across the whole supported grid
  for (int q = 2; q <= 12; ++q)
    for (int i = 1; i <= 30; ++i)
      CHECK(is_positive_spectrum(dft(clock_kernel(3.0 * i / 30.0, q))));
}

TEST_CASE("built kernels are even and spectra sum correctly") {
  for (int q = 2; q <= 8; ++q) {
    for (double beta : kBetaGrid) {
      for (const KernelTable& kernel : {potts_kernel(beta, q), clock_kernel(beta, q)}) {
        for (int x = 1; x < q; ++x)
          CHECK(kernel.values[x] == doctest::Approx(kernel.values[q - x]).epsilon(1e-15));
        double total = 0.0;
        for (double v : kernel.values) total += v;
        CHECK(std::abs(dft(kernel).values[0] - total) < 1e-12);
      }
    }
  }
}
