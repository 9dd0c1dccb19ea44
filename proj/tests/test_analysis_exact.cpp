#include <doctest.h>

#include <cmath>
#include <vector>

#include "nfgmc/analysis_exact.hpp"
#include "nfgmc/errors.hpp"

using namespace nfgmc;

namespace {

ModelSpec potts(int q, int L, double beta) {
  return ModelSpec{.q = q, .L = L, .beta = beta, .kind = KernelKind::potts, .custom_kernel = {}};
}

// linear-domain re-enumeration with extended precision, used as a second
// opinion on the log-domain sums
struct LinearSums {
  long double z = 0, inv = 0, sq = 0;
};

LinearSums linear_enumerate(const ModelSpec& spec, Representation rep) {
  LinearSums out;
  for_each_log_f(spec, rep, [&](double lf) {
    const long double f = std::exp(static_cast<long double>(lf));
    out.z += f;
    out.inv += 1.0L / f;
    out.sq += f * f;
  });
  return out;
}

}  // namespace

TEST_CASE("brute force log Z on hand-checked instances") {
  CHECK(brute_force_log_z(potts(2, 2, 0.0), Representation::primal) ==
        doctest::Approx(4 * std::log(2.0)).epsilon(1e-14));
  CHECK(brute_force_log_z(potts(3, 3, 0.0), Representation::primal) ==
        doctest::Approx(9 * std::log(3.0)).epsilon(1e-14));

  // q=2 L=2: 2 ground states at e^{8b}, 12 states at e^0, 2 at e^{-8b}
  const double b = 0.3;
  const double z = 2 * std::exp(8 * b) + 12 + 2 * std::exp(-8 * b);
  CHECK(brute_force_log_z(potts(2, 2, b), Representation::primal) ==
        doctest::Approx(std::log(z)).epsilon(1e-13));

  // strong coupling: log Z - 2 N beta -> log q
  CHECK(brute_force_log_z(potts(2, 2, 8.0), Representation::primal) - 8 * 8.0 ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));

  CHECK_THROWS_AS(brute_force_log_z(potts(4, 4, 0.5), Representation::primal),
                  TooLargeForExact);
}

TEST_CASE("parallel and serial enumerations agree bit for bit") {
  for (Representation rep : {Representation::primal, Representation::dual}) {
    for (const ModelSpec& spec : {potts(2, 3, 0.6), potts(3, 2, 1.1)}) {
      const ExactSums a = exact_sums(spec, rep);
      const ExactSums b = exact_sums_serial(spec, rep);
      CHECK(a.log_z == b.log_z);
      CHECK(a.log_sum_inv_f == b.log_sum_inv_f);
      CHECK(a.log_sum_f2 == b.log_sum_f2);
      CHECK(a.n_configs == b.n_configs);
    }
  }
}

TEST_CASE("enumeration agrees with a linear-domain recount") {
  for (Representation rep : {Representation::primal, Representation::dual}) {
    const ModelSpec spec = potts(2, 2, 0.7);
    const ExactSums sums = exact_sums(spec, rep);
    const LinearSums lin = linear_enumerate(spec, rep);
    CHECK(sums.log_z == doctest::Approx(static_cast<double>(std::log(lin.z))).epsilon(1e-13));
    CHECK(sums.log_sum_inv_f ==
          doctest::Approx(static_cast<double>(std::log(lin.inv))).epsilon(1e-13));
    CHECK(sums.log_sum_f2 ==
          doctest::Approx(static_cast<double>(std::log(lin.sq))).epsilon(1e-13));
    CHECK(sums.n_configs == (rep == Representation::primal ? 16 : 32));
  }
}

TEST_CASE("transfer matrix") {
  CHECK(transfer_matrix_log_z(potts(2, 4, 0.0)) ==
        doctest::Approx(16 * std::log(2.0)).epsilon(1e-12));
  for (const ModelSpec& spec :
       {potts(2, 2, 0.3), potts(2, 3, 0.9), potts(2, 4, 1.3), potts(3, 2, 0.5),
        potts(3, 3, 0.7)}) {
    const double tm = transfer_matrix_log_z(spec);
    const double bf = brute_force_log_z(spec, Representation::primal);
    CHECK(std::abs(tm - bf) / std::abs(bf) < 1e-9);
  }
  ModelSpec clock{.q = 4, .L = 2, .beta = 0.8, .kind = KernelKind::clock, .custom_kernel = {}};
  CHECK(std::abs(transfer_matrix_log_z(clock) -
                 brute_force_log_z(clock, Representation::primal)) < 1e-9);
  CHECK_THROWS_AS(transfer_matrix_log_z(potts(2, 13, 0.5)), TooLargeForTransfer);
}

TEST_CASE("asymptotic variances") {
  SUBCASE("flat model has zero variance") {
    CHECK(exact_asym_var_ot(potts(2, 2, 0.0), Representation::primal) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(exact_asym_var_uniform(potts(3, 2, 0.0), Representation::primal) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("matches the linear-domain recount") {
    for (Representation rep : {Representation::primal, Representation::dual}) {
      const ModelSpec spec = potts(2, 2, rep == Representation::primal ? 0.5 : 1.2);
      const LinearSums lin = linear_enumerate(spec, rep);
      const long double n = rep == Representation::primal ? 16.0L : 32.0L;
      const double want_ot = static_cast<double>(lin.z * lin.inv / (n * n) - 1.0L);
      const double want_u = static_cast<double>(n * lin.sq / (lin.z * lin.z) - 1.0L);
      CHECK(exact_asym_var_ot(spec, rep) == doctest::Approx(want_ot).epsilon(1e-11));
      CHECK(exact_asym_var_uniform(spec, rep) == doctest::Approx(want_u).epsilon(1e-11));
    }
  }
  SUBCASE("uniform variance never exceeds |X| - 1") {
    for (double beta : {0.1, 0.5, 1.0, 2.0}) {
      for (int q : {2, 3}) {
        CHECK(exact_asym_var_uniform(potts(q, 2, beta), Representation::primal) <=
              std::pow(q, 4) - 1 + 1e-9);
        CHECK(exact_asym_var_uniform(potts(q, 2, beta), Representation::dual) <=
              std::pow(q, 5) - 1 + 1e-9);
      }
    }
  }
}

TEST_CASE("primal variance bounds") {
  SUBCASE("zero-temperature limits") {
    const BoundsReport b = prop1_bounds(0.0, 4, 2);
    CHECK(b.l_ot() == doctest::Approx(1.0 / 256 - 1).epsilon(1e-12));
    CHECK(b.r_ot() == doctest::Approx(0.0));
    CHECK(b.r_u() == doctest::Approx(0.0));
    CHECK(b.crossover == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
  }
  SUBCASE("crossover scales with the alphabet") {
    CHECK(prop1_bounds(0.5, 9, 4).crossover ==
          doctest::Approx(1.5 * std::log(4.0)).epsilon(1e-14));
  }
  SUBCASE("stay representable at scale") {
    const BoundsReport big = prop1_bounds(1.5, 100, 3);
    CHECK(std::isfinite(big.log1p_r_u));
    CHECK(big.log1p_r_u == doctest::Approx(8 * 100 * 1.5).epsilon(1e-12));
  }
  SUBCASE("sandwich exact values") {
    for (int L : {2, 3})
      for (int q : {2, 3})
        for (int i = 1; i <= 15; ++i) {
          const double beta = 0.1 * i;
          const ModelSpec spec = potts(q, L, beta);
          const BoundsReport b = prop1_bounds(beta, spec.n_sites(), q);
          const double lv_ot = std::log1p(exact_asym_var_ot(spec, Representation::primal));
          const double lv_u = std::log1p(exact_asym_var_uniform(spec, Representation::primal));
          CHECK(b.log1p_l_ot <= lv_ot + 1e-9);
          CHECK(lv_ot <= b.log1p_r_ot + 1e-9);
          CHECK(b.log1p_l_u <= lv_u + 1e-9);
          CHECK(lv_u <= b.log1p_r_u + 1e-9);
          CHECK(lv_u <= b.log1p_uniform_upper + 1e-9);
        }
  }
}

TEST_CASE("dual variance bounds") {
  SUBCASE("argument checking") {
    CHECK_THROWS_AS(prop2_bounds(0.0, 4, 2), ZeroBeta);
    CHECK_THROWS_AS(prop2_bounds(0.5, 9, 2), OddN);
  }
  SUBCASE("ratio ingredients") {
    const BoundsReport b = prop2_bounds(1.0, 4, 3);
    CHECK(b.a0 == doctest::Approx(1 - std::exp(-2.0)).epsilon(1e-14));
    CHECK(b.aq == doctest::Approx(1 + 2 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(b.r == doctest::Approx(b.aq / b.a0).epsilon(1e-14));
    CHECK(b.crossover ==
          doctest::Approx(0.5 * std::log1p(3.0 / 8.0)).epsilon(1e-14));
  }
  SUBCASE("bounds collapse in the strong-coupling limit") {
    const BoundsReport b = prop2_bounds(30.0, 4, 2);
    CHECK(b.r_ot() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(b.r_u() == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("upper bounds decrease with beta") {
    double prev_ot = 1e308, prev_u = 1e308;
    for (int i = 3; i <= 20; ++i) {
      const BoundsReport b = prop2_bounds(0.1 * i, 4, 2);
      CHECK(b.log1p_r_ot < prev_ot);
      CHECK(b.log1p_r_u < prev_u);
      prev_ot = b.log1p_r_ot;
      prev_u = b.log1p_r_u;
    }
  }
  SUBCASE("sandwich exact values") {
    for (int q : {2, 3})
      for (int i = 3; i <= 20; ++i) {
        const double beta = 0.1 * i;
        const ModelSpec spec = potts(q, 2, beta);
        const BoundsReport b = prop2_bounds(beta, spec.n_sites(), q);
        const double lv_ot = std::log1p(exact_asym_var_ot(spec, Representation::dual));
        const double lv_u = std::log1p(exact_asym_var_uniform(spec, Representation::dual));
        CHECK(b.log1p_l_ot <= lv_ot + 1e-9);
        CHECK(lv_ot <= b.log1p_r_ot + 1e-9);
        CHECK(b.log1p_l_u <= lv_u + 1e-9);
        CHECK(lv_u <= b.log1p_r_u + 1e-9);
      }
  }
}
