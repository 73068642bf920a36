#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdcf/special.hpp"
#include "quadrature.hpp"

using namespace pdcf;

TEST_CASE("log_gamma exact points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(4.0) == doctest::Approx(1.791759469228055).epsilon(1e-13));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-13));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("log_gamma recurrence over the stated range") {
  // lgamma(x+1) = lgamma(x) + ln x
  for (double lx = -3.0; lx <= 6.0; lx += 0.17) {
    const double x = std::pow(10.0, lx);
    const double lhs = log_gamma(x + 1.0);
    const double rhs = log_gamma(x) + std::log(x);
    CHECK(std::fabs(lhs - rhs) <=
          1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)}));
  }
}

TEST_CASE("log_gamma domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("reg_inc_beta closed forms") {
  CHECK(reg_inc_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
  for (double a : {0.2, 1.0, 3.5, 17.0})
    CHECK(reg_inc_beta(a, a, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(reg_inc_beta(1.0, 2.0, 0.25) == doctest::Approx(0.4375).epsilon(1e-12));
  CHECK(reg_inc_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(reg_inc_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("reg_inc_beta symmetry and monotonicity") {
  std::uint64_t s = 12345;
  auto next = [&s]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(s >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 100; ++i) {
    const double a = 0.05 + 5.0 * next();
    const double b = 0.05 + 5.0 * next();
    const double x = next();
    const double lhs = reg_inc_beta(a, b, x) + reg_inc_beta(b, a, 1.0 - x);
    CHECK(std::fabs(lhs - 1.0) <= 1e-10);
  }
  double prev = 0.0;
  for (double x = 0.0; x <= 1.0; x += 0.01) {
    const double v = reg_inc_beta(0.3, 2.7, x);
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("reg_inc_beta domain errors") {
  CHECK_THROWS_AS(reg_inc_beta(0.0, 1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, -1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, 1.1), std::domain_error);
}

TEST_CASE("reg_inc_gamma_lower closed forms and quadrature oracle") {
  CHECK(reg_inc_gamma_lower(1.0, std::log(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(reg_inc_gamma_lower(3.3, 0.0) == 0.0);
  // P(1/2, 1) = erf(1); oracle: quadrature of t^(-1/2) e^-t / Gamma(1/2)
  const double quad =
      pdcf_test::integrate(
          [](double t) { return std::pow(t, -0.5) * std::exp(-t); }, 1e-14,
          1.0) /
      std::tgamma(0.5);
  CHECK(quad == doctest::Approx(0.8427007929497149).epsilon(1e-8));
  CHECK(reg_inc_gamma_lower(0.5, 1.0) ==
        doctest::Approx(0.8427007929497149).epsilon(1e-10));
  CHECK_THROWS_AS(reg_inc_gamma_lower(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(reg_inc_gamma_lower(1.0, -1.0), std::domain_error);
}

TEST_CASE("inv_reg_inc_gamma_lower round trip") {
  for (double p : {0.05, 0.3, 0.7, 0.95}) {
    const double x = inv_reg_inc_gamma_lower(0.5, p, 2.0);
    CHECK(reg_inc_gamma_lower(0.5, x) ==
          doctest::Approx(p * reg_inc_gamma_lower(0.5, 2.0)).epsilon(1e-9));
  }
}

TEST_CASE("levy_tail alpha=0 equals the exponential integral") {
  // E1(1) frozen from quadrature
  const double quad = pdcf_test::levy_tail_quadrature(0.0, 1.0);
  CHECK(quad == doctest::Approx(0.21938393439552026).epsilon(1e-9));
  CHECK(levy_tail(0.0, 1.0) ==
        doctest::Approx(0.21938393439552026).epsilon(1e-12));
  // series/continued-fraction boundary agreement
  CHECK(levy_tail(0.0, 1.0 - 1e-12) ==
        doctest::Approx(levy_tail(0.0, 1.0 + 1e-12)).epsilon(1e-9));
}

TEST_CASE("levy_tail alpha>0 matches quadrature") {
  // frozen value from the closed form e^-1 - sqrt(pi) erfc(1), cross-checked
  // by quadrature
  const double closed = std::exp(-1.0) - std::sqrt(M_PI) * std::erfc(1.0);
  CHECK(closed == doctest::Approx(0.08907385589078035).epsilon(1e-12));
  CHECK(pdcf_test::levy_tail_quadrature(0.5, 1.0) ==
        doctest::Approx(0.08907385589078035).epsilon(1e-9));
  CHECK(levy_tail(0.5, 1.0) ==
        doctest::Approx(0.08907385589078035).epsilon(1e-11));
  for (double alpha : {0.25, 0.5, 0.9}) {
    for (double x : {0.01, 0.4, 1.9, 2.1, 7.0, 30.0, 44.0, 46.0, 80.0}) {
      const double q = pdcf_test::levy_tail_quadrature(alpha, x);
      const double v = levy_tail(alpha, x);
      CHECK(std::fabs(v - q) <= 1e-9 * std::max(1.0, q));
    }
  }
}

TEST_CASE("levy_tail shape") {
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    double prev = levy_tail(alpha, 1e-6);
    CHECK(prev > 100.0 * levy_tail(alpha, 1.0));  // divergence toward 0
    for (double x = 1e-4; x < 50.0; x *= 3.7) {
      const double v = levy_tail(alpha, x);
      CHECK(v < prev);
      prev = v;
    }
    CHECK(levy_tail(alpha, 200.0) < 1e-80);
  }
  CHECK_THROWS_AS(levy_tail(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(levy_tail(0.5, -1.0), std::domain_error);
  CHECK_THROWS_AS(levy_tail(1.0, 1.0), std::domain_error);
}

TEST_CASE("levy_tail_inverse round trip on a log grid") {
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    for (double lx = -8.0; lx <= std::log10(50.0); lx += 0.25) {
      const double x = std::pow(10.0, lx);
      const double y = levy_tail(alpha, x);
      const double xi = levy_tail_inverse(alpha, y);
      const double yr = levy_tail(alpha, xi);
      CHECK(std::fabs(yr - y) <= 1e-10 * std::max(1.0, y));
    }
  }
}

TEST_CASE("levy_tail_inverse known point and monotonicity") {
  CHECK(levy_tail_inverse(0.0, 0.21938393439552026) ==
        doctest::Approx(1.0).epsilon(1e-9));
  for (double alpha : {0.0, 0.5}) {
    double prev = levy_tail_inverse(alpha, 1e-4);
    for (double y = 3e-4; y < 1e4; y *= 3.0) {
      const double x = levy_tail_inverse(alpha, y);
      CHECK(x < prev);
      prev = x;
    }
  }
  CHECK_THROWS_AS(levy_tail_inverse(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(levy_tail_inverse(0.5, -1.0), std::domain_error);
}

TEST_CASE("levy_tail_inverse survives extreme arguments") {
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    const double lo = levy_tail_inverse(alpha, 1e300);
    const double hi = levy_tail_inverse(alpha, 1e-300);
    CHECK(lo > 0.0);
    CHECK(hi > lo);
    CHECK(hi <= 745.0);
  }
}

TEST_CASE("levy_small_jump_mass") {
  CHECK(levy_small_jump_mass(0.0, 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
  CHECK(levy_small_jump_mass(0.5, 0.0) == 0.0);
  // oracle: integral_0^1 t * 0.5 t^-1.5 e^-t dt
  const double quad = pdcf_test::integrate(
      [](double t) { return 0.5 * std::pow(t, -0.5) * std::exp(-t); }, 1e-14,
      1.0);
  CHECK(levy_small_jump_mass(0.5, 1.0) == doctest::Approx(quad).epsilon(1e-8));
  // complements the tail: total mass of t * intensity over (0, inf)
  for (double alpha : {0.25, 0.5}) {
    const double total = levy_small_jump_mass(alpha, 40.0) +
                         pdcf_test::integrate(
                             [alpha](double t) {
                               return alpha * std::pow(t, -alpha) * std::exp(-t);
                             },
                             40.0, 90.0);
    CHECK(total == doctest::Approx(alpha * std::tgamma(1.0 - alpha) * 1.0)
                       .epsilon(1e-8));
  }
}
