#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pdcf/rng.hpp"
#include "pdcf/special.hpp"
#include "pdcf/stattest.hpp"

using namespace pdcf;

TEST_CASE("fixed key reproduces the sequence bit for bit") {
  RngStream a(987654321, 17), b(987654321, 17);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams differ") {
  RngStream a(987654321, 0), b(987654321, 1), c(123, 0);
  int equal_ab = 0, equal_ac = 0;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = a.next_u64();
    equal_ab += (x == b.next_u64());
    equal_ac += (x == c.next_u64());
  }
  CHECK(equal_ab == 0);
  CHECK(equal_ac == 0);
}

TEST_CASE("uniform01 range and mean") {
  RngStream g(1, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = g.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("uniform draws pass KS against the identity CDF") {
  RngStream g(2, 0);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = g.uniform01();
  const TestResult r = ks_one_sample(xs, [](double x) { return x; });
  CHECK(r.pass);
}

TEST_CASE("normal variates pass KS against Phi") {
  RngStream g(3, 0);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = g.normal();
  const TestResult r = ks_one_sample(
      xs, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); });
  CHECK(r.pass);
}

TEST_CASE("beta moments and KS") {
  RngStream g(4, 0);
  const int n = 100000;
  double sum = 0.0;
  std::vector<double> xs(n);
  for (auto& x : xs) {
    x = sample_beta(1.0, 2.0, g);
    sum += x;
  }
  CHECK(sum / n == doctest::Approx(1.0 / 3.0).epsilon(0.015));
  CHECK(std::fabs(sum / n - 1.0 / 3.0) < 0.005);
  const TestResult r = ks_one_sample(
      xs, [](double x) { return reg_inc_beta(1.0, 2.0, x); }, "beta12");
  CHECK(r.pass);

  std::vector<double> ys(n);
  for (auto& y : ys) y = sample_beta(0.5, 0.5, g);
  int below = 0;
  for (double y : ys) below += (y < 0.5);
  CHECK(std::fabs(below / static_cast<double>(n) - 0.5) < 3.0 * 0.5 / std::sqrt(n));
  const TestResult r2 = ks_one_sample(
      ys, [](double x) { return reg_inc_beta(0.5, 0.5, x); }, "beta-half");
  CHECK(r2.pass);

  std::vector<double> zs(n);
  for (auto& z : zs) z = sample_beta(0.1, 2.9, g);
  const TestResult r3 = ks_one_sample(
      zs, [](double x) { return reg_inc_beta(0.1, 2.9, x); }, "beta-small-a");
  CHECK(r3.pass);
}

TEST_CASE("gamma moments, exponential tail, convolution") {
  RngStream g(5, 0);
  const int n = 100000;
  double sum = 0.0;
  std::vector<double> xs(n);
  for (auto& x : xs) {
    x = sample_gamma(2.0, 1.0, g);
    sum += x;
  }
  CHECK(std::fabs(sum / n - 2.0) < 0.02);
  const TestResult r = ks_one_sample(
      xs, [](double x) { return reg_inc_gamma_lower(2.0, x); }, "gamma21");
  CHECK(r.pass);

  // rate convention: Gamma(1, r) is exponential with P(X > t) = e^{-rt}
  const double rate = 2.5;
  int over = 0;
  const double t = 0.7;
  for (int i = 0; i < n; ++i) over += (sample_gamma(1.0, rate, g) > t);
  const double p = std::exp(-rate * t);
  CHECK(std::fabs(over / static_cast<double>(n) - p) <
        3.0 * std::sqrt(p * (1.0 - p) / n));

  // sum of k unit-rate exponentials is Gamma(k, 1)
  std::vector<double> sums(20000);
  for (auto& s : sums) {
    s = 0.0;
    for (int k = 0; k < 3; ++k) s += sample_gamma(1.0, 1.0, g);
  }
  const TestResult r2 = ks_one_sample(
      sums, [](double x) { return reg_inc_gamma_lower(3.0, x); }, "gamma-sum");
  CHECK(r2.pass);

  // small shapes stress the boosted path
  std::vector<double> small(n);
  for (auto& s : small) s = sample_gamma(0.1, 1.0, g);
  const TestResult r3 = ks_one_sample(
      small, [](double x) { return reg_inc_gamma_lower(0.1, x); }, "gamma-small");
  CHECK(r3.pass);
}

TEST_CASE("sampling domain errors") {
  RngStream g(6, 0);
  CHECK_THROWS_AS(sample_beta(0.0, 1.0, g), std::domain_error);
  CHECK_THROWS_AS(sample_beta(1.0, -2.0, g), std::domain_error);
  CHECK_THROWS_AS(sample_gamma(0.0, 1.0, g), std::domain_error);
  CHECK_THROWS_AS(sample_gamma(1.0, 0.0, g), std::domain_error);
}
