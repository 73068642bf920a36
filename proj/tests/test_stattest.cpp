#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdcf/stattest.hpp"

using namespace pdcf;

TEST_CASE("kolmogorov Q values") {
  // oracle: direct long-double evaluation of the alternating series
  auto direct = [](long double lambda) {
    long double q = 0.0L;
    for (int j = 1; j <= 200; ++j) {
      const long double t = std::exp(-2.0L * j * j * lambda * lambda);
      q += (j % 2 == 1 ? t : -t);
    }
    return static_cast<double>(2.0L * q);
  };
  CHECK(kolmogorov_q(1.36) == doctest::Approx(0.04948587675537791).epsilon(1e-9));
  for (double lam : {0.4, 0.8, 1.0, 1.2, 1.36, 2.0, 3.0})
    CHECK(kolmogorov_q(lam) == doctest::Approx(direct(lam)).epsilon(1e-9));
  CHECK(kolmogorov_q(0.0) == 1.0);
  CHECK(kolmogorov_q(1e-3) == doctest::Approx(1.0));
}

TEST_CASE("ks_one_sample degenerate statistics") {
  const TestResult single = ks_one_sample({0.5}, [](double x) { return x; });
  CHECK(single.statistic == doctest::Approx(0.5));

  const int n = 100;
  std::vector<double> quantiles(n);
  for (int k = 0; k < n; ++k) quantiles[k] = (k + 0.5) / n;
  const TestResult q = ks_one_sample(quantiles, [](double x) { return x; });
  CHECK(q.statistic == doctest::Approx(0.5 / n));
  CHECK(q.pass);

  CHECK_THROWS_AS(ks_one_sample({}, [](double x) { return x; }),
                  std::domain_error);
}

TEST_CASE("ks p-value is invariant under monotone transforms") {
  std::vector<double> xs;
  std::uint64_t s = 99;
  for (int i = 0; i < 2000; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    xs.push_back(static_cast<double>(s >> 11) * 0x1.0p-53);
  }
  const TestResult base = ks_one_sample(xs, [](double x) { return x; });
  std::vector<double> cubed(xs);
  for (auto& x : cubed) x = x * x * x;
  const TestResult transformed =
      ks_one_sample(cubed, [](double x) { return std::cbrt(x); });
  CHECK(base.statistic == doctest::Approx(transformed.statistic).epsilon(1e-12));
  CHECK(base.p_value == doctest::Approx(transformed.p_value).epsilon(1e-12));
}

TEST_CASE("ks_two_sample degenerate statistics") {
  const std::vector<double> a{0.1, 0.2, 0.3, 0.4};
  CHECK(ks_two_sample(a, a).statistic == doctest::Approx(0.0));

  const std::vector<double> lo{0.1, 0.2}, hi{0.9, 1.0};
  CHECK(ks_two_sample(lo, hi).statistic == doctest::Approx(1.0));

  // strict one-by-one interleaving: D = 1/N
  const int n = 50;
  std::vector<double> odd, even;
  for (int k = 0; k < n; ++k) {
    odd.push_back(2.0 * k);
    even.push_back(2.0 * k + 1.0);
  }
  CHECK(ks_two_sample(odd, even).statistic == doctest::Approx(1.0 / n));
  CHECK_THROWS_AS(ks_two_sample({}, {0.5}), std::domain_error);
}

TEST_CASE("chi_square statistics") {
  const std::vector<std::size_t> prop{50, 30, 20};
  const std::vector<double> probs{0.5, 0.3, 0.2};
  const TestResult exact = chi_square(prop, probs);
  CHECK(exact.statistic == doctest::Approx(0.0));
  CHECK(exact.p_value == doctest::Approx(1.0));

  const std::vector<std::size_t> obs{60, 40};
  const std::vector<double> half{0.5, 0.5};
  const TestResult two = chi_square(obs, half);
  CHECK(two.statistic == doctest::Approx(4.0));

  // df=1, stat 3.841 -> p ~ 0.05; oracle erfc(sqrt(stat/2))
  CHECK(chi_square_upper(1.0, 3.841) ==
        doctest::Approx(std::erfc(std::sqrt(3.841 / 2.0))).epsilon(1e-12));
  CHECK(chi_square_upper(1.0, 3.841) == doctest::Approx(0.05001368).epsilon(1e-5));
}

TEST_CASE("chi_square statistic is invariant under cell permutation") {
  const std::vector<std::size_t> obs{55, 25, 20};
  const std::vector<double> probs{0.5, 0.3, 0.2};
  const std::vector<std::size_t> perm{20, 55, 25};
  const std::vector<double> probs_perm{0.2, 0.5, 0.3};
  CHECK(chi_square(obs, probs).statistic ==
        doctest::Approx(chi_square(perm, probs_perm).statistic).epsilon(1e-12));
}

TEST_CASE("chi_square usage errors") {
  CHECK_THROWS_AS(
      chi_square(std::vector<std::size_t>{3, 7}, std::vector<double>{0.5, 0.5}),
      std::invalid_argument);
  CHECK_THROWS_AS(chi_square(std::vector<std::size_t>{50, 50},
                             std::vector<double>{0.6, 0.6}),
                  std::invalid_argument);
}

TEST_CASE("enumerate_set_partitions Bell counts") {
  CHECK(enumerate_set_partitions(1).size() == 1);
  CHECK(enumerate_set_partitions(3).size() == 5);
  CHECK(enumerate_set_partitions(4).size() == 15);
  CHECK(enumerate_set_partitions(6).size() == 203);
  for (const auto& p : enumerate_set_partitions(5)) CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS(enumerate_set_partitions(0), std::length_error);
  CHECK_THROWS_AS(enumerate_set_partitions(13), std::length_error);
}

TEST_CASE("seating oracle basics") {
  const Params p(0.0, 1.0);
  const auto dist = crp_seating_oracle(p, 2);
  CHECK(dist.at({0, 1}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist.at({0, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  double total = 0.0;
  for (const auto& [k, v] : crp_seating_oracle(Params(0.5, 0.5), 5)) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(crp_seating_oracle(p, 9), std::length_error);
}
