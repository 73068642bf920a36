#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "pdcf/samplers.hpp"
#include "pdcf/special.hpp"
#include "pdcf/stattest.hpp"

using namespace pdcf;

namespace {

std::function<double(double)> beta_cdf(double a, double b) {
  return [a, b](double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return reg_inc_beta(a, b, x);
  };
}

}  // namespace

TEST_CASE("gem_sticks bookkeeping") {
  const Params p(0.5, 0.5);
  RngStream g(11, 0);
  const SizeBiasedWeights w = gem_sticks(p, Truncation{1e-4, 100000}, g);
  CHECK_FALSE(w.truncated);
  CHECK(w.residual < 1e-4);
  double sum = w.residual;
  for (double x : w.weights) sum += x;
  CHECK(std::fabs(sum - 1.0) < 1e-11);
  // the residual is exactly the running product of the leftovers
  double prod = 1.0;
  for (double x : w.weights) prod -= x;
  CHECK(prod == doctest::Approx(w.residual).epsilon(1e-8));

  RngStream g2(11, 1);
  const SizeBiasedWeights t = gem_sticks(p, Truncation{0.0, 7}, g2);
  CHECK(t.truncated);
  CHECK(t.weights.size() == 7);
}

TEST_CASE("first stick follows Beta(1-alpha, theta+alpha)") {
  const Params p(0.5, 0.5);
  std::vector<double> first(100000);
  double mean = 0.0;
  for (std::size_t r = 0; r < first.size(); ++r) {
    RngStream g(21, r);
    first[r] = gem_sticks(p, Truncation{0.25, 2}, g).weights.at(0);
    mean += first[r];
  }
  mean /= static_cast<double>(first.size());
  const double target = (1.0 - p.alpha) / (1.0 + p.theta);
  CHECK(std::fabs(mean - target) < 0.005);
  CHECK(ks_one_sample(first, beta_cdf(0.5, 1.0), "b1").pass);
}

TEST_CASE("pd_sample invariants") {
  const Params p(0.5, 1.0);
  for (int r = 0; r < 50; ++r) {
    RngStream g(31, r);
    const MassPartition x = pd_sample(p, Truncation{1e-6, 100000}, g);
    double sum = x.residual();
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum += x.atom(i);
      if (i > 0) CHECK(x.atom(i) <= x.atom(i - 1));
    }
    CHECK(std::fabs(sum - 1.0) < 1e-11);
    CHECK(x.atom(0) >= (1.0 - x.residual()) / static_cast<double>(x.size()));
  }
}

TEST_CASE("crp_sample basics") {
  const Params p(0.5, 0.5);
  RngStream g(41, 0);
  const SetPartition one = crp_sample(p, 1, g);
  CHECK(one.blocks == std::vector<std::vector<int>>{{1}});

  int together = 0;
  const int n = 100000;
  for (int r = 0; r < n; ++r) {
    RngStream gg(42, r);
    const SetPartition q = crp_sample(p, 2, gg);
    together += (q.blocks.size() == 1);
  }
  const double target = (1.0 - p.alpha) / (1.0 + p.theta);
  CHECK(std::fabs(together / static_cast<double>(n) - target) <
        3.0 * std::sqrt(target * (1.0 - target) / n));
}

TEST_CASE("crp partition law matches the exact transition product") {
  const Params p(0.5, 0.5);
  SetPartition split;
  split.lo = 1;
  split.blocks = {{1, 2}, {3}};
  CHECK(crp_exact_prob(p, split) == doctest::Approx(2.0 / 15.0).epsilon(1e-14));

  const auto parts = enumerate_set_partitions(3);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<double> probs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    index[restricted_growth(parts[i])] = i;
    probs.push_back(crp_exact_prob(p, parts[i]));
  }
  std::vector<std::size_t> counts(parts.size(), 0);
  const int n = 100000;
  for (int r = 0; r < n; ++r) {
    RngStream g(43, r);
    counts[index.at(restricted_growth(crp_sample(p, 3, g)))] += 1;
  }
  CHECK(chi_square(counts, probs, "crp3").pass);
}

TEST_CASE("crp_exact_prob totals and guards") {
  SetPartition ones;
  ones.lo = 1;
  ones.blocks = {{1}, {2}};
  CHECK(crp_exact_prob(Params(0.0, 1.0), ones) == doctest::Approx(0.5));

  for (const Params& p : {Params(0.0, 1.0), Params(0.5, 0.5), Params(0.3, -0.2),
                          Params(0.9, 2.0)}) {
    double total = 0.0;
    for (const auto& q : enumerate_set_partitions(4)) total += crp_exact_prob(p, q);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }

  SetPartition big;
  big.lo = 1;
  big.blocks = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}};
  CHECK_THROWS_AS(crp_exact_prob(Params(0.5, 0.5), big), std::length_error);
}

TEST_CASE("expected block count at alpha=0 is the harmonic sum") {
  const Params p(0.0, 1.0);
  double mean = 0.0;
  const int n = 100000;
  for (int r = 0; r < n; ++r) {
    RngStream g(44, r);
    mean += static_cast<double>(crp_sample(p, 3, g).blocks.size());
  }
  mean /= n;
  CHECK(std::fabs(mean - 11.0 / 6.0) < 3.0 * 0.8 / std::sqrt(n));
}

TEST_CASE("subordinator sample structure") {
  const Params p(0.5, 1.5);
  RngStream g(51, 0);
  const SubordinatorResult s = subordinator_pd(p, Truncation{1e-3, 100000}, g);
  CHECK_FALSE(s.sample.truncated);
  for (std::size_t i = 1; i < s.sample.ranked_jumps.size(); ++i)
    CHECK(s.sample.ranked_jumps[i] < s.sample.ranked_jumps[i - 1]);
  double drawn = 0.0;
  for (double j : s.sample.ranked_jumps) drawn += j;
  CHECK(std::fabs(drawn + s.sample.residual_mass - s.sample.total_mass) <
        1e-9 * s.sample.total_mass);
  double atom_sum = 0.0;
  for (std::size_t i = 0; i < s.partition.size(); ++i)
    atom_sum += s.partition.atom(i);
  CHECK(atom_sum == doctest::Approx(1.0 - s.partition.residual()).epsilon(1e-9));

  CHECK_THROWS_AS(subordinator_pd(Params(0.5, -0.1), Truncation{}, g),
                  std::domain_error);
  CHECK_THROWS_AS(subordinator_pd(Params(0.3, -0.2), Truncation{}, g),
                  std::domain_error);
}

TEST_CASE("subordinator total mass is Gamma(theta,1)") {
  for (const Params& p : {Params(0.0, 2.0), Params(0.5, 1.5)}) {
    const Truncation trunc = p.alpha == 0.0 ? Truncation{1e-8, 100000}
                                            : Truncation{3e-3, 100000};
    std::vector<double> mass(3000);
    for (std::size_t r = 0; r < mass.size(); ++r) {
      RngStream g(52, r);
      mass[r] = subordinator_pd(p, trunc, g).sample.total_mass;
    }
    const double theta = p.theta;
    CHECK(ks_one_sample(mass, [theta](double x) {
            return x <= 0.0 ? 0.0 : reg_inc_gamma_lower(theta, x);
          }).pass);
  }
}

TEST_CASE("branching matches the seating law") {
  RngStream g(61, 0);
  const SetPartition one = branching_sample(Params(0.3, 1.0), 1, g);
  CHECK(one.blocks == std::vector<std::vector<int>>{{1}});

  const Params p(0.3, 1.0);
  int clone = 0;
  const int n = 100000;
  for (int r = 0; r < n; ++r) {
    RngStream gg(62, r);
    clone += (branching_sample(p, 2, gg).blocks.size() == 1);
  }
  const double target = (1.0 - p.alpha) / (1.0 + p.theta);
  CHECK(std::fabs(clone / static_cast<double>(n) - target) <
        3.0 * std::sqrt(target * (1.0 - target) / n));

  const auto parts = enumerate_set_partitions(4);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<double> probs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    index[restricted_growth(parts[i])] = i;
    probs.push_back(crp_exact_prob(p, parts[i]));
  }
  std::vector<std::size_t> counts(parts.size(), 0);
  const int reps = 30000;
  for (int r = 0; r < reps; ++r) {
    RngStream gg(63, r);
    counts[index.at(restricted_growth(branching_sample(p, 4, gg)))] += 1;
  }
  CHECK(chi_square(counts, probs, "branching4").pass);
}
