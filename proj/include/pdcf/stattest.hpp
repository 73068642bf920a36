#ifndef PDCF_STATTEST_HPP
#define PDCF_STATTEST_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pdcf/partition.hpp"

namespace pdcf {

struct TestResult {
  std::string name;
  double statistic = 0.0;
  double p_value = 1.0;
  double threshold = 0.001;
  bool pass = true;  // p_value >= threshold
  std::size_t n_samples = 0;
};

// Survival function of the asymptotic Kolmogorov distribution,
// Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_upper(double df, double statistic);

// One-sample Kolmogorov-Smirnov test against a CDF.
TestResult ks_one_sample(std::vector<double> samples,
                         const std::function<double(double)>& cdf,
                         const std::string& name = "ks",
                         double threshold = 0.001);

// Two-sample Kolmogorov-Smirnov test.
TestResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                         const std::string& name = "ks2",
                         double threshold = 0.001);

// Pearson chi-square against given cell probabilities.  Every expected
// count must be at least 5; pool cells beforehand if necessary.
TestResult chi_square(std::span<const std::size_t> observed,
                      std::span<const double> probs,
                      const std::string& name = "chi2",
                      double threshold = 0.001);

// 2 x k contingency chi-square for two independent count vectors over the
// same cells (homogeneity test), df = k - 1.
TestResult chi_square_homogeneity(std::span<const std::size_t> a,
                                  std::span<const std::size_t> b,
                                  const std::string& name = "chi2-hom",
                                  double threshold = 0.001);

// All partitions of {1..n} in canonical least-element block order, n <= 12.
std::vector<SetPartition> enumerate_set_partitions(int n);

// Exact distribution of the (alpha,theta) seating process on {1..n} by
// exhaustive enumeration of every seating decision sequence, n <= 8.
// Keys are restricted-growth encodings: entry i-1 is the block index of
// label i in order of first appearance.
std::map<std::vector<int>, double> crp_seating_oracle(const Params& params, int n);

// Restricted-growth encoding of a partition (block index of each label in
// order of first appearance); the key type used by crp_seating_oracle.
std::vector<int> restricted_growth(const SetPartition& p);

}  // namespace pdcf

#endif
