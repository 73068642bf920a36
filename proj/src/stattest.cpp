#include "pdcf/stattest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pdcf/special.hpp"

namespace pdcf {

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Complementary theta series; the direct series converges poorly here.
    const double pi = 3.14159265358979323846;
    const double f = pi * pi / (8.0 * lambda * lambda);
    double p = 0.0;
    for (int j = 1; j <= 20; j += 2) {
      const double term = std::exp(-f * j * j);
      p += term;
      if (term < 1e-18 * p) break;
    }
    p *= std::sqrt(2.0 * pi) / lambda;
    return 1.0 - p;
  }
  double q = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    q += sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return 2.0 * q;
}

double chi_square_upper(double df, double statistic) {
  if (statistic <= 0.0) return 1.0;
  return 1.0 - reg_inc_gamma_lower(df / 2.0, statistic / 2.0);
}

TestResult ks_one_sample(std::vector<double> samples,
                         const std::function<double(double)>& cdf,
                         const std::string& name, double threshold) {
  if (samples.empty()) throw std::domain_error("ks_one_sample: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  TestResult r;
  r.name = name;
  r.statistic = d;
  r.p_value = kolmogorov_q(std::sqrt(n) * d);
  r.threshold = threshold;
  r.pass = r.p_value >= threshold;
  r.n_samples = samples.size();
  return r;
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                         const std::string& name, double threshold) {
  if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    double v;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j]))
      v = a[i];
    else
      v = b[j];
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  const double neff = na * nb / (na + nb);
  TestResult r;
  r.name = name;
  r.statistic = d;
  r.p_value = kolmogorov_q(std::sqrt(neff) * d);
  r.threshold = threshold;
  r.pass = r.p_value >= threshold;
  r.n_samples = a.size() + b.size();
  return r;
}

TestResult chi_square(std::span<const std::size_t> observed,
                      std::span<const double> probs, const std::string& name,
                      double threshold) {
  if (observed.size() != probs.size() || observed.empty())
    throw std::invalid_argument("chi_square: observed/probs size mismatch");
  const double psum = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::fabs(psum - 1.0) > 1e-9)
    throw std::invalid_argument("chi_square: probabilities must sum to 1");
  const double n = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::size_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probs[i];
    if (expected < 5.0)
      throw std::invalid_argument(
          "chi_square: expected cell count below 5; pool cells first");
    const double diff = static_cast<double>(observed[i]) - expected;
    stat += diff * diff / expected;
  }
  TestResult r;
  r.name = name;
  r.statistic = stat;
  r.p_value = chi_square_upper(static_cast<double>(observed.size() - 1), stat);
  r.threshold = threshold;
  r.pass = r.p_value >= threshold;
  r.n_samples = static_cast<std::size_t>(n);
  return r;
}

TestResult chi_square_homogeneity(std::span<const std::size_t> a,
                                  std::span<const std::size_t> b,
                                  const std::string& name, double threshold) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("chi_square_homogeneity: size mismatch");
  const double na = static_cast<double>(
      std::accumulate(a.begin(), a.end(), std::size_t{0}));
  const double nb = static_cast<double>(
      std::accumulate(b.begin(), b.end(), std::size_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double pool = static_cast<double>(a[i] + b[i]) / (na + nb);
    const double ea = na * pool, eb = nb * pool;
    if (ea < 5.0 || eb < 5.0)
      throw std::invalid_argument(
          "chi_square_homogeneity: expected cell count below 5; pool first");
    const double da = a[i] - ea, db = b[i] - eb;
    stat += da * da / ea + db * db / eb;
  }
  TestResult r;
  r.name = name;
  r.statistic = stat;
  r.p_value = chi_square_upper(static_cast<double>(a.size() - 1), stat);
  r.threshold = threshold;
  r.pass = r.p_value >= threshold;
  r.n_samples = static_cast<std::size_t>(na + nb);
  return r;
}

namespace {

void enumerate_rec(int n, int label, std::vector<std::vector<int>>& blocks,
                   std::vector<SetPartition>& out) {
  if (label > n) {
    SetPartition p;
    p.lo = 1;
    p.blocks = blocks;
    out.push_back(std::move(p));
    return;
  }
  for (auto& b : blocks) {
    b.push_back(label);
    enumerate_rec(n, label + 1, blocks, out);
    b.pop_back();
  }
  blocks.push_back({label});
  enumerate_rec(n, label + 1, blocks, out);
  blocks.pop_back();
}

void oracle_rec(const Params& params, int n, int m,
                std::vector<int>& sizes, std::vector<int>& rgs, double prob,
                std::map<std::vector<int>, double>& out) {
  if (m == n) {
    out[rgs] += prob;
    return;
  }
  // customer m+1 with m seated at k tables
  const int k = static_cast<int>(sizes.size());
  const double denom = m + params.theta;
  for (int i = 0; i < k; ++i) {
    const double p = (sizes[i] - params.alpha) / denom;
    sizes[i] += 1;
    rgs.push_back(i);
    oracle_rec(params, n, m + 1, sizes, rgs, prob * p, out);
    rgs.pop_back();
    sizes[i] -= 1;
  }
  const double pnew = (params.theta + k * params.alpha) / denom;
  sizes.push_back(1);
  rgs.push_back(k);
  oracle_rec(params, n, m + 1, sizes, rgs, prob * pnew, out);
  rgs.pop_back();
  sizes.pop_back();
}

}  // namespace

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 1 || n > 12)
    throw std::length_error("enumerate_set_partitions: n must lie in [1,12]");
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks{{1}};
  enumerate_rec(n, 2, blocks, out);
  return out;
}

std::map<std::vector<int>, double> crp_seating_oracle(const Params& params, int n) {
  if (n < 1 || n > 8)
    throw std::length_error("crp_seating_oracle: n must lie in [1,8]");
  std::map<std::vector<int>, double> out;
  std::vector<int> sizes{1};
  std::vector<int> rgs{0};
  oracle_rec(params, n, 1, sizes, rgs, 1.0, out);
  return out;
}

std::vector<int> restricted_growth(const SetPartition& p) {
  const int n = p.label_count();
  std::vector<int> rgs(n, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int label : p.blocks[b]) rgs[label - p.lo] = static_cast<int>(b);
  return rgs;
}

}  // namespace pdcf
