#include "pdcf/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pdcf/chains.hpp"
#include "pdcf/io.hpp"
#include "pdcf/operators.hpp"
#include "pdcf/rectree.hpp"
#include "pdcf/samplers.hpp"
#include "pdcf/special.hpp"
#include "pdcf/stickmc.hpp"

namespace pdcf {

namespace {

constexpr std::uint64_t kStreamBlock = 1ull << 32;

RngStream stream_for(const SuiteOptions& opt, std::uint64_t test_no,
                     std::uint64_t replica) {
  return RngStream(opt.seed, test_no * kStreamBlock + replica);
}

std::function<double(double)> beta_cdf(double a, double b) {
  return [a, b](double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return reg_inc_beta(a, b, x);
  };
}

std::function<double(double)> gamma_cdf(double shape, double rate) {
  return [shape, rate](double x) {
    if (x <= 0.0) return 0.0;
    return reg_inc_gamma_lower(shape, rate * x);
  };
}

// Two-sided z test for a sample mean; 3-sigma threshold.
TestResult mean_z_test(const std::string& name, const std::vector<double>& xs,
                       double target) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size() - 1);
  const double z =
      (mean - target) / std::sqrt(var / static_cast<double>(xs.size()));
  TestResult r;
  r.name = name;
  r.statistic = z;
  r.p_value = std::erfc(std::fabs(z) / std::sqrt(2.0));
  r.threshold = 0.0027;  // 3 sigma
  r.pass = r.p_value >= r.threshold;
  r.n_samples = xs.size();
  return r;
}

TestResult exact_check(const std::string& name, double discrepancy, double tol) {
  TestResult r;
  r.name = name;
  r.statistic = discrepancy;
  r.p_value = discrepancy <= tol ? 1.0 : 0.0;
  r.threshold = 0.5;
  r.pass = discrepancy <= tol;
  r.n_samples = 0;
  return r;
}

// Truncation policy for the subordinator sampler: the eps target is
// reachable quickly for alpha = 0 (jump sizes decay exponentially) but the
// jump count to a fixed relative tail grows like eps^(-alpha/(1-alpha)) for
// alpha > 0, so a looser eps and a hard cap are used there.  The headline
// statistics (total mass, largest atom, size-biased pick) are insensitive
// to the cut: the tail estimate concentrates around the true tail mass.
Truncation subordinator_trunc(double alpha) {
  if (alpha == 0.0) return Truncation{1e-8, 100000};
  if (alpha <= 0.6) return Truncation{3e-3, 100000};
  return Truncation{3e-3, 2048};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "sb-marginal", "crp-oracle", "subordinator", "thm31-frag", "thm31-coag",
      "chain",       "pitman",     "tree-branch",  "tree-chain", "urn",
      "stage"};
  return names;
}

namespace {

SuiteReport make_report(const std::string& name, const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = name;
  r.params = opt.params;
  r.seed = opt.seed;
  return r;
}

void finish(SuiteReport& r) {
  r.pass = std::all_of(r.tests.begin(), r.tests.end(),
                       [](const TestResult& t) { return t.pass; });
}

SuiteReport suite_sb_marginal(const SuiteOptions& opt) {
  SuiteReport rep = make_report("sb-marginal", opt);
  const Params& p = opt.params;
  const Truncation cheap{0.25, 2};
  std::vector<double> first;
  first.reserve(opt.samples);
  for (std::size_t r = 0; r < opt.samples; ++r) {
    RngStream g = stream_for(opt, 0, r);
    first.push_back(gem_sticks(p, cheap, g).weights.at(0));
  }
  rep.tests.push_back(ks_one_sample(first,
                                    beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                                    "first-stick-ks", opt.level));
  rep.tests.push_back(mean_z_test("first-stick-mean", first,
                                  (1.0 - p.alpha) / (1.0 + p.theta)));
  finish(rep);
  return rep;
}

// Pools cells with small expectation into one bucket, smallest first.
void chi_square_pooled(SuiteReport& rep, std::vector<std::size_t> observed,
                       std::vector<double> probs, const std::string& name,
                       double level) {
  const double n = 0.0 + static_cast<double>(std::accumulate(
                             observed.begin(), observed.end(), std::size_t{0}));
  std::vector<std::size_t> order(observed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return probs[a] < probs[b]; });
  std::vector<std::size_t> obs;
  std::vector<double> pr;
  std::size_t pooled_count = 0;
  double pooled_prob = 0.0;
  for (std::size_t k : order) {
    if (n * (pooled_prob + probs[k]) < 5.0 || pooled_prob == 0.0) {
      pooled_prob += probs[k];
      pooled_count += observed[k];
    } else {
      obs.push_back(observed[k]);
      pr.push_back(probs[k]);
    }
  }
  if (pooled_prob > 0.0) {
    obs.push_back(pooled_count);
    pr.push_back(pooled_prob);
  }
  rep.tests.push_back(chi_square(obs, pr, name, level));
}

SuiteReport suite_crp_oracle(const SuiteOptions& opt) {
  SuiteReport rep = make_report("crp-oracle", opt);
  const Params& p = opt.params;
  const int n = 4;
  const auto parts = enumerate_set_partitions(n);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<double> probs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    index[restricted_growth(parts[i])] = i;
    probs.push_back(crp_exact_prob(p, parts[i]));
  }

  std::vector<std::size_t> crp_counts(parts.size(), 0);
  std::vector<std::size_t> branching_counts(parts.size(), 0);
  for (std::size_t r = 0; r < opt.samples; ++r) {
    RngStream g1 = stream_for(opt, 0, r);
    RngStream g2 = stream_for(opt, 1, r);
    crp_counts[index.at(restricted_growth(crp_sample(p, n, g1)))] += 1;
    branching_counts[index.at(restricted_growth(branching_sample(p, n, g2)))] += 1;
  }
  chi_square_pooled(rep, crp_counts, probs, "crp-vs-exact-chi2", opt.level);
  chi_square_pooled(rep, branching_counts, probs, "branching-vs-exact-chi2",
                    opt.level);

  // decision-tree oracle vs transition-product probabilities, n <= 6
  double max_diff = 0.0, total_gap = 0.0;
  for (int m = 1; m <= 6; ++m) {
    const auto oracle = crp_seating_oracle(p, m);
    double total = 0.0;
    for (const auto& q : enumerate_set_partitions(m)) {
      const double a = oracle.at(restricted_growth(q));
      const double b = crp_exact_prob(p, q);
      max_diff = std::max(max_diff, std::fabs(a - b));
      total += a;
    }
    total_gap = std::max(total_gap, std::fabs(total - 1.0));
  }
  rep.tests.push_back(exact_check("oracle-vs-product", max_diff, 1e-12));
  rep.tests.push_back(exact_check("oracle-total-mass", total_gap, 1e-12));
  finish(rep);
  return rep;
}

SuiteReport suite_subordinator(const SuiteOptions& opt) {
  const Params& p = opt.params;
  if (!(p.theta > 0.0))
    throw std::invalid_argument(
        "subordinator suite requires theta > 0 (no subordinator form otherwise)");
  SuiteReport rep = make_report("subordinator", opt);
  const std::size_t n = std::min<std::size_t>(opt.samples, 10000);
  const Truncation strunc = subordinator_trunc(p.alpha);
  const Truncation ptrunc{1e-8, 4096};

  std::vector<double> total_mass, sub_largest, pd_largest, picks;
  total_mass.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    RngStream g = stream_for(opt, 0, r);
    const SubordinatorResult s = subordinator_pd(p, strunc, g);
    total_mass.push_back(s.sample.total_mass);
    sub_largest.push_back(s.partition.atom(0));
    // exact size-biased pick: a tail hit resolves to a conditional small jump
    double u = g.uniform01();
    const PickIndex idx = size_biased_index(s.partition, u);
    if (idx) {
      picks.push_back(s.partition.atom(*idx));
    } else {
      const double c = s.sample.ranked_jumps.back();
      double jump;
      if (p.alpha == 0.0)
        jump = -std::log1p(-g.uniform01() * (-std::expm1(-c)));
      else
        jump = inv_reg_inc_gamma_lower(1.0 - p.alpha, g.uniform01(), c);
      picks.push_back(jump / s.sample.total_mass);
    }
    RngStream g2 = stream_for(opt, 1, r);
    pd_largest.push_back(pd_sample(p, ptrunc, g2).atom(0));
  }
  rep.tests.push_back(ks_one_sample(total_mass, gamma_cdf(p.theta, 1.0),
                                    "total-mass-vs-gamma-ks", opt.level));
  rep.tests.push_back(ks_two_sample(sub_largest, pd_largest,
                                    "largest-atom-vs-sticks-ks2", opt.level));
  rep.tests.push_back(ks_one_sample(picks,
                                    beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                                    "size-biased-pick-ks", opt.level));
  finish(rep);
  return rep;
}

SuiteReport suite_thm31_frag(const SuiteOptions& opt) {
  SuiteReport rep = make_report("thm31-frag", opt);
  const Params& p = opt.params;
  std::vector<double> exact_picks;
  exact_picks.reserve(opt.samples);
  for (std::size_t r = 0; r < opt.samples; ++r) {
    RngStream g = stream_for(opt, 0, r);
    StickMixture m = StickMixture::pd(p);
    m.frag_step(p.alpha, g);
    exact_picks.push_back(m.pick(g, false));
  }
  rep.tests.push_back(
      ks_one_sample(exact_picks, beta_cdf(1.0 - p.alpha, p.theta + 1.0 + p.alpha),
                    "frag-pick-ks", opt.level));

  if (p.alpha <= 0.6) {
    // the truncated-operator pipeline must agree with the exact one
    const std::size_t n2 = std::min<std::size_t>(opt.samples, 20000);
    const Truncation trunc{1e-8, 4096};
    std::vector<double> plain;
    plain.reserve(n2);
    for (std::size_t r = 0; r < n2; ++r) {
      RngStream g = stream_for(opt, 1, r);
      const MassPartition x = pd_sample(p, trunc, g);
      const FragResult f = frag(p.alpha, x, g, trunc);
      double u = g.uniform01();
      PickIndex idx = size_biased_index(f.partition, u);
      if (!idx) idx = f.partition.size() - 1;
      plain.push_back(f.partition.atom(*idx));
    }
    std::vector<double> sub(exact_picks.begin(),
                            exact_picks.begin() + std::min(n2, exact_picks.size()));
    rep.tests.push_back(
        ks_two_sample(plain, sub, "frag-operator-vs-exact-ks2", opt.level));
  }
  finish(rep);
  return rep;
}

SuiteReport suite_thm31_coag(const SuiteOptions& opt) {
  SuiteReport rep = make_report("thm31-coag", opt);
  const Params& p = opt.params;
  const Params input(p.alpha, p.theta + 1.0);
  const std::size_t depth = 512;
  std::vector<double> exact_picks, bdraws;
  exact_picks.reserve(opt.samples);
  for (std::size_t r = 0; r < opt.samples; ++r) {
    RngStream g = stream_for(opt, 0, r);
    StickMixture m = StickMixture::pd(input);
    m.materialize(depth, g);
    bdraws.push_back(m.coag_step(p, g));
    exact_picks.push_back(m.pick(g, false));
  }
  rep.tests.push_back(ks_one_sample(exact_picks,
                                    beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                                    "coag-pick-ks", opt.level));
  if (p.alpha > 0.0) {
    rep.tests.push_back(ks_one_sample(
        bdraws,
        beta_cdf((1.0 - p.alpha) / p.alpha, (p.theta + p.alpha) / p.alpha),
        "merge-proportion-ks", opt.level));
  } else {
    double gap = 0.0;
    for (double b : bdraws) gap = std::max(gap, std::fabs(b - 1.0 / (p.theta + 1.0)));
    rep.tests.push_back(exact_check("merge-proportion-constant", gap, 1e-15));
  }

  if (p.alpha <= 0.6) {
    const std::size_t n2 = std::min<std::size_t>(opt.samples, 20000);
    const Truncation trunc{1e-8, 4096};
    std::vector<double> plain;
    plain.reserve(n2);
    for (std::size_t r = 0; r < n2; ++r) {
      RngStream g = stream_for(opt, 1, r);
      const MassPartition y = pd_sample(input, trunc, g);
      const CoagResult c = coag(p, y, g);
      double u = g.uniform01();
      PickIndex idx = size_biased_index(c.partition, u);
      if (!idx) idx = c.partition.size() - 1;
      plain.push_back(c.partition.atom(*idx));
    }
    std::vector<double> sub(exact_picks.begin(),
                            exact_picks.begin() + std::min(n2, exact_picks.size()));
    rep.tests.push_back(
        ks_two_sample(plain, sub, "coag-operator-vs-exact-ks2", opt.level));
  }
  finish(rep);
  return rep;
}

SuiteReport suite_chain(const SuiteOptions& opt) {
  SuiteReport rep = make_report("chain", opt);
  const Params& p = opt.params;
  const std::size_t n = std::min<std::size_t>(opt.samples, 10000);

  std::vector<double> marg, round;
  for (std::size_t r = 0; r < n; ++r) {
    RngStream g = stream_for(opt, 0, r);
    StickMixture m = StickMixture::pd(p);
    for (int i = 0; i < 3; ++i) m.frag_step(p.alpha, g);
    marg.push_back(m.pick(g, false));

    RngStream g2 = stream_for(opt, 1, r);
    StickMixture m2 = StickMixture::pd(p);
    m2.frag_step(p.alpha, g2);
    m2.frag_step(p.alpha, g2);
    m2.materialize(256, g2);
    m2.coag_step(Params(p.alpha, p.theta + 1.0), g2);
    m2.coag_step(p, g2);
    round.push_back(m2.pick(g2, false));
  }
  rep.tests.push_back(
      ks_one_sample(marg, beta_cdf(1.0 - p.alpha, p.theta + 3.0 + p.alpha),
                    "three-step-pick-ks", opt.level));
  rep.tests.push_back(
      ks_one_sample(round, beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                    "roundtrip-pick-ks", opt.level));

  // Poissonized clock: jump count is Poisson(rate * t_max)
  const double rate = 1.0, t_max = 3.0;
  std::vector<double> counts;
  std::vector<double> splitter_first;
  const Truncation trunc{1e-6, 2048};
  const std::size_t paths = std::min<std::size_t>(n, 4000);
  for (std::size_t r = 0; r < paths; ++r) {
    RngStream g = stream_for(opt, 2, r);
    const MassPartition x0 = pd_sample(p, trunc, g);
    const PoissonPath path = poissonized_path(p, x0, rate, t_max, g, trunc);
    counts.push_back(static_cast<double>(path.jump_times.size()));
    for (const auto& w : path.trajectory.witnesses)
      splitter_first.push_back(std::get<FragWitness>(w).splitter.weights.at(0));
  }
  rep.tests.push_back(mean_z_test("poisson-jump-count", counts, rate * t_max));
  rep.tests.push_back(ks_one_sample(splitter_first, beta_cdf(1.0 - p.alpha, 1.0),
                                    "splitter-first-stick-ks", opt.level));
  finish(rep);
  return rep;
}

SuiteReport suite_pitman(const SuiteOptions& opt) {
  SuiteReport rep = make_report("pitman", opt);
  const Params& p = opt.params;
  const double beta = opt.pitman_beta;
  if (!(p.alpha > 0.0))
    throw std::invalid_argument("pitman suite requires alpha > 0");
  const double ab = p.alpha * beta;
  const std::size_t n = std::min<std::size_t>(opt.samples, 10000);

  // FRAG side: a size-biased pick from the split of PD(ab, theta) by
  // independent PD(alpha, -ab) vectors is the picked atom times a first
  // stick of the splitter.
  std::vector<double> frag_picks;
  for (std::size_t r = 0; r < n; ++r) {
    RngStream g = stream_for(opt, 0, r);
    StickMixture m = StickMixture::pd(Params(ab, p.theta));
    const double atom = m.pick(g, false);
    const double piece = sample_beta(1.0 - p.alpha, p.alpha - ab, g);
    frag_picks.push_back(atom * piece);
  }
  rep.tests.push_back(ks_one_sample(frag_picks,
                                    beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                                    "pitman-frag-pick-ks", opt.level));

  // COAG side: the group containing a size-biased pick from PD(alpha,
  // theta) has the picked atom plus a Bernoulli(Q) share of the rest,
  // where Q is the first stick of the interval vector.
  std::vector<double> coag_picks;
  for (std::size_t r = 0; r < n; ++r) {
    RngStream g = stream_for(opt, 1, r);
    StickMixture m = StickMixture::pd(p);
    m.materialize(2048, g);
    const double atom = m.pick(g, true);
    const double q = sample_beta(1.0 - beta, p.theta / p.alpha + beta, g);
    double v = atom;
    for (double a : m.atoms())
      if (g.bernoulli(q)) v += a;
    for (const auto& t : m.tails()) v += q * t.weight();
    coag_picks.push_back(v);
  }
  rep.tests.push_back(ks_one_sample(coag_picks,
                                    beta_cdf(1.0 - ab, p.theta + ab),
                                    "pitman-coag-pick-ks", opt.level));

  // operator-level cross-check on a small stored partition
  if (ab <= 0.45) {
    const std::size_t n2 = std::min<std::size_t>(n, 2000);
    const Truncation in_trunc{1e-12, 64};
    const Truncation split_trunc{5e-3, 100000};
    std::vector<double> op_picks;
    for (std::size_t r = 0; r < n2; ++r) {
      RngStream g = stream_for(opt, 2, r);
      const MassPartition x = pd_sample(Params(ab, p.theta), in_trunc, g);
      const MassPartition y = pitman_frag(x, p.alpha, beta, g, split_trunc);
      double u = g.uniform01();
      PickIndex idx = size_biased_index(y, u);
      if (!idx) idx = y.size() - 1;
      op_picks.push_back(y.atom(*idx));
    }
    std::vector<double> sub(frag_picks.begin(), frag_picks.begin() + n2);
    rep.tests.push_back(ks_two_sample(op_picks, sub,
                                      "pitman-frag-operator-vs-exact-ks2",
                                      opt.level));
  }
  finish(rep);
  return rep;
}

SuiteReport suite_tree_branch(const SuiteOptions& opt) {
  SuiteReport rep = make_report("tree-branch", opt);
  const Params& p = opt.params;
  const int n = opt.tree_size;
  const int reps = opt.tree_replicas;
  std::vector<double> b1, b2;
  for (int r = 0; r < reps; ++r) {
    RngStream g = stream_for(opt, 0, static_cast<std::uint64_t>(r));
    const RecursiveTree t = grow(p, n, g);
    b1.push_back(static_cast<double>(branch_size(t, 1)) / n);
    b2.push_back(static_cast<double>(branch_size(t, 2)) / n);
  }
  rep.tests.push_back(ks_one_sample(b1, beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                                    "branch-1-ks", opt.level));
  rep.tests.push_back(
      ks_one_sample(b2, beta_cdf(1.0 - p.alpha, p.theta + 1.0 + p.alpha),
                    "branch-2-ks", opt.level));
  // stability of the finite-n approximation at doubled n
  std::vector<double> b1d;
  for (int r = 0; r < reps / 2; ++r) {
    RngStream g = stream_for(opt, 1, static_cast<std::uint64_t>(r));
    const RecursiveTree t = grow(p, 2 * n, g);
    b1d.push_back(static_cast<double>(branch_size(t, 1)) / (2.0 * n));
  }
  rep.tests.push_back(ks_one_sample(b1d,
                                    beta_cdf(1.0 - p.alpha, p.theta + p.alpha),
                                    "branch-1-doubled-n-ks", opt.level));
  finish(rep);
  return rep;
}

SuiteReport suite_tree_chain(const SuiteOptions& opt) {
  SuiteReport rep = make_report("tree-chain", opt);
  const Params& p = opt.params;
  const int n = opt.tree_size;
  const int reps = opt.tree_replicas;
  const Truncation trunc{1e-8, 4096};

  std::vector<double> tree_largest, chain_largest;
  for (int r = 0; r < reps; ++r) {
    RngStream g = stream_for(opt, 0, static_cast<std::uint64_t>(r));
    const RecursiveTree t = grow(p, n, g);
    const BlockFrequencies f = empirical_frequencies(strip(t, 1));
    tree_largest.push_back(*std::max_element(f.freqs.begin(), f.freqs.end()));

    RngStream g2 = stream_for(opt, 1, static_cast<std::uint64_t>(r));
    const MassPartition x0 = pd_sample(p, trunc, g2);
    const ChainTrajectory c = frag_chain(p, x0, 1, g2, trunc);
    chain_largest.push_back(c.states[1].atom(0));
  }
  rep.tests.push_back(ks_two_sample(tree_largest, chain_largest,
                                    "level1-largest-vs-chain-ks2", opt.level));

  // the stripped root partition has the seating-process law
  const auto parts = enumerate_set_partitions(4);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<double> probs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    index[restricted_growth(parts[i])] = i;
    probs.push_back(crp_exact_prob(p, parts[i]));
  }
  std::vector<std::size_t> counts(parts.size(), 0);
  const std::size_t crp_reps = std::min<std::size_t>(opt.samples, 100000);
  for (std::size_t r = 0; r < crp_reps; ++r) {
    RngStream g = stream_for(opt, 2, r);
    counts[index.at(restricted_growth(strip(grow(p, 4, g), 0)))] += 1;
  }
  chi_square_pooled(rep, counts, probs, "strip0-vs-crp-chi2", opt.level);
  finish(rep);
  return rep;
}

SuiteReport suite_urn(const SuiteOptions& opt) {
  SuiteReport rep = make_report("urn", opt);
  const Params& p = opt.params;
  for (int i = 0; i <= 1; ++i) {
    std::vector<double> fracs;
    for (int r = 0; r < opt.urn_replicas; ++r) {
      RngStream g = stream_for(opt, static_cast<std::uint64_t>(i),
                               static_cast<std::uint64_t>(r));
      const auto ind = urn_indicators(p, i, opt.urn_steps, g);
      double ones = 0.0;
      for (auto b : ind) ones += b;
      fracs.push_back(ones / static_cast<double>(opt.urn_steps));
    }
    const std::string tag = "urn-fraction-i" + std::to_string(i);
    if (p.alpha > 0.0) {
      rep.tests.push_back(ks_one_sample(
          fracs,
          beta_cdf((1.0 - p.alpha) / p.alpha, (p.theta + i + p.alpha) / p.alpha),
          tag + "-ks", opt.level));
    } else {
      rep.tests.push_back(
          mean_z_test(tag + "-mean", fracs, 1.0 / (p.theta + i + 1.0)));
    }
  }

  // joint law of (coagulated level-1 partition, level-1 partition) at n=5
  const int n = 5;
  const std::size_t reps = std::min<std::size_t>(opt.samples, 100000);
  std::map<std::string, std::pair<std::size_t, std::size_t>> pair_counts;
  auto encode = [](const SetPartition& a, const SetPartition& b) {
    std::string s;
    for (int v : restricted_growth(a)) s += static_cast<char>('0' + v);
    s += '|';
    for (int v : restricted_growth(b)) s += static_cast<char>('0' + v);
    return s;
  };
  for (std::size_t r = 0; r < reps; ++r) {
    RngStream g = stream_for(opt, 2, r);
    const RecursiveTree t = grow(p, n, g);
    pair_counts[encode(strip(t, 0), strip(t, 1))].first += 1;

    RngStream g2 = stream_for(opt, 3, r);
    const RecursiveTree t2 = grow(p, n, g2);
    const SetPartition b1 = strip(t2, 1);
    const auto ind = urn_indicators(p, 0, static_cast<int>(b1.blocks.size()), g2);
    pair_counts[encode(urn_coagulate(b1, ind, 0), b1)].second += 1;
  }
  std::vector<std::size_t> direct, urned;
  std::size_t pool_a = 0, pool_b = 0;
  for (const auto& [key, counts] : pair_counts) {
    if (counts.first + counts.second < 25) {
      pool_a += counts.first;
      pool_b += counts.second;
    } else {
      direct.push_back(counts.first);
      urned.push_back(counts.second);
    }
  }
  if (pool_a + pool_b >= 25) {
    direct.push_back(pool_a);
    urned.push_back(pool_b);
  }
  rep.tests.push_back(chi_square_homogeneity(direct, urned,
                                             "urn-coagulation-joint-chi2",
                                             opt.level));
  finish(rep);
  return rep;
}

SuiteReport suite_stage(const SuiteOptions& opt) {
  SuiteReport rep = make_report("stage", opt);
  const Params& p = opt.params;
  const std::size_t n = std::min<std::size_t>(opt.samples, 10000);
  std::vector<std::vector<double>> w(3);
  for (std::size_t r = 0; r < n; ++r) {
    RngStream g = stream_for(opt, 0, r);
    const StageTree t = stage_tree(p, 3, 1e-2, g);
    for (int i = 0; i < 3; ++i) w[i].push_back(t.vertex_weight.at(i + 1));
  }
  for (int i = 0; i < 3; ++i) {
    rep.tests.push_back(ks_one_sample(
        w[i], beta_cdf(1.0 - p.alpha, p.theta + i + p.alpha),
        "stage-weight-" + std::to_string(i + 1) + "-ks", opt.level));
  }
  finish(rep);
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "sb-marginal") return suite_sb_marginal(opt);
  if (name == "crp-oracle") return suite_crp_oracle(opt);
  if (name == "subordinator") return suite_subordinator(opt);
  if (name == "thm31-frag") return suite_thm31_frag(opt);
  if (name == "thm31-coag") return suite_thm31_coag(opt);
  if (name == "chain") return suite_chain(opt);
  if (name == "pitman") return suite_pitman(opt);
  if (name == "tree-branch") return suite_tree_branch(opt);
  if (name == "tree-chain") return suite_tree_chain(opt);
  if (name == "urn") return suite_urn(opt);
  if (name == "stage") return suite_stage(opt);
  if (name == "all") {
    SuiteReport rep = make_report("all", opt);
    for (const auto& s : suite_names()) {
      if (s == "subordinator" && !(opt.params.theta > 0.0)) {
        TestResult skip;
        skip.name = "subordinator-skipped-theta-nonpositive";
        rep.tests.push_back(skip);
        continue;
      }
      if (s == "pitman" && !(opt.params.alpha > 0.0)) {
        TestResult skip;
        skip.name = "pitman-skipped-alpha-zero";
        rep.tests.push_back(skip);
        continue;
      }
      SuiteReport sub = run_suite(s, opt);
      for (auto& t : sub.tests) {
        t.name = s + "/" + t.name;
        rep.tests.push_back(std::move(t));
      }
    }
    finish(rep);
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& t : r.tests) tests.push_back(to_json(t));
  return nlohmann::json{{"suite", r.suite},
                        {"params", {{"alpha", r.params.alpha}, {"theta", r.params.theta}}},
                        {"seed", r.seed},
                        {"tests", tests},
                        {"pass", r.pass}};
}

}  // namespace pdcf
