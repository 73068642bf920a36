#include "pdcf/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pdcf/special.hpp"
#include "pdcf/stattest.hpp"

namespace pdcf {

SizeBiasedWeights gem_sticks(const Params& params, const Truncation& trunc,
                             RngStream& rng) {
  if (!(trunc.eps >= 0.0) || !(trunc.eps < 1.0))
    throw std::domain_error("gem_sticks: eps must lie in [0,1)");
  SizeBiasedWeights out;
  out.residual = 1.0;
  std::size_t n = 0;
  while (out.residual >= trunc.eps) {
    if (n >= trunc.max_atoms) {
      out.truncated = true;
      break;
    }
    ++n;
    const double b = sample_beta(1.0 - params.alpha,
                                 params.theta + static_cast<double>(n) * params.alpha,
                                 rng);
    out.weights.push_back(out.residual * b);
    out.residual *= (1.0 - b);
  }
  return out;
}

MassPartition pd_sample(const Params& params, const Truncation& trunc,
                        RngStream& rng) {
  const SizeBiasedWeights w = gem_sticks(params, trunc, rng);
  return rank_normalize(w.weights, w.residual);
}

SetPartition crp_sample(const Params& params, int n, RngStream& rng) {
  if (n < 1) throw std::domain_error("crp_sample: n must be positive");
  SetPartition p;
  p.lo = 1;
  p.blocks.push_back({1});
  std::vector<int> sizes{1};
  for (int m = 1; m < n; ++m) {
    const double denom = m + params.theta;
    const int k = static_cast<int>(sizes.size());
    double u = rng.uniform01() * denom;
    int chosen = k;  // new block unless an existing one absorbs u
    for (int i = 0; i < k; ++i) {
      const double w = sizes[i] - params.alpha;
      if (u < w) {
        chosen = i;
        break;
      }
      u -= w;
    }
    if (chosen == k) {
      p.blocks.push_back({m + 1});
      sizes.push_back(1);
    } else {
      p.blocks[chosen].push_back(m + 1);
      sizes[chosen] += 1;
    }
  }
  return p;
}

double crp_exact_prob(const Params& params, const SetPartition& p) {
  p.validate();
  if (p.lo != 1) throw std::domain_error("crp_exact_prob: labels must start at 1");
  const int n = p.label_count();
  if (n > 12) throw std::length_error("crp_exact_prob: n must not exceed 12");
  const std::vector<int> rgs = restricted_growth(p);
  std::vector<int> sizes;
  double prob = 1.0;
  for (int label = 1; label <= n; ++label) {
    const int block = rgs[label - 1];
    const int m = label - 1;  // customers already seated
    if (label == 1) {
      sizes.push_back(1);
      continue;
    }
    const double denom = m + params.theta;
    if (block == static_cast<int>(sizes.size())) {
      prob *= (params.theta + sizes.size() * params.alpha) / denom;
      sizes.push_back(1);
    } else {
      prob *= (sizes[block] - params.alpha) / denom;
      sizes[block] += 1;
    }
  }
  return prob;
}

SubordinatorResult subordinator_pd(const Params& params, const Truncation& trunc,
                                   RngStream& rng) {
  if (!(params.theta > 0.0))
    throw std::domain_error(
        "subordinator_pd: the subordinator representation requires theta > 0");
  const double alpha = params.alpha;
  double horizon;
  if (alpha == 0.0) {
    horizon = params.theta;
  } else {
    const double rate = std::tgamma(1.0 - alpha);
    horizon = sample_gamma(params.theta / alpha, rate, rng);
  }

  SubordinatorSample s;
  s.horizon = horizon;
  double arrival = 0.0;
  double drawn = 0.0;
  double tail = 0.0;
  for (;;) {
    if (s.ranked_jumps.size() >= trunc.max_atoms) {
      s.truncated = true;
      break;
    }
    arrival += rng.exponential();
    double xi = levy_tail_inverse(alpha, arrival / horizon);
    if (!s.ranked_jumps.empty() && xi >= s.ranked_jumps.back())
      xi = s.ranked_jumps.back() * (1.0 - 1e-15);
    s.ranked_jumps.push_back(xi);
    drawn += xi;
    tail = horizon * levy_small_jump_mass(alpha, xi);
    if (tail < trunc.eps * drawn) break;
  }
  s.residual_mass = tail;
  s.total_mass = drawn + tail;

  std::vector<double> atoms(s.ranked_jumps.size());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    atoms[i] = s.ranked_jumps[i] / s.total_mass;
  return SubordinatorResult{
      rank_normalize(atoms, s.residual_mass / s.total_mass), std::move(s)};
}

SetPartition branching_sample(const Params& params, int n, RngStream& rng) {
  if (n < 1) throw std::domain_error("branching_sample: n must be positive");
  const double alpha = params.alpha;
  // Per-individual birth rates; the time embedding drops out, only the
  // rate-proportional choice of parent and offspring type matters.
  struct Individual {
    double novel_rate;
    double clone_rate;
    int color;
  };
  std::vector<Individual> pop;
  pop.push_back({params.theta + alpha, 1.0 - alpha, 0});
  int next_color = 1;
  while (static_cast<int>(pop.size()) < n) {
    // total birth rate after m individuals is theta + m
    const double total = params.theta + static_cast<double>(pop.size());
    double u = rng.uniform01() * total;
    const std::size_t before = pop.size();
    for (std::size_t i = 0; i < before; ++i) {
      if (u < pop[i].novel_rate) {
        pop.push_back({alpha, 1.0 - alpha, next_color++});
        break;
      }
      u -= pop[i].novel_rate;
      if (u < pop[i].clone_rate) {
        pop.push_back({0.0, 1.0, pop[i].color});
        break;
      }
      u -= pop[i].clone_rate;
    }
    if (pop.size() == before)  // roundoff overshoot past the last rate
      pop.push_back({0.0, 1.0, pop[before - 1].color});
  }
  SetPartition p;
  p.lo = 1;
  std::vector<int> block_of_color(next_color, -1);
  for (int i = 0; i < n; ++i) {
    const int c = pop[i].color;
    if (c >= static_cast<int>(block_of_color.size()))
      block_of_color.resize(c + 1, -1);
    if (block_of_color[c] < 0) {
      block_of_color[c] = static_cast<int>(p.blocks.size());
      p.blocks.push_back({});
    }
    p.blocks[block_of_color[c]].push_back(i + 1);
  }
  return p;
}

}  // namespace pdcf
