#include "pdcf/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdcf {

MassPartition frag_det(const MassPartition& x, std::size_t i,
                       const SizeBiasedWeights& eta) {
  if (i >= x.size()) throw std::domain_error("frag_det: atom index out of range");
  std::vector<double> out;
  out.reserve(x.size() + eta.weights.size());
  const double xi = x.atom(i);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != i) out.push_back(x.atom(j));
  for (double w : eta.weights) out.push_back(xi * w);
  return rank_normalize(out, x.residual() + xi * eta.residual);
}

FragResult frag(double alpha, const MassPartition& x, RngStream& rng,
                const Truncation& trunc) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::domain_error("frag: alpha must lie in [0,1)");
  if (x.size() == 0) throw std::domain_error("frag: no stored atoms to split");

  FragWitness w;
  double u = rng.uniform01();
  PickIndex idx = size_biased_index(x, u);
  if (!idx) {
    // The pick fell in the unrepresented tail; renormalize it over the
    // stored atoms and record the event.
    w.residual_hit = true;
    const double stored = x.stored_mass();
    u = std::min((u - stored) / std::max(1.0 - stored, 1e-300) * stored,
                 stored * (1.0 - 1e-16));
    idx = size_biased_index(x, std::max(u, 0.0));
    if (!idx) idx = x.size() - 1;
  }
  w.chosen_index = idx;
  w.splitter = gem_sticks(Params(alpha, 1.0 - alpha), trunc, rng);
  MassPartition out = frag_det(x, *idx, w.splitter);
  return FragResult{std::move(out), std::move(w)};
}

MassPartition coag_det(const MassPartition& x,
                       std::span<const std::uint8_t> indicators) {
  if (indicators.size() != x.size())
    throw std::domain_error("coag_det: indicator length must match atom count");
  std::vector<double> out;
  out.reserve(x.size() + 1);
  double merged = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (indicators[i]) {
      merged += x.atom(i);
      any = true;
    } else {
      out.push_back(x.atom(i));
    }
  }
  if (any) out.push_back(merged);
  return rank_normalize(out, x.residual());
}

CoagResult coag(const Params& params, const MassPartition& x, RngStream& rng) {
  CoagWitness w;
  if (params.alpha == 0.0)
    w.b = 1.0 / (params.theta + 1.0);
  else
    w.b = sample_beta((1.0 - params.alpha) / params.alpha,
                      (params.theta + params.alpha) / params.alpha, rng);
  w.indicators.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    w.indicators[i] = rng.bernoulli(w.b) ? 1 : 0;
  MassPartition out = coag_det(x, w.indicators);
  return CoagResult{std::move(out), std::move(w)};
}

MassPartition insert_size_biased(const MassPartition& y, double b) {
  if (!(b > 0.0) || !(b < 1.0))
    throw std::domain_error("insert_size_biased: b must lie in (0,1)");
  std::vector<double> out;
  out.reserve(y.size() + 1);
  for (std::size_t i = 0; i < y.size(); ++i) out.push_back((1.0 - b) * y.atom(i));
  out.push_back(b);
  return rank_normalize(out, (1.0 - b) * y.residual());
}

MassPartition pitman_frag(const MassPartition& x, double alpha, double beta,
                          RngStream& rng, const Truncation& trunc) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("pitman_frag: alpha must lie in (0,1)");
  if (!(beta >= 0.0) || !(beta < 1.0))
    throw std::domain_error("pitman_frag: beta must lie in [0,1)");
  const Params split_params(alpha, -alpha * beta);
  std::vector<double> out;
  double residual = x.residual();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const SizeBiasedWeights eta = gem_sticks(split_params, trunc, rng);
    for (double w : eta.weights) out.push_back(x.atom(i) * w);
    residual += x.atom(i) * eta.residual;
  }
  return rank_normalize(out, residual);
}

MassPartition pitman_coag(const MassPartition& y, double beta,
                          double theta_over_alpha, RngStream& rng,
                          const Truncation& trunc) {
  if (!(beta >= 0.0) || !(beta < 1.0))
    throw std::domain_error("pitman_coag: beta must lie in [0,1)");
  if (!(theta_over_alpha > -beta))
    throw std::domain_error("pitman_coag: theta/alpha must exceed -beta");

  std::vector<double> cum;       // cumulative stick ends of the lazy Q draw
  double residual_q = 1.0;       // unconsumed Q mass
  std::size_t n_sticks = 0;
  std::vector<double> groups;

  for (std::size_t j = 0; j < y.size(); ++j) {
    const double u = rng.uniform01();
    while (cum.empty() || u >= cum.back()) {
      if (n_sticks >= trunc.max_atoms)
        throw truncation_error(
            "pitman_coag: stick extension exceeded max_atoms");
      ++n_sticks;
      const double b = sample_beta(
          1.0 - beta, theta_over_alpha + static_cast<double>(n_sticks) * beta,
          rng);
      const double stick = residual_q * b;
      residual_q *= (1.0 - b);
      cum.push_back((cum.empty() ? 0.0 : cum.back()) + stick);
      groups.push_back(0.0);
    }
    const std::size_t g = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    groups[std::min(g, groups.size() - 1)] += y.atom(j);
  }
  return rank_normalize(groups, y.residual());
}

}  // namespace pdcf
