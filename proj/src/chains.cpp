#include "pdcf/chains.hpp"

#include <stdexcept>

namespace pdcf {

ChainTrajectory frag_chain(const Params& params, const MassPartition& x0,
                           std::size_t steps, RngStream& rng,
                           const Truncation& trunc, KeepStates keep) {
  ChainTrajectory t;
  t.params = params;
  t.states.push_back(x0);
  for (std::size_t i = 0; i < steps; ++i) {
    FragResult r = frag(params.alpha, t.states.back(), rng, trunc);
    t.witnesses.emplace_back(std::move(r.witness));
    if (keep == KeepStates::all || t.states.size() == 1)
      t.states.push_back(std::move(r.partition));
    else
      t.states.back() = std::move(r.partition);
  }
  return t;
}

PoissonPath poissonized_path(const Params& params, const MassPartition& x0,
                             double rate, double t_max, RngStream& rng,
                             const Truncation& trunc) {
  if (!(rate > 0.0) || !(t_max > 0.0))
    throw std::domain_error("poissonized_path: rate and t_max must be positive");
  PoissonPath p;
  p.rate = rate;
  double t = 0.0;
  for (;;) {
    t += rng.exponential() / rate;
    if (t > t_max) break;
    p.jump_times.push_back(t);
  }
  p.trajectory = frag_chain(params, x0, p.jump_times.size(), rng, trunc);
  return p;
}

ChainTrajectory coag_chain(const Params& params, const MassPartition& y_end,
                           std::size_t steps, RngStream& rng, KeepStates keep) {
  if (steps == 0) throw std::domain_error("coag_chain: steps must be positive");
  ChainTrajectory t;
  t.params = params;
  t.states.assign(keep == KeepStates::all ? steps + 1 : 2, MassPartition());
  MassPartition cur = y_end;
  if (keep == KeepStates::all) t.states[steps] = y_end;
  else t.states[1] = y_end;
  for (std::size_t level = steps; level-- > 0;) {
    CoagResult r = coag(Params(params.alpha, params.theta + static_cast<double>(level)),
                        cur, rng);
    cur = std::move(r.partition);
    t.witnesses.emplace_back(std::move(r.witness));
    if (keep == KeepStates::all) t.states[level] = cur;
  }
  if (keep == KeepStates::final_only) t.states[0] = std::move(cur);
  return t;
}

}  // namespace pdcf
