#ifndef PDCF_CHAINS_HPP
#define PDCF_CHAINS_HPP

#include <variant>
#include <vector>

#include "pdcf/operators.hpp"

namespace pdcf {

enum class KeepStates { all, final_only };

// A realized fragmentation or coagulation chain.  For fragmentation
// chains states[i] is the step-i state; for coagulation chains states[i]
// is the level-i state (generated downward from states.back()).
struct ChainTrajectory {
  Params params;
  std::vector<MassPartition> states;
  std::vector<std::variant<FragWitness, CoagWitness>> witnesses;
};

struct PoissonPath {
  double rate = 1.0;
  std::vector<double> jump_times;  // strictly increasing, within [0, t_max]
  ChainTrajectory trajectory;
};

// states[i+1] ~ Frag_alpha(states[i]), i = 0..steps-1.
ChainTrajectory frag_chain(const Params& params, const MassPartition& x0,
                           std::size_t steps, RngStream& rng,
                           const Truncation& trunc = {},
                           KeepStates keep = KeepStates::all);

// Poissonized chain Y(t) = X(N(t)) on [0, t_max].
PoissonPath poissonized_path(const Params& params, const MassPartition& x0,
                             double rate, double t_max, RngStream& rng,
                             const Truncation& trunc = {});

// Level-indexed coagulation chain: given the level-`steps` state y_end,
// generates level i from level i+1 by Coag_{alpha, theta+i}, for
// i = steps-1 .. 0.  states[i] is the level-i state.
ChainTrajectory coag_chain(const Params& params, const MassPartition& y_end,
                           std::size_t steps, RngStream& rng,
                           KeepStates keep = KeepStates::all);

}  // namespace pdcf

#endif
