#ifndef PDCF_SAMPLERS_HPP
#define PDCF_SAMPLERS_HPP

#include <cstddef>

#include "pdcf/partition.hpp"
#include "pdcf/rng.hpp"

namespace pdcf {

struct Truncation {
  double eps = 1e-8;
  std::size_t max_atoms = 100000;
};

// Ranked jumps of the subordinator construction together with the raw
// quantities the representation is stated in.
struct SubordinatorSample {
  std::vector<double> ranked_jumps;  // strictly decreasing
  double total_mass = 0.0;           // drawn jumps + estimated tail
  double residual_mass = 0.0;        // estimated mass of undrawn jumps
  double horizon = 0.0;              // theta for alpha = 0, the drawn S otherwise
  bool truncated = false;            // max_atoms hit before the eps target
};

struct SubordinatorResult {
  MassPartition partition;
  SubordinatorSample sample;
};

// Stick-breaking weights: B_n ~ Beta(1-alpha, theta + n alpha), stopping
// when the leftover product drops below trunc.eps or max_atoms is hit
// (the latter sets the truncated flag).
SizeBiasedWeights gem_sticks(const Params& params, const Truncation& trunc,
                             RngStream& rng);

// Ranked stick-breaking weights.
MassPartition pd_sample(const Params& params, const Truncation& trunc,
                        RngStream& rng);

// Seating process partition of {1..n}: a new block opens with probability
// (theta + k alpha)/(m + theta), an existing block of size c is joined
// with probability (c - alpha)/(m + theta).
SetPartition crp_sample(const Params& params, int n, RngStream& rng);

// Exact probability that the seating process produces p (partition of
// {1..n}, n <= 12), as the product of transition probabilities in label
// order.
double crp_exact_prob(const Params& params, const SetPartition& p);

// Normalized ranked jumps of a gamma subordinator on [0,theta] (alpha = 0)
// or of the subordinator with intensity alpha x^(-alpha-1) e^-x dx on
// [0,S], S ~ Gamma(theta/alpha, rate Gamma(1-alpha)) (alpha > 0).  Jumps
// are generated largest-first by inverting the tail mass at unit-rate
// arrival times, stopping when the estimated undrawn mass falls below
// trunc.eps times the drawn mass.  Requires theta > 0.
SubordinatorResult subordinator_pd(const Params& params, const Truncation& trunc,
                                   RngStream& rng);

// Two-type branching population grown to n individuals; returns the color
// partition of {1..n}.  Rates: the founder spawns novel children at
// theta + alpha and clones at 1 - alpha; other novel individuals spawn
// novel children at alpha and clones at 1 - alpha; clones spawn clones at
// rate 1.  Clones inherit their parent's color.
SetPartition branching_sample(const Params& params, int n, RngStream& rng);

}  // namespace pdcf

#endif
