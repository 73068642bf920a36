#ifndef PDCF_OPERATORS_HPP
#define PDCF_OPERATORS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pdcf/partition.hpp"
#include "pdcf/rng.hpp"
#include "pdcf/samplers.hpp"

namespace pdcf {

// Internal randomness of one fragmentation step, kept so tests can check
// the laws of the intermediate draws directly.
struct FragWitness {
  PickIndex chosen_index;      // nullopt when the pick landed in the residual
  SizeBiasedWeights splitter;  // the PD(alpha, 1-alpha) stick draw
  bool residual_hit = false;
};

struct CoagWitness {
  double b = 0.0;                    // merge proportion
  std::vector<std::uint8_t> indicators;  // one per input atom
};

struct FragResult {
  MassPartition partition;
  FragWitness witness;
};

struct CoagResult {
  MassPartition partition;
  CoagWitness witness;
};

// Thrown when a lazily extended stick sequence exceeds its atom budget.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Replaces atom i by the masses atom_i * eta_j; the splitter residual
// times atom_i joins the output residual; result is reranked.
MassPartition frag_det(const MassPartition& x, std::size_t i,
                       const SizeBiasedWeights& eta);

// Splits a size-biased pick by an independent PD(alpha, 1-alpha) stick
// draw.  A pick landing in the residual is renormalized over the stored
// atoms and flagged in the witness.
FragResult frag(double alpha, const MassPartition& x, RngStream& rng,
                const Truncation& trunc = {});

// Merges the atoms with indicator 1 into a single atom and reranks; the
// residual passes through.  An empty selection returns the input.
MassPartition coag_det(const MassPartition& x,
                       std::span<const std::uint8_t> indicators);

// Draws B ~ Beta((1-alpha)/alpha, (theta+alpha)/alpha) (B = 1/(theta+1)
// when alpha = 0) and merges atoms selected i.i.d. Bernoulli(B).
CoagResult coag(const Params& params, const MassPartition& x, RngStream& rng);

// Scales y by (1-b), inserts the atom b, and reranks.
MassPartition insert_size_biased(const MassPartition& y, double b);

// Splits every stored atom by an independent PD(alpha, -alpha*beta) stick
// draw; the input residual passes through unchanged.
MassPartition pitman_frag(const MassPartition& x, double alpha, double beta,
                          RngStream& rng, const Truncation& trunc = {});

// Groups the stored atoms of y by throwing a uniform per atom onto the
// interval partition induced by a lazily extended GEM(beta, theta_over_alpha)
// draw, and sums each group.  Throws truncation_error if the stick
// extension needed to place some uniform exceeds trunc.max_atoms.
MassPartition pitman_coag(const MassPartition& y, double beta,
                          double theta_over_alpha, RngStream& rng,
                          const Truncation& trunc = {});

}  // namespace pdcf

#endif
