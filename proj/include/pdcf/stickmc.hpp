#ifndef PDCF_STICKMC_HPP
#define PDCF_STICKMC_HPP

#include <cstddef>
#include <vector>

#include "pdcf/partition.hpp"
#include "pdcf/rng.hpp"

namespace pdcf {

// The undrawn continuation of a stick-breaking sequence.  Conditional on
// the sticks consumed so far, the remaining mass of a GEM(alpha, theta0)
// draw is scale * GEM(alpha, theta_cur) with theta_cur = theta0 + k alpha,
// so a size-biased pick that lands in the tail is realized exactly by
// drawing one more stick.  `thin` tracks the surviving fraction after
// Bernoulli coagulation thinning; it scales selection probability but not
// atom values.
struct GemTail {
  double scale = 1.0;  // undrawn mass of the underlying sequence
  double thin = 1.0;   // surviving fraction under coagulation thinning
  double alpha = 0.0;
  double theta_cur = 1.0;

  double weight() const { return scale * thin; }
  // Draws the next stick; returns the new atom mass and advances the state.
  double extend(RngStream& rng);
};

// Partition of unit mass into explicit atoms plus stick tails with known
// conditional laws.  Supports the exact transition steps needed by the
// Monte Carlo verification suites: size-biased picks resolve tail hits by
// stick extension instead of renormalization, so the functionals carry no
// truncation bias at any alpha.
//
// Usage contract: fragmentation steps and picks may be interleaved freely;
// after a coagulation step the mixture supports further coagulation steps
// and one final pick (tail selection weights are thinned deterministically,
// which is exact for a single subsequent pick).
class StickMixture {
 public:
  // Unit mass distributed as PD(alpha, theta), fully lazy.
  static StickMixture pd(const Params& params);

  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<GemTail>& tails() const { return tails_; }
  double total() const;

  // Moves up to `depth` sticks of every tail into explicit atoms; under
  // thinning each materialized atom survives with probability thin.
  void materialize(std::size_t depth, RngStream& rng);

  // Size-biased pick.  With remove=true the picked atom leaves the
  // mixture (tail picks shrink the tail's scale either way).
  double pick(RngStream& rng, bool remove);

  // Removes a size-biased pick and re-adds it as a PD(alpha, 1-alpha)
  // split tail; returns the picked mass.
  double frag_step(double alpha, RngStream& rng);

  // Draws the merge proportion B (Beta((1-a)/a,(t+a)/a), or 1/(t+1) when
  // a = 0), merges Bernoulli(B)-selected atoms plus the B-fraction of
  // every tail into one atom, and thins the tails; returns B.
  double coag_step(const Params& params, RngStream& rng);

 private:
  std::vector<double> atoms_;
  std::vector<GemTail> tails_;
};

}  // namespace pdcf

#endif
