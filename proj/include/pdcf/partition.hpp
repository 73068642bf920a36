#ifndef PDCF_PARTITION_HPP
#define PDCF_PARTITION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace pdcf {

// Parameter pair (alpha, theta) with 0 <= alpha < 1 and theta > -alpha.
struct Params {
  double alpha = 0.0;
  double theta = 1.0;

  Params() = default;
  Params(double a, double t);
};

// Truncated partition of unit mass: positive nonincreasing atoms plus the
// unrepresented tail mass.  atoms sum + residual == 1 within 1e-12.
class MassPartition {
 public:
  MassPartition() : residual_(1.0) {}
  MassPartition(std::vector<double> atoms, double residual);

  const std::vector<double>& atoms() const { return atoms_; }
  double residual() const { return residual_; }
  std::size_t size() const { return atoms_.size(); }
  double atom(std::size_t i) const { return atoms_[i]; }
  double stored_mass() const;

 private:
  std::vector<double> atoms_;  // strictly positive, nonincreasing
  double residual_;
};

// Stick-breaking weights in discovery (size-biased) order.
struct SizeBiasedWeights {
  std::vector<double> weights;
  double residual = 1.0;  // product of (1 - B_i) over consumed sticks
  bool truncated = false;  // max_atoms hit before the residual target
};

// Partition of the label interval {lo, ..., lo+n-1} into blocks listed in
// increasing order of least element; blocks are sorted internally.
struct SetPartition {
  int lo = 1;
  std::vector<std::vector<int>> blocks;

  int label_count() const;
  // Validates disjointness, coverage and block ordering; throws on failure.
  void validate() const;
  bool operator==(const SetPartition&) const = default;
};

struct BlockFrequencies {
  std::vector<double> freqs;  // block order, sums to 1
};

// Marker type for a size-biased pick landing beyond the stored atoms.
using PickIndex = std::optional<std::size_t>;  // nullopt == residual

// Drops zeros, sorts decreasingly (stable in the original index), and
// rescales so atoms + residual sum to 1, provided the input total is
// within 1e-9 of 1.  Negative entries or a larger deviation throw.
MassPartition rank_normalize(std::span<const double> weights, double residual);

// Least index i with cumulative atom mass > u, or nullopt when u falls in
// the residual.  With u ~ U[0,1) this realizes the size-biased pick.
PickIndex size_biased_index(const MassPartition& x, double u);

// Empirical block frequencies |block|/n in block order.
BlockFrequencies empirical_frequencies(const SetPartition& p);

// Weights and residual produced by an explicit stick sequence.
SizeBiasedWeights sticks_to_weights(std::span<const double> sticks);

}  // namespace pdcf

#endif
