#ifndef PDCF_RECTREE_HPP
#define PDCF_RECTREE_HPP

#include <cstdint>
#include <vector>

#include "pdcf/operators.hpp"
#include "pdcf/partition.hpp"
#include "pdcf/rng.hpp"

namespace pdcf {

// Fenwick tree over nonnegative vertex weights supporting prefix-sum
// sampling and point updates in logarithmic time.
class PrefixWeights {
 public:
  explicit PrefixWeights(std::size_t n);
  void add(std::size_t i, double delta);
  double total() const { return total_; }
  // Least index i with cumulative weight over [0..i] exceeding u.
  std::size_t find(double u) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> tree_;  // 1-indexed
  double total_ = 0.0;
};

// Rooted labeled tree on vertices 0..n with labels increasing away from
// the root: parent(v) < v for every v >= 1.
class RecursiveTree {
 public:
  // parent[v] is the parent of vertex v for v >= 1; parent[0] is ignored.
  explicit RecursiveTree(std::vector<int> parent);

  int n() const { return static_cast<int>(parent_.size()) - 1; }
  int parent(int v) const { return parent_[v]; }
  int child_count(int v) const { return child_count_[v]; }

 private:
  std::vector<int> parent_;
  std::vector<int> child_count_;
};

// Preferential-attachment growth: vertex m attaches to j >= 1 with weight
// 1 - alpha + alpha k_j and to the root with weight theta + alpha k_0.
RecursiveTree grow(const Params& params, int n, RngStream& rng);

// Connected components after deleting vertices 0..i, as a partition of
// {i+1, ..., n} in least-element block order.
SetPartition strip(const RecursiveTree& t, int i);

// Number of vertices in the subtree rooted at k, including k itself.
int branch_size(const RecursiveTree& t, int k);

// Strict descendants of vertex i (all labels exceed i), sorted.
std::vector<int> descendants(const RecursiveTree& t, int i);

// Reinforced 0/1 sequence: I_1 ~ Bernoulli((1-alpha)/(theta+i+1)) and
// P(I_{k+1}=1 | I_1..I_k) = (1 - alpha + alpha sum I_j)/(theta+i+1+alpha k).
std::vector<std::uint8_t> urn_indicators(const Params& params, int i, int m,
                                         RngStream& rng);

// Merges the selected blocks of b_next (a partition of {i+2..n}) with the
// singleton {i+1}; the merged block comes first, the rest keep their order.
SetPartition urn_coagulate(const SetPartition& b_next,
                           std::span<const std::uint8_t> indicators, int i);

// Weighted stage construction: each labeled vertex carries the asymptotic
// frequency of its subtree; descent is size-biased and each newly labeled
// vertex's mass is split by a lazily extended PD(alpha, 1-alpha) stick
// sequence (PD(alpha, theta) at the root).
struct StageTree {
  int stages = 0;
  std::vector<double> vertex_weight;            // label -> weight; root = 1
  std::vector<std::vector<int>> labeled_children;  // label -> labeled child ids
  std::vector<std::vector<double>> leaf_children;  // label -> discovered leaf weights
  std::vector<double> undiscovered;             // label -> unassigned child mass
  std::vector<MassPartition> leaf_stages;       // ranked leaf weights per stage
};

StageTree stage_tree(const Params& params, int stages, double eps, RngStream& rng,
                     const Truncation& trunc = {});

// Empirical block frequencies of strip(t, i) for i = 0..depth.
std::vector<BlockFrequencies> tree_frequency_chain(const RecursiveTree& t,
                                                   int depth);

}  // namespace pdcf

#endif
