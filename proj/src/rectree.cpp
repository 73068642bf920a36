#include "pdcf/rectree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdcf {

PrefixWeights::PrefixWeights(std::size_t n) : n_(n), tree_(n + 1, 0.0) {}

void PrefixWeights::add(std::size_t i, double delta) {
  if (i >= n_) throw std::domain_error("PrefixWeights: index out of range");
  total_ += delta;
  for (std::size_t k = i + 1; k <= n_; k += k & (~k + 1)) tree_[k] += delta;
}

std::size_t PrefixWeights::find(double u) const {
  std::size_t pos = 0;
  std::size_t mask = 1;
  while ((mask << 1) <= n_) mask <<= 1;
  for (; mask; mask >>= 1) {
    const std::size_t next = pos + mask;
    if (next <= n_ && tree_[next] <= u) {
      pos = next;
      u -= tree_[next];
    }
  }
  return std::min(pos, n_ - 1);
}

RecursiveTree::RecursiveTree(std::vector<int> parent)
    : parent_(std::move(parent)) {
  if (parent_.size() < 2)
    throw std::domain_error("RecursiveTree: at least one non-root vertex required");
  parent_[0] = -1;
  child_count_.assign(parent_.size(), 0);
  for (std::size_t v = 1; v < parent_.size(); ++v) {
    if (parent_[v] < 0 || parent_[v] >= static_cast<int>(v))
      throw std::domain_error("RecursiveTree: parent labels must decrease");
    child_count_[parent_[v]] += 1;
  }
}

RecursiveTree grow(const Params& params, int n, RngStream& rng) {
  if (n < 1) throw std::domain_error("grow: n must be positive");
  std::vector<int> parent(n + 1, 0);
  parent[0] = -1;
  if (n >= 1) parent[1] = 0;
  PrefixWeights w(static_cast<std::size_t>(n) + 1);
  w.add(0, params.theta + params.alpha);  // root with one child
  w.add(1, 1.0 - params.alpha);
  for (int m = 2; m <= n; ++m) {
    const double u = rng.uniform01() * w.total();
    const std::size_t j = std::min(w.find(u), static_cast<std::size_t>(m - 1));
    parent[m] = static_cast<int>(j);
    w.add(j, params.alpha);
    w.add(static_cast<std::size_t>(m), 1.0 - params.alpha);
  }
  return RecursiveTree(std::move(parent));
}

SetPartition strip(const RecursiveTree& t, int i) {
  const int n = t.n();
  if (i < 0 || i >= n) throw std::domain_error("strip: level must lie in [0, n)");
  std::vector<int> root(n + 1, -1);
  std::vector<int> block_of_root(n + 1, -1);
  SetPartition p;
  p.lo = i + 1;
  for (int v = i + 1; v <= n; ++v) {
    const int pa = t.parent(v);
    root[v] = (pa <= i) ? v : root[pa];
    const int r = root[v];
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<int>(p.blocks.size());
      p.blocks.push_back({});
    }
    p.blocks[block_of_root[r]].push_back(v);
  }
  return p;
}

int branch_size(const RecursiveTree& t, int k) {
  const int n = t.n();
  if (k < 1 || k > n) throw std::domain_error("branch_size: k must lie in [1, n]");
  std::vector<int> size(n + 1, 1);
  for (int v = n; v >= 1; --v) size[t.parent(v)] += size[v];
  return size[k];
}

std::vector<int> descendants(const RecursiveTree& t, int i) {
  const int n = t.n();
  if (i < 0 || i > n) throw std::domain_error("descendants: vertex out of range");
  std::vector<bool> desc(n + 1, false);
  std::vector<int> out;
  for (int v = i + 1; v <= n; ++v) {
    const int pa = t.parent(v);
    if (pa == i || (pa > i && desc[pa])) {
      desc[v] = true;
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::uint8_t> urn_indicators(const Params& params, int i, int m,
                                         RngStream& rng) {
  if (i < 0) throw std::domain_error("urn_indicators: i must be nonnegative");
  if (m < 1) throw std::domain_error("urn_indicators: m must be positive");
  std::vector<std::uint8_t> out(m);
  double ones = 0.0;
  for (int k = 0; k < m; ++k) {
    const double p = (1.0 - params.alpha + params.alpha * ones) /
                     (params.theta + i + 1.0 + params.alpha * k);
    out[k] = rng.bernoulli(p) ? 1 : 0;
    ones += out[k];
  }
  return out;
}

SetPartition urn_coagulate(const SetPartition& b_next,
                           std::span<const std::uint8_t> indicators, int i) {
  b_next.validate();
  if (b_next.lo != i + 2)
    throw std::domain_error("urn_coagulate: b_next must partition {i+2, ..., n}");
  if (indicators.size() != b_next.blocks.size())
    throw std::domain_error("urn_coagulate: indicator length mismatch");
  SetPartition out;
  out.lo = i + 1;
  std::vector<int> merged{i + 1};
  for (std::size_t k = 0; k < b_next.blocks.size(); ++k)
    if (indicators[k])
      merged.insert(merged.end(), b_next.blocks[k].begin(), b_next.blocks[k].end());
  std::sort(merged.begin(), merged.end());
  out.blocks.push_back(std::move(merged));
  for (std::size_t k = 0; k < b_next.blocks.size(); ++k)
    if (!indicators[k]) out.blocks.push_back(b_next.blocks[k]);
  return out;
}

namespace {

struct StageVertex {
  double weight;
  double theta_cur;  // next child stick ~ Beta(1-alpha, theta_cur + alpha)
  double undiscovered;
  std::vector<int> labeled_children;
  std::vector<double> leaf_children;
};

// Draws one more child stick of v, moving mass out of the undiscovered pool.
double extend_child(StageVertex& v, double alpha, RngStream& rng) {
  const double b = sample_beta(1.0 - alpha, v.theta_cur + alpha, rng);
  v.theta_cur += alpha;
  const double w = v.undiscovered * b;
  v.undiscovered *= (1.0 - b);
  return w;
}

}  // namespace

StageTree stage_tree(const Params& params, int stages, double eps, RngStream& rng,
                     const Truncation& trunc) {
  if (stages < 1) throw std::domain_error("stage_tree: stages must be positive");
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::domain_error("stage_tree: eps must lie in (0,1)");
  const double alpha = params.alpha;

  std::vector<StageVertex> verts;
  verts.reserve(static_cast<std::size_t>(stages) + 1);
  verts.push_back({1.0, params.theta, 1.0, {}, {}});

  // Discover leaves of v until its undiscovered pool is below eps * weight.
  auto fill = [&](StageVertex& v) {
    while (v.undiscovered > eps * v.weight) {
      if (v.leaf_children.size() + v.labeled_children.size() >= trunc.max_atoms)
        throw truncation_error("stage_tree: stick extension exceeded max_atoms");
      v.leaf_children.push_back(extend_child(v, alpha, rng));
    }
  };
  fill(verts[0]);

  StageTree out;
  out.stages = stages;

  auto record_stage = [&]() {
    std::vector<double> leaves;
    double resid = 0.0;
    for (const auto& v : verts) {
      leaves.insert(leaves.end(), v.leaf_children.begin(), v.leaf_children.end());
      resid += v.undiscovered;
    }
    out.leaf_stages.push_back(rank_normalize(leaves, resid));
  };
  record_stage();  // stage 0

  for (int stage = 1; stage <= stages; ++stage) {
    // size-biased descent from the root to a leaf
    int v = 0;
    for (;;) {
      StageVertex& cur = verts[v];
      double u = rng.uniform01() * cur.weight;
      int next_labeled = -1;
      std::size_t leaf_idx = cur.leaf_children.size();
      for (std::size_t c = 0; c < cur.labeled_children.size(); ++c) {
        const double w = verts[cur.labeled_children[c]].weight;
        if (u < w) {
          next_labeled = cur.labeled_children[c];
          break;
        }
        u -= w;
      }
      if (next_labeled >= 0) {
        v = next_labeled;
        continue;
      }
      for (std::size_t c = 0; c < cur.leaf_children.size(); ++c) {
        if (u < cur.leaf_children[c]) {
          leaf_idx = c;
          break;
        }
        u -= cur.leaf_children[c];
      }
      if (leaf_idx == cur.leaf_children.size()) {
        // landed in the undiscovered pool: the chosen leaf is the next stick
        if (cur.leaf_children.size() + cur.labeled_children.size() >=
            trunc.max_atoms)
          throw truncation_error("stage_tree: stick extension exceeded max_atoms");
        cur.leaf_children.push_back(extend_child(cur, alpha, rng));
        leaf_idx = cur.leaf_children.size() - 1;
      }
      // label the chosen leaf
      const double w = cur.leaf_children[leaf_idx];
      cur.leaf_children.erase(cur.leaf_children.begin() +
                              static_cast<std::ptrdiff_t>(leaf_idx));
      cur.labeled_children.push_back(static_cast<int>(verts.size()));
      verts.push_back({w, 1.0 - alpha, w, {}, {}});
      fill(verts.back());
      break;
    }
    record_stage();
  }

  out.vertex_weight.reserve(verts.size());
  for (const auto& v : verts) {
    out.vertex_weight.push_back(v.weight);
    out.labeled_children.push_back(v.labeled_children);
    out.leaf_children.push_back(v.leaf_children);
    out.undiscovered.push_back(v.undiscovered);
  }
  return out;
}

std::vector<BlockFrequencies> tree_frequency_chain(const RecursiveTree& t,
                                                   int depth) {
  if (depth < 0 || depth >= t.n())
    throw std::domain_error("tree_frequency_chain: depth must lie in [0, n)");
  std::vector<BlockFrequencies> out;
  out.reserve(depth + 1);
  for (int i = 0; i <= depth; ++i) out.push_back(empirical_frequencies(strip(t, i)));
  return out;
}

}  // namespace pdcf
