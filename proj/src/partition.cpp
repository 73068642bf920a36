#include "pdcf/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pdcf {

Params::Params(double a, double t) : alpha(a), theta(t) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::domain_error("Params: alpha must lie in [0,1)");
  if (!(theta > -alpha)) throw std::domain_error("Params: theta must exceed -alpha");
}

MassPartition::MassPartition(std::vector<double> atoms, double residual)
    : atoms_(std::move(atoms)), residual_(residual) {
  if (residual_ < 0.0)
    throw std::domain_error("MassPartition: residual must be nonnegative");
  double sum = residual_;
  double prev = std::numeric_limits<double>::infinity();
  for (double a : atoms_) {
    if (!(a > 0.0)) throw std::domain_error("MassPartition: atoms must be positive");
    if (a > prev) throw std::domain_error("MassPartition: atoms must be nonincreasing");
    prev = a;
    sum += a;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("MassPartition: total mass deviates from 1");
}

double MassPartition::stored_mass() const {
  return std::accumulate(atoms_.begin(), atoms_.end(), 0.0);
}

int SetPartition::label_count() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

void SetPartition::validate() const {
  std::vector<int> seen;
  int prev_least = lo - 1;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    if (!std::is_sorted(b.begin(), b.end()))
      throw std::invalid_argument("SetPartition: block labels not sorted");
    if (b.front() <= prev_least)
      throw std::invalid_argument("SetPartition: blocks not in least-element order");
    prev_least = b.front();
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != lo + static_cast<int>(i))
      throw std::invalid_argument("SetPartition: labels do not cover the interval");
}

MassPartition rank_normalize(std::span<const double> weights, double residual) {
  if (residual < 0.0)
    throw std::domain_error("rank_normalize: residual must be nonnegative");
  double total = residual;
  for (double w : weights) {
    if (w < 0.0) throw std::domain_error("rank_normalize: negative weight");
    total += w;
  }
  if (total <= 0.0) throw std::domain_error("rank_normalize: zero total mass");
  if (std::fabs(total - 1.0) > 1e-9)
    throw std::invalid_argument("rank_normalize: total mass deviates from 1 by more than 1e-9");

  std::vector<double> atoms;
  atoms.reserve(weights.size());
  for (double w : weights)
    if (w > 0.0) atoms.push_back(w);
  std::stable_sort(atoms.begin(), atoms.end(), std::greater<double>());
  if (total != 1.0) {
    for (double& a : atoms) a /= total;
    residual /= total;
  }
  return MassPartition(std::move(atoms), residual);
}

PickIndex size_biased_index(const MassPartition& x, double u) {
  if (!(u >= 0.0) || !(u < 1.0))
    throw std::domain_error("size_biased_index: u must lie in [0,1)");
  double cum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cum += x.atom(i);
    if (u < cum) return i;
  }
  return std::nullopt;
}

BlockFrequencies empirical_frequencies(const SetPartition& p) {
  p.validate();
  const int n = p.label_count();
  BlockFrequencies out;
  out.freqs.reserve(p.blocks.size());
  for (const auto& b : p.blocks)
    out.freqs.push_back(static_cast<double>(b.size()) / n);
  return out;
}

SizeBiasedWeights sticks_to_weights(std::span<const double> sticks) {
  SizeBiasedWeights out;
  out.residual = 1.0;
  for (double b : sticks) {
    if (!(b > 0.0) || !(b <= 1.0))
      throw std::domain_error("sticks_to_weights: sticks must lie in (0,1]");
    out.weights.push_back(out.residual * b);
    out.residual *= (1.0 - b);
  }
  return out;
}

}  // namespace pdcf
