#include "pdcf/stickmc.hpp"

#include <algorithm>
#include <cmath>

namespace pdcf {

double GemTail::extend(RngStream& rng) {
  const double b = sample_beta(1.0 - alpha, theta_cur + alpha, rng);
  theta_cur += alpha;
  const double w = scale * b;
  scale *= (1.0 - b);
  return w;
}

StickMixture StickMixture::pd(const Params& params) {
  StickMixture m;
  m.tails_.push_back(GemTail{1.0, 1.0, params.alpha, params.theta});
  return m;
}

double StickMixture::total() const {
  double t = 0.0;
  for (double a : atoms_) t += a;
  for (const auto& tail : tails_) t += tail.weight();
  return t;
}

void StickMixture::materialize(std::size_t depth, RngStream& rng) {
  for (auto& tail : tails_) {
    for (std::size_t k = 0; k < depth; ++k) {
      const double w = tail.extend(rng);
      if (tail.thin >= 1.0 || rng.bernoulli(tail.thin)) atoms_.push_back(w);
    }
  }
}

double StickMixture::pick(RngStream& rng, bool remove) {
  double u = rng.uniform01() * total();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (u < atoms_[i]) {
      const double v = atoms_[i];
      if (remove) atoms_.erase(atoms_.begin() + static_cast<std::ptrdiff_t>(i));
      return v;
    }
    u -= atoms_[i];
  }
  for (auto& tail : tails_) {
    if (u < tail.weight()) return tail.extend(rng);
    u -= tail.weight();
  }
  // roundoff overshoot: fall back to the largest component
  if (!tails_.empty()) return tails_.back().extend(rng);
  const double v = atoms_.back();
  if (remove) atoms_.pop_back();
  return v;
}

double StickMixture::frag_step(double alpha, RngStream& rng) {
  const double a = pick(rng, true);
  tails_.push_back(GemTail{a, 1.0, alpha, 1.0 - alpha});
  return a;
}

double StickMixture::coag_step(const Params& params, RngStream& rng) {
  double b;
  if (params.alpha == 0.0)
    b = 1.0 / (params.theta + 1.0);
  else
    b = sample_beta((1.0 - params.alpha) / params.alpha,
                    (params.theta + params.alpha) / params.alpha, rng);
  double merged = 0.0;
  std::vector<double> kept;
  kept.reserve(atoms_.size() + 1);
  for (double a : atoms_) {
    if (rng.bernoulli(b))
      merged += a;
    else
      kept.push_back(a);
  }
  for (auto& tail : tails_) {
    merged += b * tail.weight();
    tail.thin *= (1.0 - b);
  }
  if (merged > 0.0) kept.push_back(merged);
  atoms_ = std::move(kept);
  return b;
}

}  // namespace pdcf
