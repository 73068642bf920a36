#ifndef PDCF_RNG_HPP
#define PDCF_RNG_HPP

#include <cstdint>
#include <vector>

namespace pdcf {

// Counter-based random stream (Philox-style 2x64, 10 rounds), keyed by
// (master_seed, stream_index).  Equal keys reproduce the same sequence
// bit for bit; distinct stream indices give statistically independent
// streams, so replicas can be assigned stream_index = replica id and run
// in parallel without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();

  // Uniform on [0,1) with 53 random bits.
  double uniform01();
  // Uniform on (0,1); never returns 0.
  double uniform_pos();
  // Standard normal via the AS 241 inverse-CDF (one uniform per variate).
  double normal();
  // Standard exponential.
  double exponential();
  bool bernoulli(double p);

 private:
  std::uint64_t key_;
  std::uint64_t ctr_lo_ = 0, ctr_hi_ = 0;
  std::uint64_t buffer_ = 0;
  bool have_buffer_ = false;
  std::uint64_t master_seed_, stream_index_;
};

// Beta(a,b) variate.  a, b > 0.
double sample_beta(double a, double b, RngStream& rng);

// Gamma variate with the RATE convention: mean = shape/rate.
double sample_gamma(double shape, double rate, RngStream& rng);

}  // namespace pdcf

#endif
