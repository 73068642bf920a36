#include "pdcf/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace pdcf {

namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ull;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  key_ = splitmix64(splitmix64(master_seed) + stream_index);
}

std::uint64_t RngStream::next_u64() {
  if (have_buffer_) {
    have_buffer_ = false;
    return buffer_;
  }
  std::uint64_t x0 = ctr_hi_, x1 = ctr_lo_, k = key_;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi, lo;
    mulhilo(x0, kPhiloxM, hi, lo);
    x0 = hi ^ k ^ x1;
    x1 = lo;
    k += kWeyl;
  }
  if (++ctr_lo_ == 0) ++ctr_hi_;
  buffer_ = x1;
  have_buffer_ = true;
  return x0;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
  double u;
  do {
    u = uniform01();
  } while (u == 0.0);
  return u;
}

// Wichura's AS 241 (PPND16) rational approximations for the normal quantile.
double RngStream::normal() {
  const double p = uniform_pos();
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) *
                    r +
                4.5921953931549871457e4) *
                   r +
               1.3731693765509461125e4) *
                  r +
              1.9715909503065514427e3) *
                 r +
             1.3314166789178437745e2) *
                r +
            3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) *
                    r +
                2.1213794301586595867e4) *
                   r +
               5.3941960214247511077e3) *
                  r +
              6.8718700749205790830e2) *
                 r +
             4.2313330701600911252e1) *
                r +
            1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double v;
  if (r <= 5.0) {
    r -= 1.6;
    v = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) *
                 r +
             1.27045825245236838258e0) *
                r +
            3.64784832476320460504e0) *
               r +
           5.76949722146069140550e0) *
              r +
          4.63033784615654529590e0) *
             r +
         1.42343711074968357734e0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) *
                 r +
             1.48103976427480074590e-1) *
                r +
            6.89767334985100004550e-1) *
               r +
           1.67638483018380384940e0) *
              r +
          2.05319162663775882187e0) *
             r +
         1.0);
  } else {
    r -= 5.0;
    v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) *
                 r +
             2.65321895265761230930e-2) *
                r +
            2.96560571828504891230e-1) *
               r +
           1.78482653991729133580e0) *
              r +
          5.46378491116411436990e0) *
             r +
         6.65790464350110377720e0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                  r +
              1.84631831751005468180e-5) *
                 r +
             7.86869131145613259100e-4) *
                r +
            1.48753612908506148525e-2) *
               r +
           1.36929880922735805310e-1) *
              r +
          5.99832206555887937690e-1) *
             r +
         1.0);
  }
  return q < 0.0 ? -v : v;
}

double RngStream::exponential() { return -std::log(uniform_pos()); }

bool RngStream::bernoulli(double p) { return uniform01() < p; }

namespace {

// Marsaglia-Tsang; shapes below 1 are boosted via G(a) = G(a+1) U^{1/a}.
double gamma_shape(double shape, RngStream& rng) {
  if (shape < 1.0) {
    const double u = rng.uniform_pos();
    return gamma_shape(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gamma(double shape, double rate, RngStream& rng) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("sample_gamma: shape and rate must be positive");
  return gamma_shape(shape, rng) / rate;
}

double sample_beta(double a, double b, RngStream& rng) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("sample_beta: parameters must be positive");
  for (;;) {
    const double x = gamma_shape(a, rng);
    const double y = gamma_shape(b, rng);
    const double s = x + y;
    if (s > 0.0) {
      double r = x / s;
      if (r >= 1.0) r = 1.0 - 1e-16;
      if (r <= 0.0) r = 1e-300;
      return r;
    }
  }
}

}  // namespace pdcf
