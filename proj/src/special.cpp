#include "pdcf/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdcf {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065120900824;
constexpr double kFpMin = 1e-300;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::domain_error("levy_tail: alpha must lie in [0,1)");
}

// Continued fraction for the incomplete beta (Numerical Recipes betacf).
double betacf(double a, double b, double x) {
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 3e-16) break;
  }
  return h;
}

// Lentz continued fraction with Gamma(a,x) = e^-x x^a h(a,x), valid x > a.
double upper_gamma_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 3e-16) break;
  }
  return h;
}

// E1 power series, x <= 1.
double e1_series(double x) {
  double sum = 0.0, term = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= -x / k;
    sum -= term / k;
    if (std::fabs(term) < 1e-18 * (std::fabs(sum) + kFpMin)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// E1 continued fraction, x > 1.
double e1_cf(double x) {
  double b = x + 1.0;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + a / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

// Small-x tail for alpha > 0, parameterized by t = ln x so the series is
// usable far below the double underflow threshold for x itself:
//   nu(x) = x^-a (1 - a sum_{k>=1} (-x)^k / (k! (k-a))) - Gamma(1-a).
double nu_small_t(double alpha, double t) {
  const double e = -alpha * t;
  if (e > 709.0) return std::numeric_limits<double>::infinity();
  const double xma = std::exp(e);
  const double x = std::exp(t);
  double sum = 0.0, pw = 1.0, fact = 1.0;
  for (int k = 1; k <= 60; ++k) {
    pw *= -x;
    fact *= k;
    const double term = pw / (fact * (k - alpha));
    sum += term;
    if (std::fabs(term) < 1e-18 * (std::fabs(sum) + kFpMin)) break;
  }
  return xma * (1.0 - alpha * sum) - std::tgamma(1.0 - alpha);
}

// Mid-range tail for alpha > 0 via the upper incomplete gamma:
//   nu(x) = x^-a e^-x - Gamma(1-a, x) = e^-x x^-a (1 - x h(1-a, x)).
double nu_mid(double alpha, double x) {
  const double h = upper_gamma_cf(1.0 - alpha, x);
  return std::exp(-x - alpha * std::log(x)) * (1.0 - x * h);
}

// Large-x asymptotic series, truncated at the smallest term.
double nu_large(double alpha, double x) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k <= 60; ++k) {
    const double next = -term * (alpha + k) / x;
    if (std::fabs(next) >= std::fabs(term)) break;
    term = next;
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  const double lg = -x - (alpha + 1.0) * std::log(x);
  return alpha * std::exp(lg) * sum;
}

double levy_tail_t(double alpha, double t) {
  if (alpha == 0.0) {
    const double x = std::exp(t);
    if (x <= 1.0) {
      // series in t-space stays finite for arbitrarily negative t
      double sum = 0.0, term = 1.0;
      for (int k = 1; k <= 60; ++k) {
        term *= -x / k;
        sum -= term / k;
        if (std::fabs(term) < 1e-18 * (std::fabs(sum) + kFpMin)) break;
      }
      return -kEulerGamma - t + sum;
    }
    return e1_cf(x);
  }
  if (t <= std::log(2.0)) return nu_small_t(alpha, t);
  const double x = std::exp(t);
  if (x < 45.0) return nu_mid(alpha, x);
  return nu_large(alpha, x);
}

// d/dt nu(e^t) = -e^t * intensity(e^t), computed in log space.
double levy_tail_t_deriv(double alpha, double t) {
  const double x = std::exp(t);
  if (alpha == 0.0) return -std::exp(-x);
  const double e = -alpha * t - x;
  if (e > 709.0) return -std::numeric_limits<double>::infinity();
  return -alpha * std::exp(e);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: argument must be positive and finite");
  return std::lgamma(x);
}

double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("reg_inc_beta: parameters must be positive");
  if (!(x >= 0.0) || !(x <= 1.0))
    throw std::domain_error("reg_inc_beta: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double lfront = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(lfront);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double reg_inc_gamma_lower(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("reg_inc_gamma_lower: a must be positive");
  if (!(x >= 0.0)) throw std::domain_error("reg_inc_gamma_lower: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 1; n <= 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
  }
  const double q =
      std::exp(-x + a * std::log(x) - log_gamma(a)) * upper_gamma_cf(a, x);
  return 1.0 - q;
}

double inv_reg_inc_gamma_lower(double a, double p, double hi) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::domain_error("inv_reg_inc_gamma_lower: p must lie in [0,1]");
  const double target = p * reg_inc_gamma_lower(a, hi);
  double lo = 0.0, up = hi;
  for (int i = 0; i < 90; ++i) {
    const double mid = 0.5 * (lo + up);
    if (reg_inc_gamma_lower(a, mid) < target)
      lo = mid;
    else
      up = mid;
  }
  return 0.5 * (lo + up);
}

double levy_tail(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > 0.0)) throw std::domain_error("levy_tail: x must be positive");
  return levy_tail_t(alpha, std::log(x));
}

double levy_small_jump_mass(double alpha, double c) {
  check_alpha(alpha);
  if (!(c >= 0.0)) throw std::domain_error("levy_small_jump_mass: c must be nonnegative");
  if (c == 0.0) return 0.0;
  if (alpha == 0.0) return -std::expm1(-c);
  return alpha * std::tgamma(1.0 - alpha) * reg_inc_gamma_lower(1.0 - alpha, c);
}

double levy_tail_inverse(double alpha, double y) {
  check_alpha(alpha);
  if (!(y > 0.0)) throw std::domain_error("levy_tail_inverse: y must be positive");

  const double t_lo = std::log(1e-13);
  const double t_hi = std::log(745.0);

  if (y >= levy_tail_t(alpha, t_lo)) {
    // Solution below 1e-13: invert the leading small-x behaviour in closed
    // form, then polish with Newton in t = ln x (safe for underflowing x).
    double t = (alpha == 0.0)
                   ? -(y + kEulerGamma)
                   : -std::log(y + std::tgamma(1.0 - alpha)) / alpha;
    for (int it = 0; it < 4; ++it) {
      const double f = levy_tail_t(alpha, t) - y;
      const double fp = levy_tail_t_deriv(alpha, t);
      if (!std::isfinite(f) || !std::isfinite(fp) || fp == 0.0) break;
      const double step = f / fp;
      t -= step;
      if (std::fabs(step) < 1e-15 * std::max(1.0, std::fabs(t))) break;
    }
    const double x = std::exp(t);
    return x > 0.0 ? x : std::numeric_limits<double>::denorm_min();
  }
  if (y <= levy_tail_t(alpha, t_hi)) return 745.0;

  // Safeguarded Newton on t in [t_lo, t_hi]; the bracket is maintained so a
  // rejected Newton step falls back to bisection.
  double lo = t_lo, hi = t_hi;
  double t = (alpha == 0.0)
                 ? -(y + kEulerGamma)
                 : -std::log(y + std::tgamma(1.0 - alpha)) / alpha;
  if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = levy_tail_t(alpha, t) - y;
    if (f > 0.0)
      lo = t;
    else
      hi = t;
    if (std::fabs(f) <= 1e-12 * std::max(1.0, y) || hi - lo < 1e-15) break;
    const double fp = levy_tail_t_deriv(alpha, t);
    double tn = t - f / fp;
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    t = tn;
  }
  return std::exp(t);
}

}  // namespace pdcf
