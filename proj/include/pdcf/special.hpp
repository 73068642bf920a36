#ifndef PDCF_SPECIAL_HPP
#define PDCF_SPECIAL_HPP

namespace pdcf {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized incomplete beta function I_x(a,b), a,b > 0, x in [0,1].
double reg_inc_beta(double a, double b, double x);

// Regularized lower incomplete gamma P(a,x), a > 0, x >= 0.
double reg_inc_gamma_lower(double a, double x);

// Inverse of P(a,.) restricted to [0, hi]: returns x with P(a,x) = p*P(a,hi).
double inv_reg_inc_gamma_lower(double a, double p, double hi);

// Tail mass of the jump intensity used by the subordinator constructions:
//   alpha = 0:  integral_x^inf t^-1 e^-t dt            (gamma subordinator)
//   alpha > 0:  integral_x^inf alpha t^(-alpha-1) e^-t dt
// Strictly decreasing, diverges as x -> 0, vanishes as x -> inf.
double levy_tail(double alpha, double x);

// Inverse of levy_tail in its second argument.  For y in [1e-300, 1e300]
// this never fails; results are clamped to the representable double range
// at the extremes.
double levy_tail_inverse(double alpha, double y);

// Mass of jumps below level c: integral_0^c t * intensity(t) dt.
// Equals 1 - e^-c for alpha = 0 and alpha * gamma(1-alpha, c) otherwise.
double levy_small_jump_mass(double alpha, double c);

}  // namespace pdcf

#endif
