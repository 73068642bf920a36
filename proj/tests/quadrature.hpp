// Test-only adaptive quadrature used as an independent oracle for the
// special-function implementations.
#ifndef PDCF_TESTS_QUADRATURE_HPP
#define PDCF_TESTS_QUADRATURE_HPP

#include <cmath>
#include <functional>

namespace pdcf_test {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_rec(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb,
                           double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_rec(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), tol,
                      48);
}

// Tail integral of the jump intensity, integrated far enough that the
// remainder is negligible against tol.
inline double levy_tail_quadrature(double alpha, double x) {
  auto intensity = [alpha](double t) {
    if (alpha == 0.0) return std::exp(-t) / t;
    return alpha * std::pow(t, -alpha - 1.0) * std::exp(-t);
  };
  return integrate(intensity, x, x + 60.0, 1e-14);
}

}  // namespace pdcf_test

#endif
