#pragma once

#include <cmath>
#include <utility>

namespace bac {

namespace detail {

template <typename F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m,
                    double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // Richardson: Simpson's error contracts by 16 per halving, so delta/15
  // estimates the remaining error of left+right.
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with an absolute tolerance; f must be finite on [a,b].
template <typename F>
double adaptive_simpson(F f, double a, double b, double tol, int max_depth = 48) {
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace bac
