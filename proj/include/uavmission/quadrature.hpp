#pragma once

#include <algorithm>
#include <cmath>

namespace uavmission {

struct SimpsonOptions {
  double rel_tol = 1e-9;
  int max_depth = 40;
};

namespace detail {

template <typename F>
double adaptive_simpson_step(const F& f, double a, double b, double fa, double fm,
                             double fb, double whole, double abs_tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace detail

/// Adaptive composite Simpson integral of `f` over [a, b].
///
/// The absolute tolerance is derived from `rel_tol` and a 16-panel Simpson
/// estimate of the integral, so the result is accurate to roughly `rel_tol`
/// relative for integrands that do not change sign.
template <typename F>
double integrate_simpson(const F& f, double a, double b, SimpsonOptions opts = {}) {
  if (!(b > a)) return 0.0;

  constexpr int kPanels = 16;
  const double h = (b - a) / kPanels;
  double coarse = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    const double x0 = a + k * h;
    const double x1 = (k + 1 == kPanels) ? b : x0 + h;
    coarse += (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
  }
  const double abs_tol = std::max(opts.rel_tol * std::abs(coarse),
                                  1e-300);

  // Refine panel by panel so each starts from an already-good estimate.
  double total = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    const double x0 = a + k * h;
    const double x1 = (k + 1 == kPanels) ? b : x0 + h;
    const double fa = f(x0);
    const double fm = f(0.5 * (x0 + x1));
    const double fb = f(x1);
    const double whole = (x1 - x0) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::adaptive_simpson_step(f, x0, x1, fa, fm, fb, whole,
                                           abs_tol / kPanels, opts.max_depth);
  }
  return total;
}

}  // namespace uavmission
