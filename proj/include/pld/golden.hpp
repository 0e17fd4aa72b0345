#pragma once

#include <cmath>
#include <utility>

namespace pld {

// Golden-section minimizer on [a, b]. Shrinks the bracket until its width
// falls below tol * (b - a) or max_iter steps, then returns the midpoint.
// Derivative-free and robust when the minimum sits on a bracket endpoint.
template <typename F>
double golden_section_min(F&& f, double a, double b, double tol = 1e-9, int max_iter = 300) {
  if (b < a) std::swap(a, b);
  const double width0 = b - a;
  if (width0 <= 0.0) return a;
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol * width0; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

template <typename F>
double golden_section_max(F&& f, double a, double b, double tol = 1e-9, int max_iter = 300) {
  return golden_section_min([&](double x) { return -f(x); }, a, b, tol, max_iter);
}

}  // namespace pld
