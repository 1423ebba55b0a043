#pragma once

// Adaptive Gauss-Kronrod (7-15) quadrature on finite intervals.

#include <cmath>
#include <cstddef>
#include <functional>

#include "hml/errors.hpp"

namespace hml {

namespace detail {

// 15-point Kronrod nodes on [-1,1] (nonnegative half) with Kronrod and
// embedded 7-point Gauss weights.
struct Gk15 {
  static constexpr double nodes[8] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769,
      0.741531185599394, 0.586087235467691, 0.405845151377397,
      0.207784955007898, 0.0};
  static constexpr double wk[8] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728};
  static constexpr double wg[4] = {
      0.129484966168870, 0.279705391489277, 0.381830050505119,
      0.417959183673469};
};

template <typename F>
void gk15(const F& f, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum_k = 0.0, sum_g = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = Gk15::nodes[i] * h;
    const double fv =
        (i == 7) ? f(c) : f(c - x) + f(c + x);
    sum_k += Gk15::wk[i] * fv;
    if (i % 2 == 1) sum_g += Gk15::wg[i / 2] * fv;
  }
  value = sum_k * h;
  err = std::abs((sum_k - sum_g) * h);
}

}  // namespace detail

// Integrates f over [a, b] to absolute tolerance tol (plus a matching
// relative term). Throws DomainError if the recursion cannot converge.
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-10,
                 int max_depth = 48) {
  if (a == b) return 0.0;
  struct Rec {
    const F& f;
    double tol;
    double integrate(double a, double b, double whole, double err,
                     int depth) const {
      if (err <= tol * (1.0 + std::abs(whole)) || (b - a) < 1e-15)
        return whole;
      if (depth <= 0)
        throw DomainError("integrate: quadrature failed to converge");
      const double m = 0.5 * (a + b);
      double lv, le, rv, re;
      detail::gk15(f, a, m, lv, le);
      detail::gk15(f, m, b, rv, re);
      return integrate(a, m, lv, le, depth - 1) +
             integrate(m, b, rv, re, depth - 1);
    }
  };
  double v, e;
  detail::gk15(f, a, b, v, e);
  return Rec{f, tol * 0.5}.integrate(a, b, v, e, max_depth);
}

}  // namespace hml
