#pragma once

// Large-deviation functionals for the centered log-Hankel process on [0,1]:
// the random measure nu_n, the limiting cumulant functional
//   Lambda(f) = -int_0^1 log(1 - G(x)/(2(1-x))) dx,  G(x) = int_x^1 f,
// with its K = sup G(x)/(1-x) threshold (finite below 2, infinite above 2,
// undefined at 2), the fixed-t restriction Lambda_t and its Fenchel-Legendre
// transform, the closed-form t=1 rate 2x - 1 - log(2x), and the fixed-k
// canonical-moment rate.

#include <functional>
#include <optional>
#include <vector>

#include "hml/moment_space.hpp"

namespace hml {

struct TestFunction {
  std::function<double(double)> evaluator;  // bounded, Riemann-integrable
  double sup_norm_bound = 0.0;
  // Known discontinuities in (0,1). Integrals split here; for functions with
  // jumps not listed, accuracy degrades to the quadrature grid resolution.
  std::vector<double> breakpoints;
};

TestFunction test_function_const(double c);
// Indicator of [0, t].
TestFunction test_function_indicator(double t);
// Piecewise constant: values[i] on [breakpoints[i], breakpoints[i+1]);
// breakpoints must start at 0, end at 1, strictly increasing.
TestFunction test_function_piecewise(const std::vector<double>& breakpoints,
                                     const std::vector<double>& values);
TestFunction scale_test_function(const TestFunction& f, double c);

enum class RateRegime { subcritical, supercritical, boundary };

// The boundary band |K - 2| <= 1e-9 is a first-class outcome: the
// functional's value is undefined there and is never reported as a number.
struct RateEval {
  RateRegime regime = RateRegime::subcritical;
  double K = 0.0;
  std::optional<double> value;  // finite iff subcritical; +inf if supercritical
};

constexpr double kBoundaryBandEps = 1e-9;

struct NuAtom {
  double t;       // atom position i/n
  double weight;
};

// Atom decomposition of nu_n for 2n canonical coordinates on [0,1]. The
// cumulative sums of the weights reproduce Z_n(t) = -(1/n)(D - D^0) at the
// jump points.
std::vector<NuAtom> nu_n_weights(const CanonicalCoords& c, int n);

RateEval lambda_functional(const TestFunction& f, double quad_tol = 1e-10);

// Lambda_t(lambda) = -int_0^t log(1 - lambda(t-y)/(2(1-y))) dy for
// lambda < 2/t; the monotone limit from below at lambda = 2/t; +inf above.
double lambda_t(double t, double lam);

// Fenchel-Legendre transform sup_{lambda < 2/t} {lambda x - Lambda_t(lambda)};
// +inf for x <= 0.
double lambda_t_star(double t, double x, double tol = 1e-9);

// Corollary rate at t = 1: 2x - 1 - log(2x) for x > 0, +inf otherwise.
double rate_t1_closed(double x);

// Fixed-k canonical rate 2 sum_i (-log(x_i - x_i^2) - log 4); +inf outside
// (0,1)^{2k}.
double rate_fixed_k_canonical(const std::vector<double>& x);

}  // namespace hml
