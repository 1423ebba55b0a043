#include "hml/ldp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hml/quadrature.hpp"

namespace hml {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEdgeDelta = 1e-7;  // [1-delta, 1] handled via f(1-)

double golden_max(const std::function<double(double)>& phi, double a,
                  double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = phi(x1), f2 = phi(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = phi(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = phi(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

TestFunction test_function_const(double c) {
  return {[c](double) { return c; }, std::abs(c), {}};
}

TestFunction test_function_indicator(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw DomainError("test_function_indicator: t outside [0,1]");
  std::vector<double> breaks;
  if (t > 0.0 && t < 1.0) breaks.push_back(t);
  return {[t](double x) { return x <= t ? 1.0 : 0.0; }, 1.0, breaks};
}

TestFunction test_function_piecewise(const std::vector<double>& breakpoints,
                                     const std::vector<double>& values) {
  if (breakpoints.size() != values.size() + 1 || values.empty())
    throw DomainError("piecewise: need one more breakpoint than values");
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
    throw DomainError("piecewise: breakpoints must span [0,1]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw DomainError("piecewise: breakpoints must be strictly increasing");
  double sup = 0.0;
  for (double v : values) sup = std::max(sup, std::abs(v));
  const std::vector<double> interior(breakpoints.begin() + 1,
                                     breakpoints.end() - 1);
  return {[breakpoints, values](double x) {
            const auto it = std::upper_bound(breakpoints.begin() + 1,
                                             breakpoints.end() - 1, x);
            return values[static_cast<std::size_t>(
                it - breakpoints.begin() - 1)];
          },
          sup, interior};
}

TestFunction scale_test_function(const TestFunction& f, double c) {
  auto eval = f.evaluator;
  return {[eval, c](double x) { return c * eval(x); },
          std::abs(c) * f.sup_norm_bound, f.breakpoints};
}

std::vector<NuAtom> nu_n_weights(const CanonicalCoords& c, int n) {
  if (c.interval != IntervalKind::unit)
    throw DomainError("nu_n_weights: defined for [0,1] coordinates");
  if (static_cast<int>(c.size()) < 2 * n)
    throw DomainError("nu_n_weights: need 2n coordinates");
  const double log4 = std::log(4.0);
  const double log2 = std::log(2.0);
  std::vector<NuAtom> atoms(n);
  double odd_sum = 0.0;   // sum_{j<=i} log(4 q_{2j-1} p_{2j-1})
  double even_sum = 0.0;  // sum_{j<=i-1} log(4 q_{2j} p_{2j})
  for (int i = 1; i <= n; ++i) {
    const double p_odd = c.coords[2 * i - 2];
    const double p_even = c.coords[2 * i - 1];
    odd_sum += log4 + std::log((1.0 - p_odd) * p_odd);
    const double bracket = odd_sum + even_sum + log2 + std::log(p_even);
    atoms[i - 1] = {static_cast<double>(i) / n, -bracket / n};
    even_sum += log4 + std::log((1.0 - p_even) * p_even);
  }
  return atoms;
}

RateEval lambda_functional(const TestFunction& f, double quad_tol) {
  // type invariant: the evaluator respects its stated sup-norm bound
  for (int i = 0; i <= 10000; ++i) {
    const double x = i / 10000.0;
    if (std::abs(f.evaluator(x)) > f.sup_norm_bound + 1e-12)
      throw DomainError("lambda_functional: |f| exceeds sup_norm_bound");
  }
  std::vector<double> knots(f.breakpoints);
  std::sort(knots.begin(), knots.end());
  // integrals split at the declared discontinuities: adaptive quadrature is
  // blind to jumps hiding in the node gap next to an interval endpoint
  const auto G = [&](double x) {
    if (x >= 1.0) return 0.0;
    double acc = 0.0;
    double lo = x;
    for (double b : knots)
      if (b > lo && b < 1.0) {
        acc += integrate(f.evaluator, lo, b, quad_tol * 0.1);
        lo = b;
      }
    return acc + integrate(f.evaluator, lo, 1.0, quad_tol * 0.1);
  };
  const auto ratio = [&](double x) { return G(x) / (1.0 - x); };

  // K = sup_{[0,1)} G(x)/(1-x): coarse scan, golden refinement around the
  // best grid cell, then the x -> 1 limit f(1-).
  constexpr int kScan = 1000;
  constexpr double kXmax = 1.0 - 1e-6;
  double best = -kInf;
  int best_i = 0;
  for (int i = 0; i <= kScan; ++i) {
    const double x = kXmax * i / kScan;
    const double v = ratio(x);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = kXmax * std::max(0, best_i - 1) / kScan;
  const double hi = kXmax * std::min(kScan, best_i + 1) / kScan;
  double K = golden_max(ratio, lo, hi, 1e-12);
  K = std::max(K, f.evaluator(1.0 - 1e-12));

  RateEval out;
  out.K = K;
  if (K > 2.0 + kBoundaryBandEps) {
    out.regime = RateRegime::supercritical;
    out.value = kInf;
    return out;
  }
  if (K >= 2.0 - kBoundaryBandEps) {
    out.regime = RateRegime::boundary;
    return out;  // undefined: carried as a state, never a number
  }
  out.regime = RateRegime::subcritical;
  const auto integrand = [&](double x) { return std::log1p(-0.5 * ratio(x)); };
  double main = 0.0;
  double piece_lo = 0.0;
  for (double b : knots)
    if (b > piece_lo && b < 1.0 - kEdgeDelta) {
      main += integrate(integrand, piece_lo, b, quad_tol);
      piece_lo = b;
    }
  main += integrate(integrand, piece_lo, 1.0 - kEdgeDelta, quad_tol);
  // G(x)/(1-x) -> f(1-) on the edge strip
  const double tail = kEdgeDelta * std::log1p(-0.5 * f.evaluator(1.0 - 1e-12));
  out.value = -(main + tail);
  return out;
}

double lambda_t(double t, double lam) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("lambda_t: t must be in (0,1]");
  if (lam == 0.0) return 0.0;
  if (lam > 2.0 / t) return kInf;
  // int_0^t log(1 - lam(t-y)/(2(1-y))) dy
  //   = int_0^t log(c0 + c1 y) dy - t log 2 + r(t),
  // with c0 = 2 - lam t >= 0, c1 = lam - 2, c0 + c1 t = 2(1-t). The
  // antiderivative A(x) = x(log x - 1) carries the 0 log 0 := 0 convention,
  // which covers the boundary lam = 2/t (monotone limit from below).
  const auto A = [](double x) { return x > 0.0 ? x * (std::log(x) - 1.0) : 0.0; };
  const double c0 = 2.0 - lam * t;
  const double c1 = lam - 2.0;
  const double end = 2.0 * (1.0 - t);
  double i1;
  if (std::abs(c1) * t <= 1e-7 * c0) {
    // lam near 2 with t < 1: the A-difference cancels; expand
    // int_0^t log(c0 + c1 y) dy in powers of c1 t / c0
    if (c0 == 0.0) return kInf;  // t = 1 and lam = 2: boundary limit diverges
    const double u = c1 * t / c0;
    i1 = t * (std::log(c0) + u * (0.5 - u * (1.0 / 6.0 - u / 12.0)));
  } else {
    i1 = (A(end) - A(c0)) / c1;
  }
  if (i1 == -kInf) return kInf;
  const double rt = (t == 1.0) ? 1.0 : t + (1.0 - t) * std::log1p(-t);
  return -(i1 - t * std::log(2.0) + rt);
}

double lambda_t_star(double t, double x, double tol) {
  if (!(t > 0.0 && t <= 1.0))
    throw DomainError("lambda_t_star: t must be in (0,1]");
  // For x <= 0 the objective lambda x - Lambda_t(lambda) grows without bound
  // as lambda -> -inf.
  if (!(x > 0.0)) return kInf;
  const double edge = 2.0 / t;
  const auto phi = [&](double lam) { return lam * x - lambda_t(t, lam); };
  double hi = edge - 1e-12;
  double mid = edge - 1.0;
  double lo = edge - 2.0;
  double width = 2.0;
  while (phi(lo) >= phi(mid)) {
    mid = lo;
    width *= 2.0;
    lo = edge - width;
    if (width > 1e12)
      throw DomainError("lambda_t_star: bracket expansion overflow (x <= 0 path)");
  }
  const double lam_tol = std::max(1e-11, std::sqrt(tol) * 1e-3) *
                         (1.0 + std::abs(lo) + std::abs(hi));
  return golden_max(phi, lo, hi, lam_tol);
}

double rate_t1_closed(double x) {
  if (!(x > 0.0)) return kInf;
  return 2.0 * x - 1.0 - std::log(2.0 * x);
}

double rate_fixed_k_canonical(const std::vector<double>& x) {
  const double log4 = std::log(4.0);
  double sum = 0.0;
  for (double xi : x) {
    if (!(xi > 0.0 && xi < 1.0)) return kInf;
    sum += -std::log(xi - xi * xi) - log4;
  }
  return 2.0 * sum;
}

}  // namespace hml
