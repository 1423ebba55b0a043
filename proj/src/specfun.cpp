#include "hml/specfun.hpp"

#include <cmath>

#include "hml/errors.hpp"

namespace hml {

namespace {

// Bernoulli-number coefficients B_{2n}/(2n) for the digamma asymptotic series.
constexpr double kDigammaAsym[] = {
    1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
};

// B_{2n} for the trigamma asymptotic series.
constexpr double kTrigammaAsym[] = {
    1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0,
};

constexpr double kAsymCutoff = 8.0;

double digamma_impl(double x) {
  double acc = 0.0;
  while (x < kAsymCutoff) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv2;
  for (double c : kDigammaAsym) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 * inv - series;
}

double trigamma_impl(double x) {
  double acc = 0.0;
  while (x < kAsymCutoff) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv * inv2;
  for (double c : kTrigammaAsym) {
    series += c * p;
    p *= inv2;
  }
  return acc + inv + 0.5 * inv2 + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
  return digamma_impl(x);
}

double trigamma(double x) {
  if (!(x > 0.0)) throw DomainError("trigamma: requires x > 0");
  return trigamma_impl(x);
}

double polygamma(PolygammaOrder order, double x) {
  return order == PolygammaOrder::digamma ? digamma(x) : trigamma(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_beta: requires a, b > 0");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

LogMoments beta_log_moments(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("beta_log_moments: requires a, b > 0");
  return {digamma_impl(a) - digamma_impl(a + b),
          trigamma_impl(a) - trigamma_impl(a + b)};
}

GammaLogMoments gamma_log_moments(double k) {
  if (!(k > 0.0)) throw DomainError("gamma_log_moments: requires k > 0");
  const double var = trigamma_impl(k);
  return {digamma_impl(k), var, 3.0 * var * var};
}

}  // namespace hml
