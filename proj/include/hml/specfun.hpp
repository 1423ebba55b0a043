#pragma once

// Scalar special functions: log-gamma, digamma/trigamma, log-beta, the
// standard normal CDF, and exact log-moments of Beta/Gamma laws. All
// functions are pure and thread-safe.

namespace hml {

enum class PolygammaOrder { digamma = 0, trigamma = 1 };

// log Gamma(x), x > 0. Relative error <= 1e-13 for x >= 1.
double log_gamma(double x);

// psi(x) for order digamma, psi_1(x) for order trigamma; x > 0.
// Absolute error <= 1e-12 for x >= 1 (small arguments are shifted up with
// the recurrences psi(x) = psi(x+1) - 1/x, psi_1(x) = psi_1(x+1) + 1/x^2).
double polygamma(PolygammaOrder order, double x);

double digamma(double x);
double trigamma(double x);

// log B(a, b), a, b > 0.
double log_beta(double a, double b);

// Phi(x), absolute error <= 1e-10.
double std_normal_cdf(double x);

struct LogMoments {
  double mean;
  double variance;
};

// X ~ Beta(a, b): mean and variance of log X.
//   E[log X] = psi(a) - psi(a+b),  Var(log X) = psi_1(a) - psi_1(a+b).
LogMoments beta_log_moments(double a, double b);

struct GammaLogMoments {
  double mean;
  double variance;
  double fourth_central;  // leading term 3 * variance^2
};

// X ~ Gamma(k, 1), Y = log X: exact (psi(k), psi_1(k)) and the leading-order
// fourth central moment 3 psi_1(k)^2.
GammaLogMoments gamma_log_moments(double k);

}  // namespace hml
