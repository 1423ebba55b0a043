#pragma once

// Deterministic limit objects of the Hankel determinant processes: the drift
// r(t) = t + (1-t) log(1-t), the covariance kernels
//   f(s,t) = int_0^{s^t} (t-x)(s-x)/(1-x)^2 dx,
//   g(s,t) = int_0^{s^t} (t-x)(s-x)/(1-x) dx,
// the fixed-k covariance Sigma_k = (i ^ j), Gaussian path simulation on a
// grid, and the standardized log-determinant processes.

#include <Eigen/Dense>
#include <vector>

#include "hml/hankel_det.hpp"
#include "hml/moment_space.hpp"
#include "hml/rng.hpp"

namespace hml {

double r_drift(double t);
double kernel_f(double s, double t);
double kernel_g(double s, double t);

// k x k matrix with entries min(i, j), i, j = 1..k.
Eigen::MatrixXd sigma_fixed_k(int k);

enum class KernelId { f_unit, g_halfline, g_half_realline };

struct LimitSpec {
  IntervalKind interval;
  double mean_scale;  // multiplies r(t)
  double cov_scale;   // multiplies the kernel
  KernelId kernel;

  static LimitSpec for_interval(IntervalKind interval);
};

struct KernelGrid {
  std::vector<double> grid;
  Eigen::MatrixXd gram;
  KernelId kernel_id;
  Eigen::MatrixXd chol;  // lower factor with L L^T ~= gram
  double jitter = 0.0;   // diagonal jitter added to factorize, 0 if none
};

// Gram matrix cov_scale * kernel(t_i, t_j) with Cholesky factor; diagonal
// jitter escalates 1e-12 -> 1e-9 if needed and is recorded.
KernelGrid build_kernel_grid(const LimitSpec& spec,
                             const std::vector<double>& grid);

// n_paths x |grid| matrix of Gaussian paths mean_scale * r(t) + L xi.
Eigen::MatrixXd sample_limit_paths(const LimitSpec& spec,
                                   const std::vector<double>& grid,
                                   int n_paths, SeedSpec seed);

// Standardized finite-n process over the grid:
//   unit:      (2/sqrt n)(D_{2 floor(nt)} - D0_{2 floor(nt)} + (n/2) r(t))
//   halfline:  (1/n) D_{2 floor(nt)}
//   realline:  (1/n) D_{2 floor((n-1)t)}
std::vector<double> standardized_process(IntervalKind interval,
                                         const CanonicalCoords& c, int n,
                                         const std::vector<double>& grid);

}  // namespace hml
