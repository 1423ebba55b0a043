#pragma once

// Statistical utilities for the Monte Carlo harness: one-sample
// Kolmogorov-Smirnov test and mergeable moment/covariance accumulators
// (merging is exact in shard order, so sharded runs reduce deterministically).

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace hml {

// Sup distance between the empirical CDF of the sample and cdf. Sorts a copy.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);

// Asymptotic two-sided p-value with the Stephens small-sample correction.
double ks_pvalue(double d, std::size_t n);

// log (1/n sum exp(x_i)) evaluated stably.
double log_mean_exp(const std::vector<double>& x);

class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);

  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;        // unbiased
  double fourth_central() const;  // m4 = M4 / n
  double mean_standard_error() const;
  // SE of the sample variance via sqrt((m4 - s^4) / n).
  double variance_standard_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0, m2_ = 0.0, m3_ = 0.0, m4_ = 0.0;
};

class CovAccumulator {
 public:
  explicit CovAccumulator(int dim);
  void add(const Eigen::VectorXd& x);
  void merge(const CovAccumulator& other);

  std::size_t count() const { return n_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  Eigen::MatrixXd covariance() const;  // unbiased

 private:
  std::size_t n_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd comoment_;
};

}  // namespace hml
