#include "hml/stats.hpp"

#include <algorithm>
#include <cmath>

#include "hml/errors.hpp"

namespace hml {

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
  if (sample.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::max(f - i / n, (i + 1) / n - f));
  }
  return d;
}

double ks_pvalue(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  double p = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    p += 2.0 * sign * term;
    sign = -sign;
    if (term < 1e-16) break;
  }
  return std::min(1.0, std::max(0.0, p));
}

double log_mean_exp(const std::vector<double>& x) {
  if (x.empty()) throw DomainError("log_mean_exp: empty sample");
  const double m = *std::max_element(x.begin(), x.end());
  double acc = 0.0;
  for (double v : x) acc += std::exp(v - m);
  return m + std::log(acc / static_cast<double>(x.size()));
}

void MomentAccumulator::add(double x) {
  // Pebay one-pass central moment updates.
  const double n1 = static_cast<double>(n_);
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double dn = delta / n;
  const double dn2 = dn * dn;
  const double t1 = delta * dn * n1;
  mean_ += dn;
  m4_ += t1 * dn2 * (n * n - 3.0 * n + 3.0) + 6.0 * dn2 * m2_ - 4.0 * dn * m3_;
  m3_ += t1 * dn * (n - 2.0) - 3.0 * dn * m2_;
  m2_ += t1;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  const double d2 = delta * delta;
  const double m2 = m2_ + other.m2_ + d2 * na * nb / n;
  const double m3 = m3_ + other.m3_ +
                    delta * d2 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * other.m2_ - nb * m2_) / n;
  const double m4 =
      m4_ + other.m4_ +
      d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
      6.0 * d2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
      4.0 * delta * (na * other.m3_ - nb * m3_) / n;
  mean_ += delta * nb / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
  n_ += other.n_;
}

double MomentAccumulator::variance() const {
  return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}

double MomentAccumulator::fourth_central() const {
  return n_ > 0 ? m4_ / static_cast<double>(n_) : 0.0;
}

double MomentAccumulator::mean_standard_error() const {
  return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

double MomentAccumulator::variance_standard_error() const {
  if (n_ < 2) return 0.0;
  const double s2 = variance();
  const double spread = std::max(0.0, fourth_central() - s2 * s2);
  return std::sqrt(spread / static_cast<double>(n_));
}

CovAccumulator::CovAccumulator(int dim)
    : n_(0),
      mean_(Eigen::VectorXd::Zero(dim)),
      comoment_(Eigen::MatrixXd::Zero(dim, dim)) {}

void CovAccumulator::add(const Eigen::VectorXd& x) {
  ++n_;
  const Eigen::VectorXd delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  comoment_ += delta * (x - mean_).transpose();
}

void CovAccumulator::merge(const CovAccumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const Eigen::VectorXd delta = other.mean_ - mean_;
  comoment_ += other.comoment_ + (na * nb / (na + nb)) * delta * delta.transpose();
  mean_ += (nb / (na + nb)) * delta;
  n_ += other.n_;
}

Eigen::MatrixXd CovAccumulator::covariance() const {
  if (n_ < 2) return Eigen::MatrixXd::Zero(mean_.size(), mean_.size());
  return comoment_ / static_cast<double>(n_ - 1);
}

}  // namespace hml
