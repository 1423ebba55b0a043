#include "hml/limit_theory.hpp"

#include <cmath>

#include "hml/errors.hpp"

namespace hml {

namespace {

void check_unit_range(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError(std::string(who) + ": argument outside [0,1]");
}

}  // namespace

double r_drift(double t) {
  check_unit_range(t, "r");
  if (t == 1.0) return 1.0;  // 0 log 0 := 0
  return t + (1.0 - t) * std::log1p(-t);
}

double kernel_f(double s, double t) {
  check_unit_range(s, "kernel_f");
  check_unit_range(t, "kernel_f");
  const double lo = std::min(s, t), hi = std::max(s, t);
  double v = lo * (2.0 - hi);
  if (lo < 1.0) v -= (s + t - 2.0) * std::log1p(-lo);
  // lo == 1 forces s = t = 1 and the log factor carries weight 0
  return v;
}

double kernel_g(double s, double t) {
  check_unit_range(s, "kernel_g");
  check_unit_range(t, "kernel_g");
  const double lo = std::min(s, t), hi = std::max(s, t);
  // Expanding (t-x)(s-x)/(1-x) and integrating term by term gives the log
  // coefficient -(s-1)(t-1); certified against adaptive quadrature of the
  // integral form.
  double v = 0.5 * lo * (s + t - 2.0 + hi);
  if (lo < 1.0) v -= (s - 1.0) * (t - 1.0) * std::log1p(-lo);
  return v;
}

Eigen::MatrixXd sigma_fixed_k(int k) {
  if (k < 1) throw DomainError("sigma_fixed_k: k must be >= 1");
  Eigen::MatrixXd s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = std::min(i, j) + 1;
  return s;
}

LimitSpec LimitSpec::for_interval(IntervalKind interval) {
  switch (interval) {
    case IntervalKind::unit:
      return {interval, 0.0, 1.0, KernelId::f_unit};
    case IntervalKind::halfline:
      return {interval, -0.5, 1.0, KernelId::g_halfline};
    case IntervalKind::realline:
      return {interval, -0.25, 0.5, KernelId::g_half_realline};
  }
  throw DomainError("LimitSpec: bad interval");
}

KernelGrid build_kernel_grid(const LimitSpec& spec,
                             const std::vector<double>& grid) {
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw DomainError("build_kernel_grid: grid must be strictly increasing");
  const auto kernel =
      spec.kernel == KernelId::f_unit ? kernel_f : kernel_g;
  const int n = static_cast<int>(grid.size());
  KernelGrid kg;
  kg.grid = grid;
  kg.kernel_id = spec.kernel;
  kg.gram.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = spec.cov_scale * kernel(grid[i], grid[j]);
      kg.gram(i, j) = v;
      kg.gram(j, i) = v;
    }
  const double scale = std::max(1.0, kg.gram.diagonal().maxCoeff());
  for (double jitter : {0.0, 1e-12, 1e-11, 1e-10, 1e-9}) {
    Eigen::MatrixXd a = kg.gram;
    a.diagonal().array() += jitter * scale;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() == Eigen::Success) {
      kg.chol = llt.matrixL();
      kg.jitter = jitter * scale;
      return kg;
    }
  }
  throw DomainError("build_kernel_grid: factorization failed at max jitter (invalid grid?)");
}

Eigen::MatrixXd sample_limit_paths(const LimitSpec& spec,
                                   const std::vector<double>& grid,
                                   int n_paths, SeedSpec seed) {
  if (n_paths < 0) throw DomainError("sample_limit_paths: n_paths < 0");
  const KernelGrid kg = build_kernel_grid(spec, grid);
  const int m = static_cast<int>(grid.size());
  Eigen::VectorXd mean(m);
  for (int j = 0; j < m; ++j) mean(j) = spec.mean_scale * r_drift(grid[j]);
  RngStream rng(seed);
  Eigen::MatrixXd paths(n_paths, m);
  Eigen::VectorXd xi(m);
  for (int p = 0; p < n_paths; ++p) {
    for (int j = 0; j < m; ++j) xi(j) = rng.normal();
    paths.row(p) = (mean + kg.chol * xi).transpose();
  }
  return paths;
}

std::vector<double> standardized_process(IntervalKind interval,
                                         const CanonicalCoords& c, int n,
                                         const std::vector<double>& grid) {
  if (c.interval != interval)
    throw DomainError("standardized_process: coordinate interval mismatch");
  const int horizon = interval == IntervalKind::realline ? n - 1 : n;
  const std::vector<double> logdets = logdet_process(c, horizon, grid);
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (interval == IntervalKind::unit) {
      const int k = static_cast<int>(std::floor(n * grid[i]));
      out[i] = 2.0 / std::sqrt(static_cast<double>(n)) *
               (logdets[i] - arcsine_centering(k) +
                0.5 * n * r_drift(grid[i]));
    } else {
      out[i] = logdets[i] / n;
    }
  }
  return out;
}

}  // namespace hml
