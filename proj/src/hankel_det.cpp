#include "hml/hankel_det.hpp"

#include <cmath>
#include <string>

namespace hml {

namespace {

// log of the j-th layer factor of the product formula (1-based j).
double layer_log(const CanonicalCoords& c, int j) {
  const auto& x = c.coords;
  switch (c.interval) {
    case IntervalKind::unit: {
      // layer j: q_{2j-2} p_{2j-1} q_{2j-1} p_{2j} (coordinates 1-based)
      if (j == 1) return std::log(x[0] * (1.0 - x[0]) * x[1]);
      return std::log((1.0 - x[2 * j - 3]) * x[2 * j - 2] *
                      (1.0 - x[2 * j - 2]) * x[2 * j - 1]);
    }
    case IntervalKind::halfline:
      return std::log(x[2 * j - 2] * x[2 * j - 1]);
    case IntervalKind::realline:
      return std::log(x[2 * j - 1]);  // a_j at interleaved position 2j-1
  }
  return 0.0;
}

}  // namespace

int max_product_order(const CanonicalCoords& c) {
  const int n = static_cast<int>(c.size());
  return c.interval == IntervalKind::realline ? (n - 1) / 2 : n / 2;
}

double logdet_direct(const MomentVector& m, int k) {
  const Eigen::MatrixXd h = assemble_hankel(m, k);
  const auto pivots = detail::ldlt_pivots(h);
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (!(pivots[i] > 0.0))
      throw PivotError("logdet_direct: nonpositive pivot at index " +
                           std::to_string(i),
                       static_cast<int>(i));
    const double term = std::log(pivots[i]);
    const double y = term - comp;  // Kahan
    const double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc;
}

HankelLogDet logdet_prefix_path(const CanonicalCoords& c, int k_max) {
  if (k_max < 0 || k_max > max_product_order(c))
    throw DomainError("logdet path: not enough coordinates for requested order");
  HankelLogDet path;
  path.interval = c.interval;
  path.method = LogDetMethod::product;
  path.values.resize(k_max + 1);
  path.values[0] = 0.0;
  // log det H_{2k} = sum_{j<=k} (k-j+1) L_j, so each step adds the running
  // layer sum. Both accumulators are Kahan-compensated; paths for k up to
  // a few thousand stay at ~1e-15 relative error.
  double layer_sum = 0.0, layer_comp = 0.0;
  double value = 0.0, value_comp = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double lk = layer_log(c, k);
    double y = lk - layer_comp;
    double t = layer_sum + y;
    layer_comp = (t - layer_sum) - y;
    layer_sum = t;

    y = layer_sum - value_comp;
    t = value + y;
    value_comp = (t - value) - y;
    value = t;
    path.values[k] = value;
  }
  return path;
}

double logdet_product(const CanonicalCoords& c, int k) {
  return logdet_prefix_path(c, k).values[k];
}

std::vector<double> logdet_process(const CanonicalCoords& c, int n,
                                   const std::vector<double>& grid) {
  if (n < 1) throw DomainError("logdet_process: n must be positive");
  int k_max = 0;
  for (double t : grid) {
    if (t < 0.0 || t > 1.0)
      throw DomainError("logdet_process: grid values must lie in [0,1]");
    k_max = std::max(k_max, static_cast<int>(std::floor(n * t)));
  }
  const HankelLogDet path = logdet_prefix_path(c, k_max);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid)
    out.push_back(path.values[static_cast<int>(std::floor(n * t))]);
  return out;
}

double arcsine_centering(int k) {
  if (k < 0) throw DomainError("arcsine_centering: k must be nonnegative");
  return -static_cast<double>(k) * (2.0 * k + 1.0) * std::log(2.0);
}

}  // namespace hml
