#include "hml/moment_space.hpp"

#include <cmath>
#include <limits>

namespace hml {

const char* interval_name(IntervalKind interval) {
  switch (interval) {
    case IntervalKind::unit: return "unit";
    case IntervalKind::halfline: return "halfline";
    case IntervalKind::realline: return "realline";
  }
  return "?";
}

IntervalKind interval_from_name(const std::string& name) {
  if (name == "unit") return IntervalKind::unit;
  if (name == "halfline") return IntervalKind::halfline;
  if (name == "realline") return IntervalKind::realline;
  throw DomainError("unknown interval: " + name);
}

namespace detail {

std::vector<double> ldlt_pivots(const Eigen::MatrixXd& a) {
  const std::size_t n = static_cast<std::size_t>(a.rows());
  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      flat[i * n + j] = a(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j));
  return ldlt_pivots_generic(std::move(flat), n);
}

namespace {

constexpr double kPivotEps = 1e-10;

bool strictly_pd(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return true;
  const auto pivots = detail::ldlt_pivots(a);
  if (pivots.size() != static_cast<std::size_t>(a.rows())) return false;
  double max_pivot = 0.0;
  for (double d : pivots) max_pivot = std::max(max_pivot, d);
  for (double d : pivots)
    if (!(d > kPivotEps * max_pivot)) return false;
  return true;
}

// (c0 + c1 (i+j) index shift) helpers for the Hankel families.
Eigen::MatrixXd hankel_shifted(const std::vector<double>& m, int size,
                               int shift) {
  auto mom = [&](int j) { return j == 0 ? 1.0 : m[j - 1]; };
  Eigen::MatrixXd h(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) h(i, j) = mom(i + j + shift);
  return h;
}

Eigen::MatrixXd hankel_diff(const std::vector<double>& m, int size,
                            int shift) {
  auto mom = [&](int j) { return j == 0 ? 1.0 : m[j - 1]; };
  Eigen::MatrixXd h(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      h(i, j) = mom(i + j + shift) - mom(i + j + shift + 1);
  return h;
}

}  // namespace
}  // namespace detail

bool is_interior(const MomentVector& mv) {
  using detail::hankel_diff;
  using detail::hankel_shifted;
  using detail::strictly_pd;
  const int n = static_cast<int>(mv.order());
  if (n == 0) return false;
  switch (mv.interval) {
    case IntervalKind::unit: {
      // Largest members of the four Hausdorff families H_ and H^bar at even
      // and odd orders; their leading principal minors cover lower orders.
      const int k_even = n / 2;            // H_(m_{i+j}), size k+1
      const int k_odd = (n - 1) / 2;       // H_(m_{i+j+1}), size k+1
      if (!strictly_pd(hankel_shifted(mv.m, k_even + 1, 0))) return false;
      if (!strictly_pd(hankel_shifted(mv.m, k_odd + 1, 1))) return false;
      if (k_even >= 1 && !strictly_pd(hankel_diff(mv.m, k_even, 1)))
        return false;
      if (!strictly_pd(hankel_diff(mv.m, k_odd + 1, 0))) return false;
      return true;
    }
    case IntervalKind::halfline: {
      const int k_even = n / 2;
      const int k_odd = (n - 1) / 2;
      if (!strictly_pd(hankel_shifted(mv.m, k_even + 1, 0))) return false;
      if (!strictly_pd(hankel_shifted(mv.m, k_odd + 1, 1))) return false;
      return true;
    }
    case IntervalKind::realline: {
      const int k = n / 2;  // vector length 2n'-1: constraint is H_{2n'-2} > 0
      return strictly_pd(hankel_shifted(mv.m, k + 1, 0));
    }
  }
  return false;
}

MomentBoundsResult moment_bounds(IntervalKind interval,
                                 const std::vector<double>& m_prefix) {
  if (interval == IntervalKind::realline)
    throw DomainError("moment_bounds: unsupported on the real line (both bounds infinite)");
  MomentVector prefix{interval, m_prefix};
  CanonicalCoords canon =
      m_prefix.empty() ? CanonicalCoords{interval, {}}
                       : moments_to_canonical(prefix);
  const std::size_t k = m_prefix.size() + 1;
  CanonicalCoords lo = canon;
  lo.coords.push_back(0.0);
  const double lower = canonical_to_moments(lo).m[k - 1];
  if (interval == IntervalKind::halfline)
    return {lower, std::numeric_limits<double>::infinity()};
  CanonicalCoords hi = canon;
  hi.coords.push_back(1.0);
  return {lower, canonical_to_moments(hi).m[k - 1]};
}

}  // namespace hml
