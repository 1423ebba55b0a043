#pragma once

// Moment vectors on [0,1], [0,inf) and R, Hankel matrix assembly, interior
// membership, moment range bounds, and the bidirectional transforms between
// ordinary moments and canonical coordinates.
//
// The transform core is templated on the scalar so the identical algorithm
// runs in double, extended precision, or exact rational arithmetic. The
// canonical parameterizations are
//   [0,1]:    p_l = (m_l - m_l^-)/(m_l^+ - m_l^-) in (0,1),
//   [0,inf):  z_l = (m_l - m_l^-)/(m_{l-1} - m_{l-1}^-) in (0,inf),
//   R:        interleaved recurrence data (b_1, a_1, ..., a_{n-1}, b_n).

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hml/errors.hpp"

namespace hml {

enum class IntervalKind { unit, halfline, realline };

const char* interval_name(IntervalKind interval);
IntervalKind interval_from_name(const std::string& name);

template <typename Scalar>
struct MomentVectorT {
  IntervalKind interval = IntervalKind::unit;
  std::vector<Scalar> m;  // (m_1, ..., m_N); m_0 is implicitly 1

  std::size_t order() const { return m.size(); }
};

template <typename Scalar>
struct CanonicalCoordsT {
  IntervalKind interval = IntervalKind::unit;
  // unit: p in (0,1)^N; halfline: z in (0,inf)^N;
  // realline: (b_1, a_1, b_2, ..., b_n), length 2n-1, a_i > 0.
  std::vector<Scalar> coords;

  std::size_t size() const { return coords.size(); }
};

// Three-term recurrence data of the monic orthogonal chain:
//   x P_k = P_{k+1} + alpha_{k+1} P_k + beta_k P_{k-1}.
template <typename Scalar>
struct JacobiCoefficientsT {
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
};

using MomentVector = MomentVectorT<double>;
using CanonicalCoords = CanonicalCoordsT<double>;
using JacobiCoefficients = JacobiCoefficientsT<double>;

struct MomentBoundsResult {
  double lower;
  double upper;  // +infinity on the half line
};

// (k+1) x (k+1) Hankel matrix (m_{i+j})_{i,j=0..k} with m_0 = 1.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> assemble_hankel(
    const MomentVectorT<Scalar>& mv, int k) {
  if (k < 0 || 2 * k > static_cast<int>(mv.order()))
    throw DomainError("assemble_hankel: order 2k exceeds available moments");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h(k + 1, k + 1);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j)
      h(i, j) = (i + j == 0) ? Scalar(1) : mv.m[i + j - 1];
  return h;
}

// True iff the vector lies in the interior of the moment space of its
// interval: strict positive definiteness of the interval-appropriate Hankel
// family, decided on LDL^T pivots with relative threshold 1e-10.
bool is_interior(const MomentVector& mv);

// Extreme feasible k-th moments for an interior prefix (m_1, ..., m_{k-1}).
// Unsupported on the real line (both bounds infinite).
MomentBoundsResult moment_bounds(IntervalKind interval,
                                 const std::vector<double>& m_prefix);

namespace detail {

// Pivots of the unpivoted LDL^T factorization; stops early after a
// nonpositive pivot (remaining entries unset). Used for interior tests and
// log-determinants.
std::vector<double> ldlt_pivots(const Eigen::MatrixXd& a);

// Scalar-generic variant on a row-major n x n buffer.
template <typename Scalar>
std::vector<Scalar> ldlt_pivots_generic(std::vector<Scalar> w, std::size_t n) {
  std::vector<Scalar> pivots;
  pivots.reserve(n);
  auto at = [&](std::size_t i, std::size_t j) -> Scalar& {
    return w[i * n + j];
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar d = at(j, j);
    pivots.push_back(d);
    if (!(d > Scalar(0))) break;
    for (std::size_t i = j + 1; i < n; ++i) {
      const Scalar l = at(i, j) / d;
      for (std::size_t k = j + 1; k < n; ++k) at(i, k) -= l * at(j, k);
    }
  }
  return pivots;
}

// zeta-chain of [0,1] canonical moments: zeta_1 = p_1, zeta_k = q_{k-1} p_k
// with q_0 = 1.
template <typename Scalar>
std::vector<Scalar> unit_zeta_chain(const std::vector<Scalar>& p) {
  std::vector<Scalar> chain(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    chain[k] = (k == 0) ? p[0] : (Scalar(1) - p[k - 1]) * p[k];
  return chain;
}

// Recurrence coefficients from a chain (zeta for [0,1], z for [0,inf)):
//   alpha_1 = c_1, alpha_{k+1} = c_{2k} + c_{2k+1}, beta_k = c_{2k-1} c_{2k}.
template <typename Scalar>
JacobiCoefficientsT<Scalar> chain_to_jacobi(const std::vector<Scalar>& chain) {
  const std::size_t len = chain.size();
  auto at = [&](std::size_t i) {  // 1-based, zero beyond the given chain
    return i <= len ? chain[i - 1] : Scalar(0);
  };
  JacobiCoefficientsT<Scalar> jac;
  jac.alpha.reserve((len + 1) / 2);
  jac.beta.reserve(len / 2);
  jac.alpha.push_back(at(1));
  for (std::size_t k = 1; 2 * k - 1 < len; ++k) {
    jac.beta.push_back(at(2 * k - 1) * at(2 * k));
    if (2 * k + 1 <= len) jac.alpha.push_back(at(2 * k) + at(2 * k + 1));
  }
  return jac;
}

// Moments m_1..m_n from recurrence coefficients via powers of the monic
// multiplication operator: m_k = (M^k)_{00} with M tridiagonal
// (subdiagonal 1, diagonal alpha, superdiagonal beta). Coefficients beyond
// the given chain are zero-padded; they cannot influence m_k for k <= n
// because a length-k return path from index 0 never reaches them.
template <typename Scalar>
std::vector<Scalar> jacobi_moments(const JacobiCoefficientsT<Scalar>& jac,
                                   std::size_t n) {
  const std::size_t size = n / 2 + 1;
  auto alpha = [&](std::size_t i) {  // 1-based
    return i <= jac.alpha.size() ? jac.alpha[i - 1] : Scalar(0);
  };
  auto beta = [&](std::size_t i) {
    return i <= jac.beta.size() ? jac.beta[i - 1] : Scalar(0);
  };
  std::vector<Scalar> v(size, Scalar(0)), next(size, Scalar(0));
  v[0] = Scalar(1);
  std::vector<Scalar> moments;
  moments.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      Scalar acc = alpha(i + 1) * v[i];
      if (i > 0) acc += v[i - 1];
      if (i + 1 < size) acc += beta(i + 1) * v[i + 1];
      next[i] = acc;
    }
    std::swap(v, next);
    moments.push_back(v[0]);
  }
  return moments;
}

template <typename Scalar>
void split_realline(const std::vector<Scalar>& coords,
                    std::vector<Scalar>& b, std::vector<Scalar>& a) {
  if (coords.size() % 2 == 0)
    throw DomainError("realline coordinates must have odd length (b_1, a_1, ..., b_n)");
  b.clear();
  a.clear();
  for (std::size_t i = 0; i < coords.size(); ++i)
    (i % 2 == 0 ? b : a).push_back(coords[i]);
}

}  // namespace detail

template <typename Scalar>
JacobiCoefficientsT<Scalar> canonical_to_jacobi(
    const CanonicalCoordsT<Scalar>& c) {
  switch (c.interval) {
    case IntervalKind::unit:
      return detail::chain_to_jacobi(detail::unit_zeta_chain(c.coords));
    case IntervalKind::halfline:
      return detail::chain_to_jacobi(c.coords);
    case IntervalKind::realline: {
      JacobiCoefficientsT<Scalar> jac;
      detail::split_realline(c.coords, jac.alpha, jac.beta);
      return jac;
    }
  }
  throw DomainError("canonical_to_jacobi: bad interval");
}

template <typename Scalar>
MomentVectorT<Scalar> canonical_to_moments(const CanonicalCoordsT<Scalar>& c) {
  MomentVectorT<Scalar> mv;
  mv.interval = c.interval;
  mv.m = detail::jacobi_moments(canonical_to_jacobi(c), c.size());
  return mv;
}

// Monic coefficients (constant term first) of P_n from the three-term
// recurrence P_{k+1} = (x - alpha_{k+1}) P_k - beta_k P_{k-1}; P_n is the
// characteristic polynomial of the associated tridiagonal matrix.
template <typename Scalar>
std::vector<Scalar> charpoly_from_recurrence(
    const JacobiCoefficientsT<Scalar>& jac) {
  std::vector<Scalar> prev;
  std::vector<Scalar> cur{Scalar(1)};
  for (std::size_t k = 0; k < jac.alpha.size(); ++k) {
    std::vector<Scalar> next(cur.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= jac.alpha[k] * cur[i];
    }
    if (k > 0)
      for (std::size_t i = 0; i < prev.size(); ++i)
        next[i] -= jac.beta[k - 1] * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Forward map via the bounds recursion: at step k the k-th moment is affine
// in the k-th coordinate, m_k = m_k^- + p_k (m_k^+ - m_k^-) with
// m_k^+ - m_k^- = prod_{i<k} p_i q_i on [0,1] (resp. m_k - m_k^- = z_k
// prod_{i<k} z_i on the half line), so each coordinate is recovered from the
// boundary extension of the already-recovered prefix.
template <typename Scalar>
CanonicalCoordsT<Scalar> moments_to_canonical(const MomentVectorT<Scalar>& mv) {
  const std::size_t n = mv.order();
  CanonicalCoordsT<Scalar> c;
  c.interval = mv.interval;

  if (mv.interval == IntervalKind::realline) {
    // Telescoped extraction of the recurrence data from the moment
    // functional L[x^j] = m_j applied to the monic chain:
    //   a_k = L[x^k P_k] / L[x^{k-1} P_{k-1}],
    //   b_{k+1} = L[x^{k+1} P_k] / L[x^k P_k] - (b_1 + ... + b_k).
    if (n % 2 == 0)
      throw DomainError("moments_to_canonical: realline needs odd length 2n-1");
    const std::size_t levels = (n + 1) / 2;
    auto mom = [&](std::size_t j) {  // L[x^j]
      return j == 0 ? Scalar(1) : mv.m[j - 1];
    };
    std::vector<Scalar> b{mv.m[0]}, a;
    Scalar b_sum = mv.m[0];
    std::vector<Scalar> prev;             // P_{k-1} coefficients, low to high
    std::vector<Scalar> cur{Scalar(1)};   // P_0 = 1
    Scalar s_prev = Scalar(1);            // L[x^{k-1} P_{k-1}], s_0 = 1
    for (std::size_t k = 1; k < levels; ++k) {
      std::vector<Scalar> next(cur.size() + 1, Scalar(0));
      for (std::size_t i = 0; i < cur.size(); ++i) {
        next[i + 1] += cur[i];
        next[i] -= b[k - 1] * cur[i];
      }
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= a[k - 2] * prev[i];
      prev = std::move(cur);
      cur = std::move(next);
      Scalar s = Scalar(0), u = Scalar(0);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        s += cur[i] * mom(k + i);
        u += cur[i] * mom(k + 1 + i);
      }
      if (!(s > Scalar(0)))
        throw BoundaryError("moments_to_canonical: vector not interior",
                            static_cast<int>(2 * k));
      a.push_back(s / s_prev);
      const Scalar bk = u / s - b_sum;
      b.push_back(bk);
      b_sum += bk;
      s_prev = s;
    }
    c.coords.reserve(n);
    for (std::size_t k = 0; k < levels; ++k) {
      c.coords.push_back(b[k]);
      if (k + 1 < levels) c.coords.push_back(a[k]);
    }
    return c;
  }

  const bool unit = (mv.interval == IntervalKind::unit);
  std::vector<Scalar> chain;  // zeta-chain (unit) or z itself (halfline)
  chain.reserve(n);
  c.coords.reserve(n);
  Scalar gap = Scalar(1);  // m_k^+ - m_k^- resp. m_{k-1} - m_{k-1}^-
  for (std::size_t k = 1; k <= n; ++k) {
    // k-th moment of the prefix extended with the lower boundary value
    // (p_k = 0 resp. z_k = 0); the zero must be an explicit chain entry so
    // the partially-determined boundary recurrence coefficient is emitted.
    chain.push_back(Scalar(0));
    const Scalar m_low =
        detail::jacobi_moments(detail::chain_to_jacobi(chain), k).back();
    chain.pop_back();
    const Scalar coord = (mv.m[k - 1] - m_low) / gap;
    const bool valid = unit ? (coord > Scalar(0) && coord < Scalar(1))
                            : (coord > Scalar(0));
    if (!valid)
      throw BoundaryError("moments_to_canonical: vector not interior",
                          static_cast<int>(k));
    c.coords.push_back(coord);
    if (unit) {
      gap = gap * coord * (Scalar(1) - coord);
      chain.push_back(k == 1 ? coord
                             : (Scalar(1) - c.coords[k - 2]) * coord);
    } else {
      gap = gap * coord;
      chain.push_back(coord);
    }
  }
  return c;
}

}  // namespace hml
