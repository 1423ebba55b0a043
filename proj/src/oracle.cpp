#include "hml/oracle.hpp"

#include <boost/multiprecision/integer.hpp>
#include <chrono>
#include <sstream>
#include <vector>

namespace hml {

namespace {

using Eigen::Index;

Rational rat(const BigInt& num, const BigInt& den) {
  Rational r(num);
  return r / Rational(den);
}

BigInt int_pow(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Rational rational_pow(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational exact_det(const RationalMatrix& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw DomainError("exact_det: matrix must be square");
  if (n == 0) return Rational(1);

  BigInt common = 1;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      common = boost::multiprecision::lcm(
          common, boost::multiprecision::denominator(m(i, j)));

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Rational scaled = m(i, j) * Rational(common);
      a[i][j] = boost::multiprecision::numerator(scaled);
    }

  // Bareiss: a[i][j] <- (a[i][j] a[k][k] - a[i][k] a[k][j]) / prev, with the
  // division exact by the Sylvester identity.
  int sign = 1;
  BigInt prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Rational(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return rat(sign * a[n - 1][n - 1], int_pow(common, static_cast<int>(n)));
}

Rational exact_det_cofactor(const RationalMatrix& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw DomainError("exact_det_cofactor: square matrices only");
  if (n > 8) throw DomainError("exact_det_cofactor: sizes <= 8");
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det = 0;
  int sign = 1;
  for (Index j = 0; j < n; ++j) {
    RationalMatrix minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    det += Rational(sign) * m(0, j) * exact_det_cofactor(minor);
    sign = -sign;
  }
  return det;
}

RationalMoments exact_canonical_to_moments(const RationalCoords& c) {
  return canonical_to_moments(c);
}

Rational exact_product_formula(const RationalCoords& c, int k) {
  const auto& x = c.coords;
  Rational det = 1;
  switch (c.interval) {
    case IntervalKind::unit: {
      if (static_cast<int>(x.size()) < 2 * k)
        throw DomainError("exact_product_formula: need 2k coordinates");
      if (k >= 1)
        det *= rational_pow(x[0] * (Rational(1) - x[0]) * x[1], k);
      for (int j = 2; j <= k; ++j)
        det *= rational_pow((Rational(1) - x[2 * j - 3]) * x[2 * j - 2] *
                                (Rational(1) - x[2 * j - 2]) * x[2 * j - 1],
                            k - j + 1);
      return det;
    }
    case IntervalKind::halfline: {
      if (static_cast<int>(x.size()) < 2 * k)
        throw DomainError("exact_product_formula: need 2k coordinates");
      for (int j = 1; j <= k; ++j)
        det *= rational_pow(x[2 * j - 2] * x[2 * j - 1], k - j + 1);
      return det;
    }
    case IntervalKind::realline: {
      if (static_cast<int>(x.size()) < 2 * k + 1)
        throw DomainError("exact_product_formula: need k a-coordinates");
      for (int j = 1; j <= k; ++j)
        det *= rational_pow(x[2 * j - 1], k - j + 1);
      return det;
    }
  }
  throw DomainError("exact_product_formula: bad interval");
}

namespace {

Rational random_rational(RngStream& rng, int num_lo, int num_hi, int den_hi) {
  const int den = 2 + static_cast<int>(rng.next_u64() % (den_hi - 1));
  const int span = num_hi - num_lo + 1;
  const int num = num_lo + static_cast<int>(rng.next_u64() % span);
  return rat(num, den);
}

RationalCoords random_coords(IntervalKind interval, int len, RngStream& rng) {
  RationalCoords c;
  c.interval = interval;
  c.coords.reserve(len);
  for (int i = 0; i < len; ++i) {
    switch (interval) {
      case IntervalKind::unit: {
        // p in (0,1): numerator 1..den-1
        const int den = 2 + static_cast<int>(rng.next_u64() % 63);
        const int num = 1 + static_cast<int>(rng.next_u64() % (den - 1));
        c.coords.push_back(rat(num, den));
        break;
      }
      case IntervalKind::halfline:
        c.coords.push_back(random_rational(rng, 1, 128, 64));
        break;
      case IntervalKind::realline:
        // interleaved: b free, a positive
        if (i % 2 == 0)
          c.coords.push_back(random_rational(rng, -64, 64, 64));
        else
          c.coords.push_back(random_rational(rng, 1, 128, 64));
        break;
    }
  }
  return c;
}

RationalMatrix shifted_hankel(const RationalMoments& mv, int size, int shift) {
  RationalMatrix h(size, size);
  auto mom = [&](int j) { return j == 0 ? Rational(1) : mv.m[j - 1]; };
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) h(i, j) = mom(i + j + shift);
  return h;
}

}  // namespace

CertifyReport certify_product_formula(IntervalKind interval, int k_max,
                                      int trials, SeedSpec seed) {
  if (k_max < 1 || k_max > 8)
    throw ConfigError("certify_product_formula: k_max must be in 1..8");
  const auto start = std::chrono::steady_clock::now();
  CertifyReport report;
  report.interval = interval;
  report.k_max = k_max;
  report.trials = trials;
  RngStream rng(seed);
  const int len =
      interval == IntervalKind::realline ? 2 * k_max + 1 : 2 * k_max;
  for (int t = 0; t < trials && report.ok; ++t) {
    const RationalCoords c = random_coords(interval, len, rng);
    const RationalMoments mv = exact_canonical_to_moments(c);
    for (int k = 1; k <= k_max; ++k) {
      const Rational lhs = exact_det(assemble_hankel(mv, k));
      const Rational rhs = exact_product_formula(c, k);
      ++report.checks;
      if (lhs != rhs) {
        std::ostringstream os;
        os << "trial " << t << " k=" << k << " det=" << lhs
           << " product=" << rhs;
        report.counterexample = os.str();
        report.ok = false;
        break;
      }
    }
    if (interval == IntervalKind::halfline && report.ok) {
      // det H_k = (m_k - m_k^-) det H_{k-2}, gap m_k - m_k^- = prod_{i<=k} z_i
      Rational gap = 1;
      for (int k = 1; k <= 2 * k_max && report.ok; ++k) {
        gap *= c.coords[k - 1];
        if (k < 2) continue;
        const int sz = k / 2 + 1, sz2 = (k - 2) / 2 + 1;
        const int shift = k % 2;
        const Rational lhs = exact_det(shifted_hankel(mv, sz, shift));
        const Rational rhs =
            gap * exact_det(shifted_hankel(mv, sz2, shift));
        ++report.checks;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "trial " << t << " recursion k=" << k << " det=" << lhs
             << " gap*det=" << rhs;
          report.counterexample = os.str();
          report.ok = false;
        }
      }
    }
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace hml
