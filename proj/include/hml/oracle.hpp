#pragma once

// Exact rational-arithmetic mini-implementation certifying the
// floating-point core: the canonical-coordinate transforms instantiated with
// exact rationals, a fraction-free (Bareiss) determinant, and the
// certification of the canonical product formulas against exact Hankel
// determinants at small orders.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <string>

#include "hml/moment_space.hpp"
#include "hml/rng.hpp"

namespace hml {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMoments = MomentVectorT<Rational>;
using RationalCoords = CanonicalCoordsT<Rational>;

// Exact determinant by Bareiss fraction-free elimination on the
// denominator-cleared integer matrix.
Rational exact_det(const RationalMatrix& m);

// Naive cofactor expansion, sizes <= 8; self-check partner of exact_det.
Rational exact_det_cofactor(const RationalMatrix& m);

// The moment-space transforms in exact arithmetic.
RationalMoments exact_canonical_to_moments(const RationalCoords& c);

// Exact product-formula value of det H_{2k}.
Rational exact_product_formula(const RationalCoords& c, int k);

struct CertifyReport {
  bool ok = true;
  IntervalKind interval = IntervalKind::unit;
  int k_max = 0;
  int trials = 0;
  int checks = 0;             // individual exact identities verified
  std::string counterexample;  // first failure, verbatim; empty if ok
  double seconds = 0.0;
};

// For `trials` random small-denominator rational coordinate vectors, checks
// exact equality of the product formula with the exact determinant for every
// k <= k_max; on the half line additionally certifies the recursion
// det H_k = (m_k - m_k^-) det H_{k-2}.
CertifyReport certify_product_formula(IntervalKind interval, int k_max,
                                      int trials, SeedSpec seed);

}  // namespace hml
