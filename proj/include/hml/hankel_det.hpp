#pragma once

// Hankel log-determinants by two independent routes: direct LDL^T
// factorization in log space, and the canonical-coordinate product formulas
//   [0,1]:    det H_{2k} = (p1 q1 p2)^k prod_{j>=2} (q_{2j-2} p_{2j-1} q_{2j-1} p_{2j})^{k-j+1}
//   [0,inf):  det H_{2k} = prod_j (z_{2j-1} z_{2j})^{k-j+1}
//   R:        det H_{2k} = prod_j a_j^{k-j+1}
// plus the arcsine reference centering.

#include <vector>

#include "hml/moment_space.hpp"

namespace hml {

enum class LogDetMethod { direct, product };

struct HankelLogDet {
  IntervalKind interval = IntervalKind::unit;
  // values[k] = log det H_{2k}, k = 0..K; values[0] = 0.
  std::vector<double> values;
  LogDetMethod method = LogDetMethod::product;
};

// log det of assemble_hankel(m, k) as the sum of log LDL^T pivots.
// Throws PivotError (with the failing pivot index) on nonpositive pivots.
double logdet_direct(const MomentVector& m, int k);

// Product-formula evaluation; needs 2k coordinates (unit/halfline) or k
// a-coordinates (realline).
double logdet_product(const CanonicalCoords& c, int k);

// Full prefix path values[0..k_max] of the product formula, evaluated
// incrementally in O(k_max).
HankelLogDet logdet_prefix_path(const CanonicalCoords& c, int k_max);

// Path sampled at k = floor(n t) over the given t-grid.
std::vector<double> logdet_process(const CanonicalCoords& c, int n,
                                   const std::vector<double>& grid);

// log det H^0_{2k} of the arcsine moments: -k(2k+1) log 2.
double arcsine_centering(int k);

// Largest k for which the product formula is evaluable with these
// coordinates.
int max_product_order(const CanonicalCoords& c);

}  // namespace hml
