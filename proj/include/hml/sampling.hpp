#pragma once

// Seed-reproducible samplers for the canonical distributions on the three
// moment spaces:
//   [0,1]:    p_{n,i} ~ Beta(n-i+1, n-i+1)            (uniform moment vector)
//   [0,inf):  z_{n,k} ~ Gamma(gamma_k + n-k+1, delta_k)
//   R:        b_{n,k} ~ N(0, 1/(2 delta_{2k-1})), a_{n,k} ~ Gamma(gamma_k + 2n-2k, delta_{2k})
// plus the beta-Hermite tridiagonal model (Gaussian diagonal, (1/2)chi^2
// off-diagonal weights).

#include <vector>

#include "hml/moment_space.hpp"
#include "hml/rng.hpp"

namespace hml {

struct HalflineParams {
  int n = 1;
  std::vector<double> gamma;  // gamma_k > -(n-k+1)
  std::vector<double> delta;  // delta_k > 0

  // gamma == 0, delta_k = n-k+1: every z_k has mean exactly 1 (the scaling
  // of the half-line limit theorem).
  static HalflineParams unit_mean(int n, double gamma_const = 0.0);
  void validate() const;
};

struct ReallineParams {
  int n = 1;                  // coordinate count 2n-1
  std::vector<double> gamma;  // length n-1, gamma_k > -2(n-k)
  std::vector<double> delta;  // length 2n-1, positive

  // gamma == 0, delta_{2k} = 2(n-k), delta_{2k-1} = 1/2: a_k has mean one and
  // b_k ~ N(0,1) (the real-line limit theorem scaling).
  static ReallineParams unit_mean(int n, double gamma_const = 0.0);
  void validate() const;
};

// p_i ~ Beta(N-i+1, N-i+1), i = 1..take (take = N by default). A prefix draw
// has the same law as the first coordinates of the full vector, since the
// canonical coordinates are independent.
CanonicalCoords sample_unit_canonical(int N, RngStream& rng, int take = -1);
CanonicalCoords sample_unit_canonical(int N, SeedSpec seed, int take = -1);

CanonicalCoords sample_halfline_canonical(const HalflineParams& params,
                                          RngStream& rng);
CanonicalCoords sample_halfline_canonical(const HalflineParams& params,
                                          SeedSpec seed);

CanonicalCoords sample_realline_canonical(const ReallineParams& params,
                                          RngStream& rng);
CanonicalCoords sample_realline_canonical(const ReallineParams& params,
                                          SeedSpec seed);

// Dumitriu-Edelman model: alpha_i ~ N(0,1), beta_i ~ (1/2) chi^2_{beta(n-i)}.
JacobiCoefficients beta_hermite_matrix(int n, double beta, SeedSpec seed);

// Parameter overrides for sample_moment_vector; empty vectors select the
// unit-mean defaults above.
struct MomentLawParams {
  std::vector<double> gamma;
  std::vector<double> delta;
};

// Canonical sampler composed with canonical_to_moments.
MomentVector sample_moment_vector(IntervalKind interval, int N,
                                  const MomentLawParams& params, SeedSpec seed);

}  // namespace hml
