#include "hml/sampling.hpp"

#include <cmath>
#include <string>

namespace hml {

HalflineParams HalflineParams::unit_mean(int n, double gamma_const) {
  HalflineParams params;
  params.n = n;
  params.gamma.assign(n, gamma_const);
  params.delta.resize(n);
  for (int k = 1; k <= n; ++k)
    params.delta[k - 1] = n - k + 1 + gamma_const;
  params.validate();
  return params;
}

void HalflineParams::validate() const {
  if (n < 1 || gamma.size() != static_cast<std::size_t>(n) ||
      delta.size() != static_cast<std::size_t>(n))
    throw ConfigError("HalflineParams: need n gamma and n delta entries");
  for (int k = 1; k <= n; ++k) {
    if (!(gamma[k - 1] > -(n - k + 1)))
      throw ConfigError("HalflineParams: gamma_" + std::to_string(k) +
                        " must exceed -(n-k+1)");
    if (!(delta[k - 1] > 0.0))
      throw ConfigError("HalflineParams: delta must be positive");
  }
}

ReallineParams ReallineParams::unit_mean(int n, double gamma_const) {
  ReallineParams params;
  params.n = n;
  params.gamma.assign(n > 0 ? n - 1 : 0, gamma_const);
  params.delta.assign(2 * n - 1, 0.5);
  for (int k = 1; k <= n - 1; ++k)
    params.delta[2 * k - 1] = 2.0 * (n - k) + gamma_const;
  params.validate();
  return params;
}

void ReallineParams::validate() const {
  if (n < 1 || gamma.size() + 1 != static_cast<std::size_t>(n) ||
      delta.size() != static_cast<std::size_t>(2 * n - 1))
    throw ConfigError("ReallineParams: need n-1 gamma and 2n-1 delta entries");
  for (int k = 1; k <= n - 1; ++k)
    if (!(gamma[k - 1] > -2.0 * (n - k)))
      throw ConfigError("ReallineParams: gamma_" + std::to_string(k) +
                        " must exceed -2(n-k)");
  for (double d : delta)
    if (!(d > 0.0)) throw ConfigError("ReallineParams: delta must be positive");
}

CanonicalCoords sample_unit_canonical(int N, RngStream& rng, int take) {
  if (N < 1) throw ConfigError("sample_unit_canonical: N must be >= 1");
  if (take < 0) take = N;
  if (take > N) throw ConfigError("sample_unit_canonical: take > N");
  CanonicalCoords c;
  c.interval = IntervalKind::unit;
  c.coords.resize(take);
  for (int i = 1; i <= take; ++i) {
    const double a = N - i + 1;
    c.coords[i - 1] = rng.beta(a, a);
  }
  return c;
}

CanonicalCoords sample_unit_canonical(int N, SeedSpec seed, int take) {
  RngStream rng(seed);
  return sample_unit_canonical(N, rng, take);
}

CanonicalCoords sample_halfline_canonical(const HalflineParams& params,
                                          RngStream& rng) {
  params.validate();
  CanonicalCoords c;
  c.interval = IntervalKind::halfline;
  c.coords.resize(params.n);
  for (int k = 1; k <= params.n; ++k) {
    const double shape = params.gamma[k - 1] + params.n - k + 1;
    c.coords[k - 1] = rng.gamma(shape, params.delta[k - 1]);
  }
  return c;
}

CanonicalCoords sample_halfline_canonical(const HalflineParams& params,
                                          SeedSpec seed) {
  RngStream rng(seed);
  return sample_halfline_canonical(params, rng);
}

CanonicalCoords sample_realline_canonical(const ReallineParams& params,
                                          RngStream& rng) {
  params.validate();
  const int n = params.n;
  CanonicalCoords c;
  c.interval = IntervalKind::realline;
  c.coords.resize(2 * n - 1);
  for (int k = 1; k <= n; ++k) {
    const double sd = 1.0 / std::sqrt(2.0 * params.delta[2 * k - 2]);
    c.coords[2 * k - 2] = sd * rng.normal();
    if (k < n) {
      const double shape = params.gamma[k - 1] + 2.0 * (n - k);
      c.coords[2 * k - 1] = rng.gamma(shape, params.delta[2 * k - 1]);
    }
  }
  return c;
}

CanonicalCoords sample_realline_canonical(const ReallineParams& params,
                                          SeedSpec seed) {
  RngStream rng(seed);
  return sample_realline_canonical(params, rng);
}

JacobiCoefficients beta_hermite_matrix(int n, double beta, SeedSpec seed) {
  if (n < 1 || !(beta > 0.0))
    throw ConfigError("beta_hermite_matrix: need n >= 1 and beta > 0");
  RngStream rng(seed);
  JacobiCoefficients jac;
  jac.alpha.resize(n);
  jac.beta.resize(n - 1);
  for (int i = 1; i <= n; ++i) {
    jac.alpha[i - 1] = rng.normal();
    if (i < n) jac.beta[i - 1] = rng.gamma(0.5 * beta * (n - i), 1.0);
  }
  return jac;
}

MomentVector sample_moment_vector(IntervalKind interval, int N,
                                  const MomentLawParams& params,
                                  SeedSpec seed) {
  RngStream rng(seed);
  CanonicalCoords c;
  switch (interval) {
    case IntervalKind::unit:
      c = sample_unit_canonical(N, rng);
      break;
    case IntervalKind::halfline: {
      HalflineParams hp = HalflineParams::unit_mean(N);
      if (!params.gamma.empty()) hp.gamma = params.gamma;
      if (!params.delta.empty()) hp.delta = params.delta;
      hp.validate();
      c = sample_halfline_canonical(hp, rng);
      break;
    }
    case IntervalKind::realline: {
      if (N % 2 == 0)
        throw ConfigError("sample_moment_vector: realline N must be odd (2n-1)");
      ReallineParams rp = ReallineParams::unit_mean((N + 1) / 2);
      if (!params.gamma.empty()) rp.gamma = params.gamma;
      if (!params.delta.empty()) rp.delta = params.delta;
      rp.validate();
      c = sample_realline_canonical(rp, rng);
      break;
    }
  }
  return canonical_to_moments(c);
}

}  // namespace hml
