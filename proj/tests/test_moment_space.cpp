#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "hml/errors.hpp"
#include "hml/moment_space.hpp"
#include "hml/rng.hpp"

using namespace hml;

namespace {

template <typename Scalar>
CanonicalCoordsT<Scalar> random_coords(IntervalKind interval, int len,
                                       RngStream& rng, double margin) {
  CanonicalCoordsT<Scalar> c;
  c.interval = interval;
  for (int i = 0; i < len; ++i) {
    double v = 0.0;
    switch (interval) {
      case IntervalKind::unit:
        v = margin + (1.0 - 2.0 * margin) * rng.uniform();
        break;
      case IntervalKind::halfline:
        v = margin + (4.0 - margin) * rng.uniform();
        break;
      case IntervalKind::realline:
        v = (i % 2 == 0) ? 2.0 * rng.uniform() - 1.0
                         : margin + (4.0 - margin) * rng.uniform();
        break;
    }
    c.coords.push_back(Scalar(v));
  }
  return c;
}

template <typename Scalar>
double roundtrip_max_rel_error(const CanonicalCoordsT<Scalar>& c) {
  const auto mv = canonical_to_moments(c);
  const auto back = moments_to_canonical(mv);
  Scalar worst(0);
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    Scalar denom = c.coords[i];
    if (denom < Scalar(0)) denom = -denom;
    if (denom < Scalar(1)) denom = Scalar(1);
    Scalar err = (back.coords[i] - c.coords[i]) / denom;
    if (err < Scalar(0)) err = -err;
    if (err > worst) worst = err;
  }
  return static_cast<double>(worst);
}

}  // namespace

TEST_CASE("assemble_hankel") {
  MomentVector arcsine{IntervalKind::unit, {0.5, 0.375}};
  const Eigen::MatrixXd h1 = assemble_hankel(arcsine, 1);
  CHECK(h1(0, 0) == 1.0);
  CHECK(h1(0, 1) == 0.5);
  CHECK(h1(1, 0) == 0.5);
  CHECK(h1(1, 1) == 0.375);

  CHECK(assemble_hankel(arcsine, 0)(0, 0) == 1.0);

  MomentVector catalan{IntervalKind::realline, {0.0, 1.0, 0.0, 2.0}};
  const Eigen::MatrixXd h2 = assemble_hankel(catalan, 2);
  CHECK(h2(0, 2) == 1.0);
  CHECK(h2(1, 1) == 1.0);
  CHECK(h2(2, 2) == 2.0);
  CHECK(h2(1, 2) == 0.0);

  CHECK_THROWS_AS(assemble_hankel(arcsine, 2), DomainError);
}

TEST_CASE("is_interior") {
  CHECK(is_interior({IntervalKind::unit, {0.5, 0.375, 0.3125}}));
  CHECK_FALSE(is_interior({IntervalKind::unit, {0.5, 0.25}}));  // m2 = m1^2
  CHECK(is_interior({IntervalKind::halfline, {1.0, 2.0, 5.0}}));
  CHECK_FALSE(is_interior({IntervalKind::halfline, {1.0, 1.0}}));
  CHECK(is_interior({IntervalKind::realline, {0.0, 1.0, 0.0}}));
  // exterior: m2 > m1 impossible on [0,1]
  CHECK_FALSE(is_interior({IntervalKind::unit, {0.5, 0.7}}));
}

TEST_CASE("moment_bounds") {
  const auto b2 = moment_bounds(IntervalKind::unit, {0.5});
  CHECK(b2.lower == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(b2.upper == doctest::Approx(0.5).epsilon(1e-14));

  const auto b1 = moment_bounds(IntervalKind::unit, {});
  CHECK(b1.lower == 0.0);
  CHECK(b1.upper == 1.0);

  const auto h2 = moment_bounds(IntervalKind::halfline, {1.0});
  CHECK(h2.lower == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::isinf(h2.upper));

  CHECK_THROWS_AS(moment_bounds(IntervalKind::realline, {0.0}), DomainError);
  CHECK_THROWS_AS(moment_bounds(IntervalKind::unit, {0.5, 0.25}),
                  BoundaryError);
}

TEST_CASE("moments_to_canonical examples") {
  const auto arcsine = moments_to_canonical(
      MomentVector{IntervalKind::unit, {0.5, 0.375, 0.3125, 35.0 / 128.0}});
  for (double p : arcsine.coords) CHECK(p == doctest::Approx(0.5).epsilon(1e-12));

  const auto herm = moments_to_canonical(
      MomentVector{IntervalKind::realline, {0.0, 1.0, 0.0}});
  CHECK(herm.coords[0] == doctest::Approx(0.0));
  CHECK(herm.coords[1] == doctest::Approx(1.0));
  CHECK(herm.coords[2] == doctest::Approx(0.0));

  const auto exp1 = moments_to_canonical(
      MomentVector{IntervalKind::halfline, {1.0, 2.0, 6.0}});
  CHECK(exp1.coords[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(exp1.coords[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(exp1.coords[2] == doctest::Approx(2.0).epsilon(1e-13));

  CHECK_THROWS_AS(
      moments_to_canonical(MomentVector{IntervalKind::realline, {0.0, 1.0}}),
      DomainError);
  CHECK_THROWS_AS(
      moments_to_canonical(MomentVector{IntervalKind::unit, {0.5, 0.25}}),
      BoundaryError);
  try {
    moments_to_canonical(MomentVector{IntervalKind::unit, {0.5, 0.25, 0.2}});
  } catch (const BoundaryError& e) {
    CHECK(e.order == 2);  // first failing order
  }
}

TEST_CASE("canonical_to_moments examples") {
  const auto arcsine = canonical_to_moments(
      CanonicalCoords{IntervalKind::unit, {0.5, 0.5}});
  CHECK(arcsine.m[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(arcsine.m[1] == doctest::Approx(0.375).epsilon(1e-15));

  const auto semicircle = canonical_to_moments(
      CanonicalCoords{IntervalKind::realline, {0.0, 1.0, 0.0, 1.0, 0.0}});
  CHECK(semicircle.m[0] == 0.0);
  CHECK(semicircle.m[1] == 1.0);
  CHECK(semicircle.m[2] == 0.0);
  CHECK(semicircle.m[3] == 2.0);
  CHECK(semicircle.m[4] == 0.0);

  RngStream rng({11, 0});
  for (int i = 0; i < 20; ++i) {
    const auto c = random_coords<double>(IntervalKind::unit, 5, rng, 0.05);
    CHECK(canonical_to_moments(c).m[0] == doctest::Approx(c.coords[0]));
  }
}

TEST_CASE("canonical_to_jacobi") {
  const auto arcsine = canonical_to_jacobi(
      CanonicalCoords{IntervalKind::unit, std::vector<double>(8, 0.5)});
  CHECK(arcsine.alpha[0] == doctest::Approx(0.5));
  CHECK(arcsine.alpha[1] == doctest::Approx(0.5));
  CHECK(arcsine.alpha[2] == doctest::Approx(0.5));
  CHECK(arcsine.beta[0] == doctest::Approx(0.125));
  CHECK(arcsine.beta[1] == doctest::Approx(0.0625));
  CHECK(arcsine.beta[2] == doctest::Approx(0.0625));

  const auto realline = canonical_to_jacobi(
      CanonicalCoords{IntervalKind::realline, {0.3, 1.5, -0.2, 0.7, 0.1}});
  CHECK(realline.alpha == std::vector<double>{0.3, -0.2, 0.1});
  CHECK(realline.beta == std::vector<double>{1.5, 0.7});

  const auto laguerre = canonical_to_jacobi(
      CanonicalCoords{IntervalKind::halfline, {1.0, 1.0, 2.0}});
  CHECK(laguerre.alpha[0] == doctest::Approx(1.0));
  CHECK(laguerre.beta[0] == doctest::Approx(1.0));
  CHECK(laguerre.alpha[1] == doctest::Approx(3.0));
}

TEST_CASE("round trips in double at conservative orders") {
  // Double-stored moments pin the high canonical coordinates only while the
  // moment gaps stay well above machine precision, so the double-precision
  // check keeps the coordinates central and N <= 10; the N <= 20 margin-0.05
  // regime runs in extended precision below.
  RngStream rng({42, 0});
  for (IntervalKind interval :
       {IntervalKind::unit, IntervalKind::halfline, IntervalKind::realline}) {
    for (int trial = 0; trial < 200; ++trial) {
      int len = 1 + static_cast<int>(rng.next_u64() % 10);
      if (interval == IntervalKind::realline) len |= 1;
      CanonicalCoordsT<double> c;
      c.interval = interval;
      for (int i = 0; i < len; ++i) {
        switch (interval) {
          case IntervalKind::unit:
            c.coords.push_back(0.3 + 0.4 * rng.uniform());
            break;
          case IntervalKind::halfline:
            c.coords.push_back(0.7 + 0.8 * rng.uniform());
            break;
          case IntervalKind::realline:
            c.coords.push_back(i % 2 == 0 ? 0.8 * rng.uniform() - 0.4
                                          : 0.7 + 0.8 * rng.uniform());
            break;
        }
      }
      CHECK(roundtrip_max_rel_error(c) < 1e-9);
    }
  }
}

TEST_CASE("round trips in extended precision at N <= 20") {
  RngStream rng({43, 0});
  for (IntervalKind interval :
       {IntervalKind::unit, IntervalKind::halfline, IntervalKind::realline}) {
    for (int trial = 0; trial < 100; ++trial) {
      int len = 1 + static_cast<int>(rng.next_u64() % 20);
      if (interval == IntervalKind::realline) len = std::min(len | 1, 19);
      const auto c = random_coords<__float128>(interval, len, rng, 0.05);
      CHECK(roundtrip_max_rel_error(c) < 1e-9);
    }
  }
}

TEST_CASE("unit canonical vectors map into the interior") {
  // Pivot magnitudes decay like prod p_i q_i, so the double LDL^T interior
  // test resolves interiority up to N ~ 12 for central coordinates.
  RngStream rng({7, 0});
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 1 + static_cast<int>(rng.next_u64() % 12);
    const auto c = random_coords<double>(IntervalKind::unit, len, rng, 0.3);
    const auto mv = canonical_to_moments(c);
    CHECK(is_interior(mv));
    for (double m : mv.m) {
      CHECK(m > 0.0);
      CHECK(m < 1.0);
    }
  }
}

TEST_CASE("boundary coordinates drive the moment to its bounds") {
  const std::vector<double> prefix{0.3, 0.6};
  CanonicalCoords base{IntervalKind::unit, prefix};
  const auto mv_prefix = canonical_to_moments(base);
  const auto bounds = moment_bounds(IntervalKind::unit,
                                    {mv_prefix.m[0], mv_prefix.m[1]});
  for (double pk : {1e-6, 1.0 - 1e-6}) {
    CanonicalCoords c = base;
    c.coords.push_back(pk);
    const double m3 = canonical_to_moments(c).m[2];
    const double target = pk < 0.5 ? bounds.lower : bounds.upper;
    CHECK(std::abs(m3 - target) < 1e-4);
  }
}

TEST_CASE("realline recurrence data integrates correctly against its quadrature measure") {
  // Build the Gaussian-quadrature measure of the Jacobi matrix and verify
  //   int x^k P_k dmu = a_1...a_k,
  //   int x^{k+1} P_k dmu = a_1...a_k (b_1 + ... + b_{k+1}).
  RngStream rng({5, 0});
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5;
    const auto c =
        random_coords<double>(IntervalKind::realline, 2 * n - 1, rng, 0.3);
    const auto jac = canonical_to_jacobi(c);
    const int dim = n;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      j(i, i) = jac.alpha[i];
      if (i + 1 < dim) {
        j(i, i + 1) = std::sqrt(jac.beta[i]);
        j(i + 1, i) = j(i, i + 1);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    const Eigen::VectorXd nodes = es.eigenvalues();
    Eigen::VectorXd weights(dim);
    for (int i = 0; i < dim; ++i)
      weights(i) = es.eigenvectors()(0, i) * es.eigenvectors()(0, i);

    auto eval_p = [&](int k, double x) {
      double pm = 0.0, cur = 1.0;
      for (int i = 0; i < k; ++i) {
        const double next =
            (x - jac.alpha[i]) * cur - (i > 0 ? jac.beta[i - 1] * pm : 0.0);
        pm = cur;
        cur = next;
      }
      return cur;
    };

    double a_prod = 1.0, b_sum = jac.alpha[0];
    for (int k = 1; k < n; ++k) {
      a_prod *= jac.beta[k - 1];
      b_sum += jac.alpha[k];
      double ik = 0.0, ik1 = 0.0;
      for (int i = 0; i < dim; ++i) {
        const double pk = eval_p(k, nodes(i));
        ik += weights(i) * std::pow(nodes(i), k) * pk;
        ik1 += weights(i) * std::pow(nodes(i), k + 1) * pk;
      }
      CHECK(ik == doctest::Approx(a_prod).epsilon(1e-9));
      CHECK(ik1 == doctest::Approx(a_prod * b_sum).epsilon(1e-8));
    }
  }
}
