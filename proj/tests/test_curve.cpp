#include <doctest.h>

#include <random>

#include "bring/curve.hpp"
#include "bring/discriminant.hpp"
#include "bring/polynomial.hpp"
#include "bring/puiseux.hpp"

using namespace bring;

TEST_CASE("plane models are homogeneous sextics") {
  CHECK(plane_curve().homogeneous());
  CHECK(cyclic_curve().homogeneous());
  CHECK(plane_curve().degree == 6);
}

TEST_CASE("cyclic model is invariant under the cyclic shift") {
  const PlaneCurve c = cyclic_curve();
  const PlaneCurve s = c.cyclic_shift();
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int i = 0; i < 10; ++i) {
    const ProjPoint v{cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
    CHECK(std::abs(c.eval(v) - s.eval(v)) <= 1e-10 * (1.0 + std::abs(c.eval(v))));
  }
}

TEST_CASE("linear change of variables relates the two models by a constant") {
  const EquivalenceReport r = verify_equivalence(50, 1);
  CHECK(r.samples == 50);
  CHECK(r.fitted_spread < 1e-10);
  CHECK(std::abs(r.fitted_constant.imag()) < 1e-8 * std::abs(r.fitted_constant));
  CHECK(std::abs(std::abs(r.fitted_constant) - std::abs(equivalence_constant())) <
        1e-9 * std::abs(equivalence_constant()));
}

TEST_CASE("singular points are common zeros of all partials") {
  const auto pts = singular_points();
  REQUIRE(!pts.empty());
  for (const auto& p : pts) {
    CHECK(p.max_partial < 1e-8);
    CHECK(std::abs(plane_curve().eval(p.point)) < 1e-8);
  }
}

TEST_CASE("order five symmetry exponent") {
  const SymmetryExponent e = order_five_exponent();
  CHECK(e.k >= 0);
  CHECK(e.residual < 1e-10);
}

TEST_CASE("theta-series parameterization lies on the curve") { CHECK(theta_series_check(0.1) < 1e-10); }

TEST_CASE("discriminant matches its factorization") {
  CHECK(discriminant_spot_check(50) < 1e-8);
  const IntPoly d = discriminant_x();
  REQUIRE(d.size() == 24);
  CHECK(d[3] != 0);
  CHECK(d[0] == 0);
}

TEST_CASE("Aberth finds the roots of a known polynomial") {
  // (x - 1)(x + 2)(x - i)(x + 0.5)
  const CVector roots_true{1.0, -2.0, cplx(0, 1), -0.5};
  CVector c{1.0};
  for (cplx r : roots_true) {
    CVector n(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= r * c[i];
    }
    c = n;
  }
  const CVector roots = aberth_roots(c);
  REQUIRE(roots.size() == 4);
  for (cplx r : roots_true) {
    double best = 1e300;
    for (cplx z : roots) best = std::min(best, std::abs(z - r));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("series inverse") {
  const CVector a{1.0, 2.0, -1.0};
  const CVector inv = series::inverse(a, 6);
  const CVector one = series::mul(a, inv, 6);
  CHECK(std::abs(one[0] - 1.0) < 1e-14);
  for (int i = 1; i < 6; ++i) CHECK(std::abs(one[i]) < 1e-12);
}

TEST_CASE("places over zero and infinity") {
  const auto zero = places_over(cplx(0.0));
  const auto inf = places_over(std::nullopt);
  int e0 = 0, einf = 0;
  for (const auto& p : zero) e0 += p.ram_index;
  for (const auto& p : inf) einf += p.ram_index;
  CHECK(e0 == 5);
  CHECK(einf == 5);
  for (const auto& p : zero) CHECK(expansion_residual(p, 6) < 1e-8);
  for (const auto& p : inf) CHECK(expansion_residual(p, 6) < 1e-8);
}

TEST_CASE("discriminant factorization holds exactly over the integers") {
  // -x^3 (256 u^2 - 837 u + 3456)(u - 1)^2, u = x^5
  IntPoly x3(4, 0), quad(11, 0), lin(6, 0);
  x3[3] = -1;
  quad[10] = 256;
  quad[5] = -837;
  quad[0] = 3456;
  lin[5] = 1;
  lin[0] = -1;
  const IntPoly f = poly_mul(poly_mul(x3, quad), poly_mul(lin, lin));
  CHECK(discriminant_x() == f);
  CHECK(branch_polynomial() == quad);
  CHECK(discriminant_constant() == 1);
}
