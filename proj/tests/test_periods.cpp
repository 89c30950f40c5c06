#include <doctest.h>

#include "bring/continuation.hpp"
#include "bring/periods.hpp"
#include "bring/quadrature.hpp"
#include "fixtures.hpp"

using namespace bring;

TEST_CASE("Gauss-Legendre is exact for low degree polynomials") {
  const GaussLegendre& gl = gauss_legendre(8);
  double s = 0.0, s14 = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    s += gl.weights[i];
    s14 += gl.weights[i] * std::pow(gl.nodes[i], 14);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
  CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("adaptive integration of a smooth function") {
  const Vec4c v = integrate_vector(
      [](double u) {
        Vec4c r;
        r << std::exp(u), std::cos(u), u * u, 1.0 / (1.0 + u * u);
        return r;
      },
      0.0, 1.0, {});
  CHECK(std::abs(v(0) - (std::exp(1.0) - 1.0)) < 1e-12);
  CHECK(std::abs(v(1) - std::sin(1.0)) < 1e-12);
  CHECK(std::abs(v(2) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(v(3) - kPi / 4.0) < 1e-12);
}

TEST_CASE("differentials over a contractible loop integrate to zero") {
  const cplx c(1.7, 1.7);
  const Segment loop = Segment::arc(c, 0.2, 0.0, 2.0 * kPi);
  for (cplx y0 : fiber_roots(c + 0.2)) {
    const SheetTrack t = track_sheet(loop, y0);
    CHECK(std::abs(t.y_end() - y0) < 1e-8);
    CHECK(integrate_track(t, {}).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("period matrix is proportional to the integer form") {
  const auto& p = test::periods();
  CHECK(p.fit.max_residual < 1e-10);
  CHECK(std::abs(p.fit.tau0.real() + 0.5) < 1e-10);
  CHECK(p.fit.tau0.imag() > 0.18);
  CHECK(p.fit.tau0.imag() < 0.19);
}

TEST_CASE("quadrature orders agree") {
  QuadratureOptions lo;
  lo.order = 16;
  const PeriodData d16 = period_matrices(test::homology().alphas, lo);
  CHECK((d16.tau - test::periods().data.tau).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Klein j at special points") {
  CHECK(std::abs(klein_j(kI) - 1728.0) < 1e-9);
  CHECK(std::abs(klein_j(std::polar(1.0, 2.0 * kPi / 3.0))) < 1e-8);
  CHECK(std::abs(klein_j(kI) - klein_j(kI + 1.0)) < 1e-9);
  CHECK(std::abs(klein_j(2.0 * kI) - 287496.0) < 1e-6);
  CHECK_THROWS(klein_j(cplx(0.0, -1.0)));
}

TEST_CASE("j-invariants of tau0 and 5 tau0") {
  const auto& p = test::periods();
  CHECK(std::abs(p.j_tau0 + 121945.0 / 32.0) < 1e-7);
  CHECK(std::abs(p.j_5tau0 + 12.5) < 1e-9);
}

TEST_CASE("symmetry relation and recovered actions") {
  const auto& p = test::periods();
  CHECK(p.symmetry_residual < 1e-12);
  CHECK(p.phi_action.M == test::homology().phi);
  CHECK(p.phi_action.rounding_error < 1e-8);
  CHECK(p.conj_action.rounding_error < 1e-8);
  CHECK(p.a_fit.relative_residual < 1e-10);
}

TEST_CASE("order two pullback is an involution in homology") {
  const auto& p = test::periods();
  CHECK(p.abar.residual < 1e-10);
  CHECK(p.abar_action.rounding_error < 1e-8);
  CHECK(is_symplectic(p.abar_action.M));
  CHECK(IntMat(p.abar_action.M * p.abar_action.M) == int_identity(8));
}

TEST_CASE("stored alpha periods reproduce the stage") {
  const PeriodStage again = run_periods(test::periods().data.alpha_periods);
  CHECK(again.data.tau == test::periods().data.tau);
  CHECK(again.fit.tau0 == test::periods().fit.tau0);
}
