#include <doctest.h>

#include <set>

#include "bring/continuation.hpp"
#include "bring/riemann.hpp"
#include "fixtures.hpp"

using namespace bring;

TEST_CASE("Abel map graph is consistent") {
  const AbelMap& a = test::abel();
  CHECK(a.state_count() > 0);
  CHECK(a.consistency_checks() > 0);
  CHECK(a.path_consistency() < 1e-10);
}

TEST_CASE("Abel map is path independent modulo the lattice") {
  const AbelMap& a = test::abel();
  for (cplx x : {cplx(0.5, 0.9), cplx(-1.3, 0.2)}) {
    for (cplx y : fiber_roots(x)) {
      const Vec4c d = a.to_point(x, y, 0) - a.to_point(x, y, 1);
      CHECK(a.lattice().distance(d) < 1e-9);
    }
  }
}

TEST_CASE("Abel map vanishes at the base point") {
  const AbelMap& a = test::abel();
  const cplx x(1e-6, 0.0);
  cplx y = 0.0;
  double best = 1e300;
  for (cplx r : fiber_roots(x))
    if (std::abs(r) < best) {
      best = std::abs(r);
      y = r;
    }
  CHECK(a.lattice().distance(a.to_point(x, y)) < 1e-2);
}

TEST_CASE("Smith constraint on 2K") {
  const auto& c = test::riemann().constraint;
  CHECK(c.diagonal == std::vector<long long>{1, 1, 1, 1, 1, 1, 5, 5});
  CHECK(c.candidates.size() == 25);
  CHECK(c.distinct_residues == 25);
  CHECK(c.distinct_values == 25);
  CHECK(c.congruences_annihilate);
  CHECK(c.congruences_equivalent);
}

TEST_CASE("constraint rejects a matrix without a singular-free difference") {
  const auto& p = test::periods();
  CHECK_THROWS(constrain_2K(int_identity(8), p.data.Pi, Mat4c::Identity(), p.data.tau));
}

TEST_CASE("canonical divisor route picks one candidate") {
  const auto& r = test::riemann();
  CHECK(r.resolved >= 0);
  CHECK(r.resolved_distance < 1e-8);
}

TEST_CASE("half-period search") {
  const auto& r = test::riemann();
  const auto& plus = r.search[0];
  CHECK(plus.sign == 1);
  CHECK(plus.unique);
  CHECK(plus.passing == 1);
  CHECK(plus.separation >= 100.0);
  CHECK(r.search[1].passing == 0);
  CHECK(r.chosen == 0);
}

TEST_CASE("theta does not vanish for a wrong half-period shift") {
  const auto& r = test::riemann();
  const Theta& th = test::theta();
  const Mat4c& tau = th.lattice().tau();
  Vec4c shift = Vec4c::Zero();
  shift(0) = 0.5;
  shift += 0.5 * tau.col(2);
  const Vec4c wrong = r.K + shift;
  double right_max = 0.0, wrong_min = 1e300;
  for (const auto& d : r.divisors) {
    right_max = std::max(right_max, th.reduced_abs(d.image + r.K));
    wrong_min = std::min(wrong_min, th.reduced_abs(d.image + wrong));
  }
  CHECK(wrong_min > 100.0 * right_max);
}

TEST_CASE("K_Q matches the closed form") {
  const auto& r = test::riemann();
  const PeriodLattice& lat = test::abel().lattice();
  CHECK(lat.distance(r.K - reference_K(test::periods().fit.tau0)) < 1e-10);
  CHECK(lat.distance(2.0 * r.K - r.two_k_snf) < 1e-10);
}

TEST_CASE("direct boundary formula") {
  const auto& r = test::riemann();
  const PeriodLattice& lat = test::abel().lattice();
  for (const auto& d : r.direct) {
    CHECK(std::abs(d.degree - 4.0) < 1e-6);
    CHECK(lat.distance(d.K - r.K) < 1e-8);
  }
  CHECK(r.direct_invariance < 1e-8);
}

TEST_CASE("torsion") {
  const auto& r = test::riemann();
  CHECK(r.torsion_10K < 1e-10);
  CHECK(r.torsion_K > 0.1);
  CHECK(r.torsion_psi < 1e-10);
  CHECK(r.torsion_b < 1e-10);
  CHECK(r.torsion_c < 1e-10);
  CHECK(r.path_independence < 1e-10);
}

TEST_CASE("characteristics: parity count and identity") {
  const auto all = all_characteristics();
  CHECK(all.size() == 256);
  int even = 0;
  for (const auto& c : all) even += c.even();
  CHECK(even == 136);
  CHECK(invariant_characteristics({int_identity(8)}).size() == 256);
  CHECK_THROWS(characteristic_transform(IntMat(2 * int_identity(8)), all[0]));
}

TEST_CASE("characteristics: symplectic action preserves parity and composes") {
  const IntMat g = test::homology().phi;
  const IntMat h = test::periods().abar_action.M;
  std::set<std::array<int, 8>> images;
  for (const auto& c : all_characteristics()) {
    const Characteristic gc = characteristic_transform(g, c);
    CHECK(gc.even() == c.even());
    images.insert(gc.bits);
    CHECK(characteristic_transform(h, characteristic_transform(g, c)) == characteristic_transform(IntMat(h * g), c));
  }
  CHECK(images.size() == 256);
}

TEST_CASE("invariant spin structure") {
  const auto& r = test::riemann();
  CHECK(r.fixed_phi.size() == 1);
  CHECK(r.fixed_both.size() == 1);
  CHECK(r.fixed_abar.size() == 16);
  CHECK(r.fixed_both.front().even());
}
