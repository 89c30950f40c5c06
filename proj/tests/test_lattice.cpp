#include <doctest.h>

#include <random>

#include "bring/lattice.hpp"
#include "fixtures.hpp"

using namespace bring;

namespace {

void check_smith(const IntMat& m, const std::vector<long long>& expected) {
  const SmithForm f = smith_normal_form(m);
  CHECK(IntMat(f.U * f.S * f.V) == m);
  CHECK(std::abs(int_determinant(f.U)) == 1);
  CHECK(std::abs(int_determinant(f.V)) == 1);
  CHECK(f.diagonal() == expected);
}

Vec4c random_point(std::mt19937_64& rng, const Mat4c& tau, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vec4c a, b;
  for (int i = 0; i < 4; ++i) {
    a(i) = u(rng);
    b(i) = u(rng);
  }
  return a + tau * b;
}

}  // namespace

TEST_CASE("Smith normal form of small matrices") {
  check_smith(int_identity(3), {1, 1, 1});
  check_smith(from_rows({{2, 0}, {0, 4}}), {2, 4});
  check_smith(from_rows({{4, 0}, {0, 6}}), {2, 12});
  check_smith(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), {2, 6, 12});
}

TEST_CASE("Smith normal form of the order five action minus identity") {
  const IntMat m = reference_phi_action() - int_identity(8);
  check_smith(m, {1, 1, 1, 1, 1, 1, 5, 5});
}

TEST_CASE("integer helpers") {
  const IntMat J = symplectic_J(4);
  CHECK(is_symplectic(J));
  CHECK(int_determinant(J) == 1);
  CHECK(IntMat(J * int_inverse(J)) == int_identity(8));
  CHECK_FALSE(is_symplectic(IntMat(2 * int_identity(8))));
}

TEST_CASE("period matrix is a Riemann matrix") {
  const auto& d = test::periods().data;
  CHECK(d.symmetry_error < 1e-12);
  CHECK(d.imag_eigenvalues.minCoeff() > 0.0);
}

TEST_CASE("lattice reduction") {
  const PeriodLattice lat(test::periods().data.tau);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const Vec4c z = random_point(rng, lat.tau(), 3.0);
    const Vec4c r = lat.reduce(z);
    CHECK(lat.distance(z - r) < 1e-12);
    Eigen::Vector4d u, w;
    lat.coordinates(r, u, w);
    CHECK(u.cwiseAbs().maxCoeff() <= 0.5 + 1e-12);
    CHECK(w.cwiseAbs().maxCoeff() <= 0.5 + 1e-12);
  }
}

TEST_CASE("theta is even") {
  const Theta& th = test::theta();
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    const Vec4c z = random_point(rng, th.lattice().tau(), 0.5);
    CHECK(std::abs(th(z) - th(Vec4c(-z))) < 1e-10 * std::max(1.0, std::abs(th(z))));
  }
}

TEST_CASE("theta quasi-periodicity") {
  const Theta& th = test::theta();
  const Mat4c& tau = th.lattice().tau();
  std::mt19937_64 rng(5);
  const Vec4c z = random_point(rng, tau, 0.3);
  for (int k = 0; k < 4; ++k) {
    Vec4c e = Vec4c::Zero();
    e(k) = 1.0;
    const cplx t = th.direct(z);
    CHECK(std::abs(th.direct(Vec4c(z + e)) - t) < 1e-10 * std::abs(t));
    const Vec4c shifted = z + tau * e;
    const cplx factor = std::exp(-kI * kPi * tau(k, k) - 2.0 * kPi * kI * z(k));
    CHECK(std::abs(th.direct(shifted) - factor * t) < 1e-8 * std::abs(factor * t));
  }
}

TEST_CASE("reduced evaluation agrees with the direct sum") {
  const Theta& th = test::theta();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 5; ++i) {
    const Vec4c z = random_point(rng, th.lattice().tau(), 0.8);
    const cplx a = th(z), b = th.direct(z);
    CHECK(std::abs(a - b) < 1e-8 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("theta truncation is compact") {
  CHECK(test::theta().term_count() > 100);
  CHECK(test::theta().term_count() < 20000);
}
