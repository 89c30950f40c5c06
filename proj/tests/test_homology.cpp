#include <doctest.h>

#include "bring/homology.hpp"
#include "bring/lattice.hpp"
#include "fixtures.hpp"

using namespace bring;

TEST_CASE("cycles close") {
  for (const auto& c : test::homology().alphas) CHECK(c.closed);
}

TEST_CASE("intersection matrix is antisymmetric and matches the reference") {
  const IntMat& K = test::homology().K;
  CHECK(K == IntMat(-K.transpose()));
  CHECK(K == reference_intersection_matrix());
  CHECK(int_determinant(K) == 1);
}

TEST_CASE("intersection number flips under orientation reversal") {
  const auto& a = test::homology().alphas;
  Cycle r;
  r.closed = true;
  for (auto it = a[0].tracks.rbegin(); it != a[0].tracks.rend(); ++it)
    r.tracks.push_back(track_sheet(it->seg.reversed(), it->y_end()));
  for (int j = 1; j < 8; ++j) CHECK(intersection(r, a[j]) == -intersection(a[0], a[j]));
}

TEST_CASE("basis change gives the standard symplectic form") {
  const IntMat T0 = reference_basis_change();
  CHECK(IntMat(T0.transpose() * test::homology().K * T0) == symplectic_J(4));
  CHECK(std::abs(int_determinant(T0)) == 1);
}

TEST_CASE("order five action") {
  const IntMat& M = test::homology().phi;
  CHECK(M == reference_phi_action());
  CHECK(is_symplectic(M));
  IntMat P = int_identity(8);
  for (int i = 0; i < 5; ++i) P = P * M;
  CHECK(P == int_identity(8));
}

TEST_CASE("real structure") {
  const auto& h = test::homology();
  CHECK(h.conj_alpha == reference_real_structure_alpha());
  CHECK(h.real.t_symplectic);
  CHECK(h.real.conjugates_to_s);
  CHECK(h.real.s_involution);
  CHECK(h.real.sprime_antisymplectic);
}

TEST_CASE("rebuild from stored spokes is identical") {
  const HomologyStage again = run_homology(test::homology().spokes);
  CHECK(again.K == test::homology().K);
  CHECK(again.phi == test::homology().phi);
}
