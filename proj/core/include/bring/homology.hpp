#pragma once

#include <string>
#include <vector>

#include "bring/continuation.hpp"
#include "bring/types.hpp"

namespace bring {

// Closed path made of an outgoing ray at angle tho (eps to R), an arc of radius R
// spanning `big`, a returning ray at angle thi (R to eps) and an arc of radius
// eps spanning `small`; y0 is the sheet value at eps * exp(i tho).
struct TwoSpoke {
  double tho = 0.0, thi = 0.0, eps = 0.1, R = 3.0, big = 0.0, small = 0.0;
  cplx y0;

  PlanePath legs() const;
};

struct Cycle {
  TwoSpoke spoke;
  std::vector<SheetTrack> tracks;  // one per leg
  bool closed = false;
};

Cycle build_cycle(const TwoSpoke& s);

// alpha_1 and alpha_2 with base direction delta, inner radius eps and outer radius R.
std::pair<TwoSpoke, TwoSpoke> build_alpha_12(double delta = 0.05, double eps = 0.1, double R = 3.0);

// Image under (x, y) -> (xmul x, ymul y), optionally preceded by complex conjugation.
TwoSpoke transform_cycle(const TwoSpoke& s, cplx xmul, cplx ymul, bool conjugate = false);

// Same homology class, moved to base angle k*2pi/5 + offset and the given radii.
TwoSpoke perturb(const TwoSpoke& s, double offset, double eps, double R);

// alpha_1 .. alpha_8: alpha_{2m+1}, alpha_{2m+2} are images of alpha_1, alpha_2
// under (x, y) -> (zeta^{3m} x, zeta^m y).
std::vector<TwoSpoke> alpha_spokes();

// Cycles in general position: spoke i gets offset slot start + i.
std::vector<Cycle> general_position(const std::vector<TwoSpoke>& spokes, int start = 0);

int intersection(const Cycle& c1, const Cycle& c2);
IntMat intersection_matrix(const std::vector<Cycle>& cycles);

struct Automorphism {
  std::string name;
  cplx xmul = 1.0, ymul = 1.0;
  bool conjugate = false;
};
Automorphism phi_automorphism();          // (zeta^2 x, zeta^4 y)
Automorphism basis_automorphism();        // (zeta^3 x, zeta y)
Automorphism conjugation_automorphism();  // complex conjugation

// Action on the alpha basis: img_i = sum_j M_ij alpha_j, from intersection numbers.
IntMat homology_action_alpha(const Automorphism& a, const std::vector<TwoSpoke>& spokes,
                             const std::vector<Cycle>& alphas, const IntMat& K);
// Matrix C with canonical cycles c = C alpha (rows are combinations).
IntMat canonical_combinations();
// Action in the canonical basis.
IntMat to_canonical(const IntMat& action_alpha);

// Reference matrices.
IntMat reference_intersection_matrix();
IntMat reference_basis_change();  // T0
IntMat reference_phi_action();    // M, canonical basis
IntMat reference_real_structure_alpha();  // S', alpha basis
IntMat reference_real_structure_T();
IntMat reference_real_structure_S();

struct RealStructureReport {
  bool t_symplectic = false;
  bool conjugates_to_s = false;
  bool s_involution = false;
  bool sprime_antisymplectic = false;
};
RealStructureReport verify_real_structure(const IntMat& sprime_alpha);

}  // namespace bring
