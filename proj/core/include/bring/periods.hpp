#pragma once

#include <functional>

#include "bring/homology.hpp"
#include "bring/types.hpp"

namespace bring {

// The holomorphic differentials v_i = N_i(x, y) dx / F_y with numerators
// y^3 - x, y^2 x - 1, y - x^2, y (x^2 - y).
Vec4c differential_numerators(cplx x, cplx y);
Vec4c differentials(cplx x, cplx y);

struct QuadratureOptions {
  int order = 24;
  double tol = 1e-10;
  int max_depth = 40;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Legendre integral of a vector integrand over [a, b]; panels are
// bisected until the two halves agree with the whole to tol (relative).
Vec4c integrate_vector(const std::function<Vec4c(double)>& f, double a, double b,
                       const QuadratureOptions& opt = {});

// Integral of the differentials along a tracked sheet.
Vec4c integrate_track(const SheetTrack& t, const QuadratureOptions& opt = {});
// Integral over a closed cycle.
RowVec4c cycle_periods(const Cycle& c, const QuadratureOptions& opt = {});

struct PeriodData {
  Mat8x4c alpha_periods;  // row i: integrals over alpha_{i+1}
  Mat8x4c Pi;             // canonical cycles a_1..a_4, b_1..b_4
  Mat4c A, B, tau;
  double symmetry_error = 0.0;  // max |tau - tau^T|
  Eigen::Vector4d imag_eigenvalues;
};

PeriodData period_matrices(const std::vector<Cycle>& alphas, const QuadratureOptions& opt = {});
// Canonical periods and tau from the alpha periods.
PeriodData period_data(const Mat8x4c& alpha_periods);

// The integer matrix tau is proportional to.
Eigen::Matrix4d m4();

struct Tau0Fit {
  cplx tau0;
  double max_residual = 0.0;  // max |tau - tau0 M4|
  double ratio_spread = 0.0;  // spread of tau_ij / M4_ij
};
Tau0Fit fit_tau0(const Mat4c& tau);

// Klein's j via Eisenstein series with the given number of q-terms.
cplx klein_j(cplx t, int terms = 200);

// max |M Pi - Pi L| / max |Pi|.
double symmetry_residual(const IntMat& M, const Mat8x4c& Pi, const Mat4c& L);
Mat4c phi_eigenvalues();  // diag(zeta, zeta^4, zeta^3, zeta^2)

// Fit A^T = diag(a) W with the structured matrix W forced by the order five symmetry.
struct AStructureFit {
  Vec4c a;
  double relative_residual = 0.0;
};
AStructureFit a_structure_fit(const Mat4c& A);

// Integer action recovered from periods: M Pi = Pi L, or M Pi = conj(Pi) for the
// antiholomorphic involution.
struct PeriodAction {
  IntMat M;
  double rounding_error = 0.0;
};
PeriodAction action_from_periods(const Mat8x4c& Pi, const Mat4c& L);
PeriodAction conjugation_from_periods(const Mat8x4c& Pi);

// Matrix L with g^* v = v L for a projective automorphism g acting on (x, y, 1),
// fitted on sample points.
struct Pullback {
  Mat4c L;
  double residual = 0.0;
};
Pullback pullback_matrix(const Eigen::Matrix3cd& g);

}  // namespace bring
