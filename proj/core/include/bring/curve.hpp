#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bring/types.hpp"

namespace bring {

using Monomial = std::array<int, 3>;
using ProjPoint = std::array<cplx, 3>;

// Homogeneous ternary form stored as exponent triple -> coefficient.
struct PlaneCurve {
  std::map<Monomial, cplx> coeffs;
  int degree = 6;

  cplx eval(cplx x, cplx y, cplx z) const;
  cplx eval(const ProjPoint& v) const { return eval(v[0], v[1], v[2]); }
  std::array<cplx, 3> gradient(const ProjPoint& v) const;
  bool homogeneous() const;
  // The form v -> C(A v), expanded.
  PlaneCurve substitute(const Eigen::Matrix3cd& A) const;
  // The form (x, y, z) -> C(y, z, x).
  PlaneCurve cyclic_shift() const;
  double max_abs_coeff() const;
};

// x(y^5 + z^5) + (xyz)^2 - x^4 yz - 2(yz)^3.
PlaneCurve plane_curve();
// Model invariant under cyclic permutation of the coordinates, with parameter cyclic_lambda().
cplx cyclic_lambda();
PlaneCurve cyclic_curve();

// Matrix A with D(A v) = c C(v).
Eigen::Matrix3cd equivalence_matrix();
cplx equivalence_constant();
// Order-two symmetry a' of the cyclic model.
Eigen::Matrix3cd cyclic_order_two();
// Order-two symmetry of the plane model.
Eigen::Matrix3cd plane_order_two();

struct EquivalenceReport {
  int samples = 0;
  double max_residual = 0.0;  // against equivalence_constant()
  cplx fitted_constant;       // D(Av) / C(v) at the first sample
  double fitted_spread = 0.0; // relative spread of that ratio over all samples
};
EquivalenceReport verify_equivalence(int num_samples, std::uint64_t seed = 1);

// Ratio D(M v) / D(v) at random points; constant when M is a symmetry up to scale.
struct ScaleReport {
  cplx scale;
  double spread = 0.0;
};
ScaleReport symmetry_scale(const PlaneCurve& c, const Eigen::Matrix3cd& M, int samples, std::uint64_t seed = 3);

// Exponent k with C(z^2 x, z^4 y, z) = z^k C(x, y, z), found by sampling.
struct SymmetryExponent {
  int k = -1;
  double residual = 0.0;
};
SymmetryExponent order_five_exponent(int samples = 20, std::uint64_t seed = 5);

// Singular points: common zeros of the form and its three partials.
struct SingularPoint {
  ProjPoint point;
  double max_partial = 0.0;
};
std::vector<SingularPoint> singular_points();
ProjPoint normalize(const ProjPoint& v);
std::string format_point(const ProjPoint& v, int digits = 6);

// |C(xbar, ybar, zbar)| on the theta-series parameterization.
double theta_series_check(double q);

// Affine chart z = 1 of the plane curve.
namespace affine {
inline cplx F(cplx x, cplx y) {
  const cplx y2 = y * y, y3 = y2 * y, y5 = y3 * y2, x2 = x * x, x4 = x2 * x2;
  return x * y5 + x + x2 * y2 - x4 * y - 2.0 * y3;
}
inline cplx Fy(cplx x, cplx y) {
  const cplx y2 = y * y, y4 = y2 * y2, x2 = x * x, x4 = x2 * x2;
  return 5.0 * x * y4 + 2.0 * x2 * y - x4 - 6.0 * y2;
}
inline cplx Fx(cplx x, cplx y) {
  const cplx y2 = y * y, y5 = y2 * y2 * y, x3 = x * x * x;
  return y5 + 1.0 + 2.0 * x * y2 - 4.0 * x3 * y;
}
// Ascending coefficients in y of F(x, .).
inline CVector fiber_coeffs(cplx x) {
  const cplx x2 = x * x;
  return {x, -x2 * x2, x2, -2.0, 0.0, x};
}
}  // namespace affine

}  // namespace bring
