#include "bring/periods.hpp"

#include <algorithm>
#include <cmath>

#include "bring/curve.hpp"
#include "bring/quadrature.hpp"

namespace bring {

Vec4c differential_numerators(cplx x, cplx y) {
  Vec4c n;
  n << y * y * y - x, y * y * x - 1.0, y - x * x, y * (x * x - y);
  return n;
}

Vec4c differentials(cplx x, cplx y) { return differential_numerators(x, y) / affine::Fy(x, y); }

namespace {

Vec4c panel(const std::function<Vec4c(double)>& f, double a, double b, const GaussLegendre& gl) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Vec4c s = Vec4c::Zero();
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * f(c + h * gl.nodes[i]);
  return h * s;
}

Vec4c adapt(const std::function<Vec4c(double)>& f, double a, double b, const Vec4c& whole,
            const GaussLegendre& gl, const QuadratureOptions& opt, int depth) {
  const double m = 0.5 * (a + b);
  const Vec4c left = panel(f, a, m, gl), right = panel(f, m, b, gl);
  const Vec4c sum = left + right;
  const double scale = std::max(1.0, sum.cwiseAbs().maxCoeff());
  if ((sum - whole).cwiseAbs().maxCoeff() <= opt.tol * scale) return sum;
  if (depth >= opt.max_depth) throw QuadratureError("adaptive quadrature did not converge");
  return adapt(f, a, m, left, gl, opt, depth + 1) + adapt(f, m, b, right, gl, opt, depth + 1);
}

}  // namespace

Vec4c integrate_vector(const std::function<Vec4c(double)>& f, double a, double b, const QuadratureOptions& opt) {
  const GaussLegendre& gl = gauss_legendre(opt.order);
  return adapt(f, a, b, panel(f, a, b, gl), gl, opt, 0);
}

Vec4c integrate_track(const SheetTrack& t, const QuadratureOptions& opt) {
  Vec4c total = Vec4c::Zero();
  // One adaptive integral per continuation step.
  for (std::size_t k = 0; k + 1 < t.us.size(); ++k) {
    const double ua = t.us[k], ub = t.us[k + 1];
    const cplx ya = t.ys[k], yb = t.ys[k + 1];
    auto f = [&](double u) {
      const double s = (u - ua) / (ub - ua);
      const cplx x = t.seg.x(u);
      const cplx y = polish_y(x, ya + (yb - ya) * s, 8);
      return Vec4c(differentials(x, y) * t.seg.dx(u));
    };
    total += integrate_vector(f, ua, ub, opt);
  }
  return total;
}

RowVec4c cycle_periods(const Cycle& c, const QuadratureOptions& opt) {
  Vec4c total = Vec4c::Zero();
  for (const auto& t : c.tracks) total += integrate_track(t, opt);
  return total.transpose();
}

PeriodData period_matrices(const std::vector<Cycle>& alphas, const QuadratureOptions& opt) {
  Mat8x4c ap;
  for (int i = 0; i < 8; ++i) ap.row(i) = cycle_periods(alphas[i], opt);
  return period_data(ap);
}

PeriodData period_data(const Mat8x4c& alpha_periods) {
  PeriodData d;
  d.alpha_periods = alpha_periods;
  const Eigen::MatrixXd C = canonical_combinations().cast<double>();
  d.Pi = C.cast<cplx>() * d.alpha_periods;
  d.A = d.Pi.topRows<4>();
  d.B = d.Pi.bottomRows<4>();
  Eigen::JacobiSVD<Mat4c> svd(d.A);
  const auto sv = svd.singularValues();
  if (sv(0) > 1e12 * sv(3)) throw QuadratureError("a-period matrix is singular");
  d.tau = d.B * d.A.inverse();
  d.symmetry_error = (d.tau - d.tau.transpose()).cwiseAbs().maxCoeff();
  Eigen::Matrix4d im = d.tau.imag();
  im = 0.5 * (im + im.transpose()).eval();
  d.imag_eigenvalues = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(im).eigenvalues();
  return d;
}

Eigen::Matrix4d m4() {
  Eigen::Matrix4d m;
  m << 4, 1, -1, 1, 1, 4, 1, -1, -1, 1, 4, 1, 1, -1, 1, 4;
  return m;
}

Tau0Fit fit_tau0(const Mat4c& tau) {
  const Eigen::Matrix4d M = m4();
  Tau0Fit f;
  f.tau0 = (tau.array() * M.array().cast<cplx>()).sum() / M.array().square().sum();
  f.max_residual = (tau - f.tau0 * M.cast<cplx>()).cwiseAbs().maxCoeff();
  double lo = 1e300, hi = -1e300;
  cplx first;
  bool have = false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx r = tau(i, j) / M(i, j);
      if (!have) {
        first = r;
        have = true;
      }
      const double d = std::abs(r - first);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  f.ratio_spread = hi - lo;
  return f;
}

cplx klein_j(cplx t, int terms) {
  if (t.imag() <= 0.0) throw std::domain_error("klein_j needs Im t > 0");
  const cplx q = std::exp(2.0 * kPi * kI * t);
  cplx e4 = 1.0, e6 = 1.0, qn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    const double dn = n;
    const cplx r = qn / (1.0 - qn);
    e4 += 240.0 * dn * dn * dn * r;
    e6 -= 504.0 * dn * dn * dn * dn * dn * r;
  }
  const cplx e43 = e4 * e4 * e4;
  return 1728.0 * e43 / (e43 - e6 * e6);
}

double symmetry_residual(const IntMat& M, const Mat8x4c& Pi, const Mat4c& L) {
  const Mat8x4c lhs = M.cast<double>().cast<cplx>() * Pi;
  return (lhs - Pi * L).cwiseAbs().maxCoeff() / Pi.cwiseAbs().maxCoeff();
}

Mat4c phi_eigenvalues() {
  Mat4c L = Mat4c::Zero();
  L(0, 0) = zeta(1);
  L(1, 1) = zeta(4);
  L(2, 2) = zeta(3);
  L(3, 3) = zeta(2);
  return L;
}

AStructureFit a_structure_fit(const Mat4c& A) {
  const int ks[4] = {4, 1, 2, 3};
  Mat4c W;
  for (int i = 0; i < 4; ++i) {
    const int k = ks[i];
    W(i, 0) = 1.0;
    W(i, 1) = -1.0 - zeta(k);
    W(i, 2) = 1.0 + zeta(k) + zeta(2 * k);
    W(i, 3) = zeta(-k);
  }
  const Mat4c At = A.transpose();
  AStructureFit f;
  Mat4c fit;
  for (int i = 0; i < 4; ++i) {
    f.a(i) = W.row(i).dot(At.row(i)) / W.row(i).squaredNorm();
    fit.row(i) = f.a(i) * W.row(i);
  }
  f.relative_residual = (At - fit).cwiseAbs().maxCoeff() / At.cwiseAbs().maxCoeff();
  return f;
}

namespace {

Eigen::Matrix<double, 8, 8> realify(const Mat8x4c& X) {
  Eigen::Matrix<double, 8, 8> R;
  R << X.real(), X.imag();
  return R;
}

PeriodAction round_action(const Eigen::Matrix<double, 8, 8>& rhs, const Mat8x4c& Pi) {
  const Eigen::Matrix<double, 8, 8> Mr = rhs * realify(Pi).inverse();
  PeriodAction a;
  a.M = Mr.array().round().cast<long long>().matrix();
  a.rounding_error = (Mr - a.M.cast<double>()).cwiseAbs().maxCoeff();
  return a;
}

}  // namespace

PeriodAction action_from_periods(const Mat8x4c& Pi, const Mat4c& L) { return round_action(realify(Pi * L), Pi); }

PeriodAction conjugation_from_periods(const Mat8x4c& Pi) { return round_action(realify(Pi.conjugate()), Pi); }

Pullback pullback_matrix(const Eigen::Matrix3cd& g) {
  const cplx xs[6] = {{0.3, 0.2}, {0.7, -0.1}, {-0.5, 0.4}, {0.2, 0.9}, {1.5, 0.3}, {-1.1, -0.6}};
  Eigen::MatrixXcd base(30, 4), image(30, 4);
  int r = 0;
  for (cplx x : xs) {
    for (cplx y : fiber_roots(x)) {
      const Eigen::Vector3cd v = g * Eigen::Vector3cd(x, y, 1.0);
      const cplx X = v(0) / v(2), Y = v(1) / v(2);
      // dX/dx along the curve: total derivative of X(x, y(x)).
      const cplx dydx = -affine::Fx(x, y) / affine::Fy(x, y);
      const cplx dXdx = (g(0, 0) * v(2) - v(0) * g(2, 0)) / (v(2) * v(2)) +
                        (g(0, 1) * v(2) - v(0) * g(2, 1)) / (v(2) * v(2)) * dydx;
      base.row(r) = differentials(x, y).transpose();
      image.row(r) = differentials(X, Y).transpose() * dXdx;
      ++r;
    }
  }
  Pullback p;
  p.L = base.colPivHouseholderQr().solve(image);
  p.residual = (base * p.L - image).cwiseAbs().maxCoeff() / image.cwiseAbs().maxCoeff();
  return p;
}

}  // namespace bring
