#include "bring/curve.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "bring/discriminant.hpp"
#include "bring/polynomial.hpp"

namespace bring {

namespace {

using Form = std::map<Monomial, cplx>;

Form form_mul(const Form& a, const Form& b) {
  Form r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) r[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}] += ca * cb;
  return r;
}

Form form_pow(const Form& a, int n) {
  Form r{{{0, 0, 0}, 1.0}};
  for (int i = 0; i < n; ++i) r = form_mul(r, a);
  return r;
}

Form linear(cplx a, cplx b, cplx c) { return {{{1, 0, 0}, a}, {{0, 1, 0}, b}, {{0, 0, 1}, c}}; }

void accumulate(Form& acc, const Form& f, cplx s = 1.0) {
  for (const auto& [m, c] : f) acc[m] += s * c;
}

void prune(Form& f, double tol) {
  for (auto it = f.begin(); it != f.end();)
    it = (std::abs(it->second) <= tol) ? f.erase(it) : std::next(it);
}

cplx ipow(cplx b, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

ProjPoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  return {cplx(n01(rng), n01(rng)), cplx(n01(rng), n01(rng)), cplx(n01(rng), n01(rng))};
}

}  // namespace

cplx PlaneCurve::eval(cplx x, cplx y, cplx z) const {
  cplx s = 0.0;
  for (const auto& [m, c] : coeffs) s += c * ipow(x, m[0]) * ipow(y, m[1]) * ipow(z, m[2]);
  return s;
}

std::array<cplx, 3> PlaneCurve::gradient(const ProjPoint& v) const {
  std::array<cplx, 3> g{0.0, 0.0, 0.0};
  for (const auto& [m, c] : coeffs) {
    for (int k = 0; k < 3; ++k) {
      if (m[k] == 0) continue;
      cplx t = c * static_cast<double>(m[k]);
      for (int j = 0; j < 3; ++j) t *= ipow(v[j], j == k ? m[j] - 1 : m[j]);
      g[k] += t;
    }
  }
  return g;
}

bool PlaneCurve::homogeneous() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [&](const auto& kv) { return kv.first[0] + kv.first[1] + kv.first[2] == degree; });
}

PlaneCurve PlaneCurve::substitute(const Eigen::Matrix3cd& A) const {
  const std::array<Form, 3> rows{linear(A(0, 0), A(0, 1), A(0, 2)), linear(A(1, 0), A(1, 1), A(1, 2)),
                                 linear(A(2, 0), A(2, 1), A(2, 2))};
  Form acc;
  for (const auto& [m, c] : coeffs) {
    Form t = form_mul(form_mul(form_pow(rows[0], m[0]), form_pow(rows[1], m[1])), form_pow(rows[2], m[2]));
    accumulate(acc, t, c);
  }
  PlaneCurve out;
  out.degree = degree;
  prune(acc, 1e-12 * std::max(1.0, max_abs_coeff()));
  out.coeffs = std::move(acc);
  return out;
}

PlaneCurve PlaneCurve::cyclic_shift() const {
  PlaneCurve out;
  out.degree = degree;
  // Monomial x^a y^b z^c becomes y^a z^b x^c.
  for (const auto& [m, c] : coeffs) out.coeffs[{m[2], m[0], m[1]}] += c;
  return out;
}

double PlaneCurve::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& kv : coeffs) m = std::max(m, std::abs(kv.second));
  return m;
}

PlaneCurve plane_curve() {
  PlaneCurve c;
  c.coeffs[{1, 5, 0}] = 1.0;
  c.coeffs[{1, 0, 5}] = 1.0;
  c.coeffs[{2, 2, 2}] = 1.0;
  c.coeffs[{4, 1, 1}] = -1.0;
  c.coeffs[{0, 3, 3}] = -2.0;
  return c;
}

cplx cyclic_lambda() { return -(78.0 + 104.0 * golden()) / 5.0; }

PlaneCurve cyclic_curve() {
  const double j = golden();
  Form acc;
  accumulate(acc, form_pow(linear(1.0, j, 0.0), 6));
  accumulate(acc, form_pow(linear(1.0, -j, 0.0), 6));
  accumulate(acc, form_pow(linear(0.0, 1.0, j), 6));
  accumulate(acc, form_pow(linear(0.0, 1.0, -j), 6));
  accumulate(acc, form_pow(linear(j, 0.0, 1.0), 6));
  accumulate(acc, form_pow(linear(-j, 0.0, 1.0), 6));
  const Form quad{{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}, {{0, 0, 2}, 1.0}};
  accumulate(acc, form_pow(quad, 3), cyclic_lambda());
  prune(acc, 1e-9);
  PlaneCurve c;
  c.coeffs = std::move(acc);
  return c;
}

Eigen::Matrix3cd equivalence_matrix() {
  const double j = golden();
  const cplx s = kI * std::sqrt(2.0 + j);
  Eigen::Matrix3cd A;
  A << j, 1.0, 1.0, 0.0, -s, s, 1.0, -j, -j;
  return A;
}

cplx equivalence_constant() { return -960.0 * (9.0 + 4.0 * std::sqrt(5.0)); }

Eigen::Matrix3cd cyclic_order_two() {
  const double j = golden();
  Eigen::Matrix3cd M;
  M << -j, 1.0, j * j, 1.0, -j * j, j, j * j, j, 1.0;
  return M;
}

Eigen::Matrix3cd plane_order_two() {
  const cplx c1 = zeta(1) + zeta(-1);
  const cplx c2 = zeta(2) + zeta(-2);
  Eigen::Matrix3cd M;
  M << 1.0, 2.0, 2.0, 1.0, c1, c2, 1.0, c2, c1;
  return M;
}

EquivalenceReport verify_equivalence(int num_samples, std::uint64_t seed) {
  const PlaneCurve C = plane_curve();
  const PlaneCurve D = cyclic_curve();
  const Eigen::Matrix3cd A = equivalence_matrix();
  const cplx c = equivalence_constant();
  std::mt19937_64 rng(seed);
  EquivalenceReport rep;
  rep.samples = num_samples;
  for (int i = 0; i < num_samples; ++i) {
    const ProjPoint v = random_point(rng);
    const Eigen::Vector3cd w = A * Eigen::Vector3cd(v[0], v[1], v[2]);
    const cplx lhs = D.eval(w(0), w(1), w(2));
    const cplx rhs = c * C.eval(v);
    const double den = std::abs(lhs) + std::abs(rhs);
    if (den > 0.0) rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs) / den);
    const cplx ratio = lhs / C.eval(v);
    if (i == 0) rep.fitted_constant = ratio;
    rep.fitted_spread = std::max(rep.fitted_spread, std::abs(ratio - rep.fitted_constant) / std::abs(rep.fitted_constant));
  }
  return rep;
}

ScaleReport symmetry_scale(const PlaneCurve& c, const Eigen::Matrix3cd& M, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> ratios;
  for (int i = 0; i < samples; ++i) {
    const ProjPoint v = random_point(rng);
    const Eigen::Vector3cd w = M * Eigen::Vector3cd(v[0], v[1], v[2]);
    ratios.push_back(c.eval(w(0), w(1), w(2)) / c.eval(v));
  }
  ScaleReport rep;
  rep.scale = ratios.front();
  for (const auto& r : ratios) rep.spread = std::max(rep.spread, std::abs(r - rep.scale) / std::abs(rep.scale));
  return rep;
}

SymmetryExponent order_five_exponent(int samples, std::uint64_t seed) {
  const PlaneCurve C = plane_curve();
  Eigen::Matrix3cd M = Eigen::Matrix3cd::Zero();
  M(0, 0) = zeta(2);
  M(1, 1) = zeta(4);
  M(2, 2) = 1.0;
  const ScaleReport s = symmetry_scale(C, M, samples, seed);
  SymmetryExponent out;
  double best = 1e300;
  for (int k = 0; k < 5; ++k) {
    const double d = std::abs(s.scale - zeta(k));
    if (d < best) {
      best = d;
      out.k = k;
    }
  }
  out.residual = std::max(best, s.spread);
  return out;
}

ProjPoint normalize(const ProjPoint& v) {
  // Scale so the last coordinate that is not negligible becomes 1.
  const double m = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  int im = 2;
  while (im > 0 && std::abs(v[im]) <= 1e-12 * m) --im;
  const cplx s = v[im];
  ProjPoint r{v[0] / s, v[1] / s, v[2] / s};
  for (auto& c : r) {
    if (std::abs(c.real()) < 1e-14) c.real(0.0);
    if (std::abs(c.imag()) < 1e-14) c.imag(0.0);
  }
  return r;
}

std::string format_point(const ProjPoint& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << "[";
  for (int k = 0; k < 3; ++k) {
    if (k) os << ",";
    const cplx c = v[k];
    if (std::abs(c.imag()) < 1e-12)
      os << c.real();
    else
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
  }
  os << "]";
  return os.str();
}

std::vector<SingularPoint> singular_points() {
  const PlaneCurve C = plane_curve();
  std::vector<ProjPoint> cands;
  // Affine part: critical points of F lie over repeated roots of the discriminant.
  const CVector disc = to_complex(discriminant_x());
  const CVector xr = aberth_roots(disc);
  for (cplx x : xr) {
    CVector fc = affine::fiber_coeffs(x);
    if (std::abs(fc.back()) < 1e-8) continue;
    for (cplx y : aberth_roots(fc)) {
      // Newton on (Fx, Fy) = 0 converges to a nondegenerate critical point.
      cplx xx = x, yy = y;
      for (int it = 0; it < 40; ++it) {
        const cplx h = 1e-6;
        const cplx fx = affine::Fx(xx, yy), fy = affine::Fy(xx, yy);
        const cplx a = (affine::Fx(xx + h, yy) - affine::Fx(xx - h, yy)) / (2.0 * h);
        const cplx b = (affine::Fx(xx, yy + h) - affine::Fx(xx, yy - h)) / (2.0 * h);
        const cplx d = (affine::Fy(xx, yy + h) - affine::Fy(xx, yy - h)) / (2.0 * h);
        const cplx det = a * d - b * b;
        if (std::abs(det) < 1e-14) break;
        const cplx dx = (fx * d - fy * b) / det;
        const cplx dy = (a * fy - b * fx) / det;
        xx -= dx;
        yy -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15) break;
      }
      if (std::abs(affine::F(xx, yy)) < 1e-9 && std::abs(affine::Fx(xx, yy)) < 1e-9 &&
          std::abs(affine::Fy(xx, yy)) < 1e-9)
        cands.push_back(normalize({xx, yy, 1.0}));
    }
  }
  // Line at infinity: C(x, y, 0) = x y^5.
  cands.push_back({1.0, 0.0, 0.0});
  cands.push_back({0.0, 1.0, 0.0});

  std::vector<SingularPoint> out;
  for (const auto& p : cands) {
    const auto g = C.gradient(p);
    const double m = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2]), std::abs(C.eval(p))});
    if (m > 1e-10) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const SingularPoint& s) {
      double d = 0.0;
      for (int k = 0; k < 3; ++k) d = std::max(d, std::abs(s.point[k] - p[k]));
      return d < 1e-8;
    });
    if (!dup) out.push_back({p, m});
  }
  return out;
}

double theta_series_check(double q) {
  // Terms q^{(5n+r)^2}; stop once the exponent makes them negligible.
  auto sum = [q](int r) {
    double s = 0.0;
    for (int n = -40; n <= 40; ++n) {
      const double e = std::pow(5.0 * n + r, 2.0);
      const double t = std::pow(q, e);
      if (t < 1e-300) continue;
      s += t;
    }
    return s;
  };
  const double x = sum(0), y = sum(1), z = sum(2);
  return std::abs(plane_curve().eval(x, y, z));
}

}  // namespace bring
