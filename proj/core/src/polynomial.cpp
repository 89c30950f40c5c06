#include "bring/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bring {

cplx horner(const CVector& c, cplx x) {
  cplx r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

CVector derivative(const CVector& c) {
  if (c.size() <= 1) return {0.0};
  CVector d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return d;
}

cplx newton_polish(const CVector& c, cplx z, int iters) {
  const CVector d = derivative(c);
  for (int it = 0; it < iters; ++it) {
    const cplx f = horner(c, z);
    const cplx fp = horner(d, z);
    if (fp == 0.0) break;
    const cplx step = f / fp;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

CVector aberth_roots(const CVector& coeffs, int max_iter) {
  CVector c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) throw std::invalid_argument("aberth_roots: polynomial has no roots");
  const std::size_t n = c.size() - 1;
  // Exact zero roots are split off so the iteration never starts on them.
  std::size_t nzero = 0;
  while (nzero < n && c[nzero] == 0.0) ++nzero;
  CVector p(c.begin() + static_cast<long>(nzero), c.end());
  const std::size_t m = p.size() - 1;
  CVector z(m);
  if (m > 0) {
    double bound = 0.0;
    for (std::size_t k = 0; k < m; ++k) bound = std::max(bound, std::abs(p[k] / p[m]));
    // Geometric mean of root moduli sets the radius of the initial circle.
    const double radius = std::pow(std::abs(p[0] / p[m]), 1.0 / static_cast<double>(m));
    const double r0 = (radius > 0.0 && std::isfinite(radius)) ? radius : std::min(1.0, 1.0 + bound);
    for (std::size_t k = 0; k < m; ++k)
      z[k] = std::polar(r0, 2.0 * kPi * (static_cast<double>(k) + 0.25) / static_cast<double>(m) + 0.4);
    const CVector dp = derivative(p);
    for (int it = 0; it < max_iter; ++it) {
      double worst = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const cplx f = horner(p, z[k]);
        const cplx fp = horner(dp, z[k]);
        if (f == 0.0) continue;
        const cplx ratio = f / fp;
        cplx sum = 0.0;
        for (std::size_t j = 0; j < m; ++j)
          if (j != k) sum += 1.0 / (z[k] - z[j]);
        const cplx w = ratio / (1.0 - ratio * sum);
        z[k] -= w;
        worst = std::max(worst, std::abs(w) / std::max(1e-300, std::abs(z[k])));
      }
      if (worst < 1e-15) break;
    }
    for (auto& r : z) r = newton_polish(p, r, 3);
  }
  z.insert(z.end(), nzero, cplx(0.0));
  return z;
}

namespace series {

CVector mul(const CVector& a, const CVector& b, std::size_t n) {
  CVector r(n, 0.0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

CVector inverse(const CVector& a, std::size_t n) {
  if (a.empty() || a[0] == 0.0) throw std::domain_error("series::inverse: zero constant term");
  CVector r(n, 0.0);
  r[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

CVector add(const CVector& a, const CVector& b) {
  CVector r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

CVector scale(const CVector& a, cplx s) {
  CVector r(a);
  for (auto& v : r) v *= s;
  return r;
}

}  // namespace series
}  // namespace bring
