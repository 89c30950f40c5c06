#include "bring/discriminant.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bring/polynomial.hpp"

namespace bring {

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a, q;
  poly_trim(rem);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (rem.empty()) return {};
  if (rem.size() < b.size()) throw std::domain_error("inexact polynomial division");
  q.assign(rem.size() - b.size() + 1, 0);
  const BigInt& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + b.size() - 1];
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    q[k] = top / lead;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q[k] * b[j];
  }
  poly_trim(rem);
  if (!rem.empty()) throw std::domain_error("inexact polynomial division");
  poly_trim(q);
  return q;
}

CVector to_complex(const IntPoly& p) {
  CVector c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v.convert_to<double>(), 0.0);
  return c;
}

IntPoly resultant_y(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  const int N = m + n;
  std::vector<std::vector<IntPoly>> S(N, std::vector<IntPoly>(N));
  // Rows hold descending y-coefficients, shifted.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[n + i][i + j] = g[n - j];
  for (auto& row : S)
    for (auto& e : row) poly_trim(e);

  // Fraction-free Gaussian elimination.
  int sign = 1;
  IntPoly prev{1};
  for (int k = 0; k < N - 1; ++k) {
    if (S[k][k].empty()) {
      int p = k + 1;
      while (p < N && S[p][k].empty()) ++p;
      if (p == N) return {};
      std::swap(S[k], S[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        IntPoly t = poly_sub(poly_mul(S[i][j], S[k][k]), poly_mul(S[i][k], S[k][j]));
        S[i][j] = poly_divexact(t, prev);
      }
      S[i][k].clear();
    }
    prev = S[k][k];
  }
  IntPoly det = S[N - 1][N - 1];
  if (sign < 0)
    for (auto& c : det) c = -c;
  return det;
}

namespace {

// F(x, y) = x y^5 - 2 y^3 + x^2 y^2 - x^4 y + x, coefficients in y.
std::vector<IntPoly> hc_in_y() {
  return {IntPoly{0, 1}, IntPoly{0, 0, 0, 0, -1}, IntPoly{0, 0, 1}, IntPoly{-2}, IntPoly{}, IntPoly{0, 1}};
}

}  // namespace

IntPoly discriminant_x() {
  const auto f = hc_in_y();
  std::vector<IntPoly> df;
  for (std::size_t j = 1; j < f.size(); ++j) {
    IntPoly c = f[j];
    for (auto& v : c) v *= static_cast<int>(j);
    df.push_back(c);
  }
  const IntPoly res = resultant_y(f, df);
  // (-1)^{n(n-1)/2} = +1 for n = 5.
  return poly_divexact(res, f.back());
}

IntPoly branch_polynomial() { return {3456, 0, 0, 0, 0, -837, 0, 0, 0, 0, 256}; }

cplx factored_discriminant(cplx x) {
  const cplx u = std::pow(x, 5);
  return -x * x * x * (256.0 * u * u - 837.0 * u + 3456.0) * (u - 1.0) * (u - 1.0);
}

double discriminant_spot_check(int samples, std::uint64_t seed) {
  const CVector d = to_complex(discriminant_x());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> r(0.0, 2.0), a(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const cplx x = std::polar(r(rng), a(rng));
    const cplx f = factored_discriminant(x);
    worst = std::max(worst, std::abs(horner(d, x) - f) / std::abs(f));
  }
  return worst;
}

BigInt discriminant_constant() {
  // Leading coefficient of the factored form is -256.
  const IntPoly d = discriminant_x();
  if (d.back() % 256 != 0) throw std::runtime_error("unexpected discriminant leading coefficient");
  return -d.back() / 256;
}

std::vector<double> discriminant_real_roots() {
  IntPoly d = discriminant_x();
  // Remove the power of x explicitly so the root finder sees simple structure.
  std::vector<double> out;
  std::size_t z = 0;
  while (z < d.size() && d[z] == 0) ++z;
  if (z > 0) out.push_back(0.0);
  const IntPoly rest(d.begin() + static_cast<long>(z), d.end());
  for (cplx r : aberth_roots(to_complex(rest))) {
    if (std::abs(r.imag()) > 1e-6 * std::max(1.0, std::abs(r))) continue;
    const double v = r.real();
    if (std::none_of(out.begin(), out.end(), [&](double w) { return std::abs(w - v) < 1e-5; })) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bring
