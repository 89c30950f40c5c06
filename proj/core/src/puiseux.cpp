#include "bring/puiseux.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bring/polynomial.hpp"

namespace bring {

namespace {

// Bivariate polynomial H(t, z) = sum_j h[j](t) z^j.
using BiPoly = std::vector<CVector>;

double bi_scale(const BiPoly& h) {
  double s = 0.0;
  for (const auto& c : h)
    for (const auto& v : c) s = std::max(s, std::abs(v));
  return s;
}

void bi_clean(BiPoly& h, double tol) {
  for (auto& c : h) {
    for (auto& v : c)
      if (std::abs(v) < tol) v = 0.0;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
  }
  while (!h.empty() && h.back().empty()) h.pop_back();
}

int valuation(const CVector& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0.0) return static_cast<int>(i);
  return -1;
}

// Local polynomial G(X, y) at x0: F(x0 + X, y), or X^4 F(1/X, y) at infinity.
BiPoly local_poly(std::optional<cplx> x0) {
  const PlaneCurve C = plane_curve();
  BiPoly G(6);
  for (const auto& [m, c] : C.coeffs) {
    // Affine z = 1: monomial x^m0 y^m1.
    const int i = m[0], j = m[1];
    if (G[j].size() < 5) G[j].resize(5, 0.0);
    if (x0) {
      // (x0 + X)^i expanded.
      for (int k = 0; k <= i; ++k) {
        double binom = 1.0;
        for (int r = 0; r < k; ++r) binom = binom * (i - r) / (r + 1);
        G[j][k] += c * binom * std::pow(*x0, i - k);
      }
    } else {
      G[j][4 - i] += c;
    }
  }
  bi_clean(G, 1e-14);
  return G;
}

// H(T^q, T^p z) * T^-N, with N the minimal exponent on the edge.
BiPoly substitute_edge(const BiPoly& H, int p, int q, int N) {
  BiPoly out(H.size());
  for (std::size_t j = 0; j < H.size(); ++j) {
    for (std::size_t i = 0; i < H[j].size(); ++i) {
      if (H[j][i] == 0.0) continue;
      const int e = q * static_cast<int>(i) + p * static_cast<int>(j) - N;
      if (e < 0) throw std::logic_error("Newton polygon substitution below the edge");
      if (out[j].size() <= static_cast<std::size_t>(e)) out[j].resize(e + 1, 0.0);
      out[j][e] += H[j][i];
    }
  }
  return out;
}

// H(T, c + Y).
BiPoly shift_z(const BiPoly& H, cplx c) {
  const std::size_t n = H.size();
  BiPoly out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double binom = 1.0;
    for (std::size_t k = 0; k <= j; ++k) {
      // coefficient of Y^k in (c + Y)^j
      const cplx f = binom * std::pow(c, static_cast<int>(j - k));
      if (out[k].size() < H[j].size()) out[k].resize(H[j].size(), 0.0);
      for (std::size_t i = 0; i < H[j].size(); ++i) out[k][i] += f * H[j][i];
      binom = binom * static_cast<double>(j - k) / static_cast<double>(k + 1);
    }
  }
  return out;
}

struct Edge {
  int p = 0, q = 1;  // slope gamma = p / q in lowest terms
  int N = 0;         // q i + p j on the edge
  int j0 = 0, j1 = 0;
};

// Edges of the lower hull of {(j, i) : h[j][i] != 0}; gamma = -slope.
std::vector<Edge> newton_edges(const BiPoly& H) {
  std::vector<std::pair<int, int>> pts;  // (j, min i)
  for (std::size_t j = 0; j < H.size(); ++j) {
    const int v = valuation(H[j]);
    if (v >= 0) pts.emplace_back(static_cast<int>(j), v);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  while (k + 1 < pts.size()) {
    // Next hull vertex: minimal slope, farthest on ties.
    std::size_t best = k + 1;
    for (std::size_t m = k + 1; m < pts.size(); ++m) {
      const long lhs = static_cast<long>(pts[m].second - pts[k].second) * (pts[best].first - pts[k].first);
      const long rhs = static_cast<long>(pts[best].second - pts[k].second) * (pts[m].first - pts[k].first);
      if (lhs < rhs || (lhs == rhs && pts[m].first > pts[best].first)) best = m;
    }
    const int dj = pts[best].first - pts[k].first;
    const int di = pts[best].second - pts[k].second;
    // gamma = -di/dj
    int p = -di, q = dj;
    const int g = std::gcd(std::abs(p), q);
    p /= g;
    q /= g;
    Edge e{p, q, q * pts[k].second + p * pts[k].first, pts[k].first, pts[best].first};
    edges.push_back(e);
    k = best;
  }
  return edges;
}

struct Frame {
  BiPoly H;
  int E = 1;     // X = t^E
  Laurent base;  // y = base(t) + t^s z
  int s = 0;
};

Laurent compose_power(const Laurent& L, int q) {
  Laurent r;
  r.valuation = L.valuation * q;
  r.coeffs.assign(L.coeffs.empty() ? 0 : (L.coeffs.size() - 1) * q + 1, 0.0);
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) r.coeffs[i * q] = L.coeffs[i];
  return r;
}

Laurent laurent_add(const Laurent& a, const Laurent& b) {
  if (a.coeffs.empty()) return b;
  if (b.coeffs.empty()) return a;
  const int v = std::min(a.valuation, b.valuation);
  const int top = std::max(a.valuation + static_cast<int>(a.coeffs.size()),
                           b.valuation + static_cast<int>(b.coeffs.size()));
  Laurent r;
  r.valuation = v;
  r.coeffs.assign(top - v, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.valuation - v + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.valuation - v + i] += b.coeffs[i];
  return r;
}

Laurent laurent_mul(const Laurent& a, const Laurent& b, std::size_t n) {
  Laurent r;
  r.valuation = a.valuation + b.valuation;
  r.coeffs = series::mul(a.coeffs, b.coeffs, n);
  return r;
}

// Power series z(T) with H(T, z(T)) = 0 and z(0) = c, c a simple root of H(0, .).
CVector lift_simple(const BiPoly& H, cplx c, std::size_t n) {
  CVector hz0;
  cplx d = 0.0;
  for (std::size_t j = 1; j < H.size(); ++j)
    if (!H[j].empty()) d += static_cast<double>(j) * H[j][0] * std::pow(c, static_cast<int>(j - 1));
  CVector z{c};
  for (std::size_t k = 1; k < n; ++k) {
    CVector zk = z;
    zk.push_back(0.0);
    // Evaluate H(T, z) to order k by Horner in z.
    CVector acc;
    for (std::size_t j = H.size(); j-- > 0;) {
      acc = series::mul(acc, zk, k + 1);
      CVector hj = H[j];
      hj.resize(k + 1, 0.0);
      acc = series::add(acc, hj);
      acc.resize(k + 1, 0.0);
    }
    z.push_back(-acc[k] / d);
  }
  return z;
}

struct RootCluster {
  cplx value;
  int multiplicity;
};

std::vector<RootCluster> cluster_roots(const CVector& roots, double tol) {
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    cplx sum = roots[i];
    int m = 1;
    used[i] = true;
    for (std::size_t k = i + 1; k < roots.size(); ++k) {
      if (!used[k] && std::abs(roots[k] - roots[i]) < tol * std::max(1.0, std::abs(roots[i]))) {
        used[k] = true;
        sum += roots[k];
        ++m;
      }
    }
    out.push_back({sum / static_cast<double>(m), m});
  }
  return out;
}

void expand(const Frame& f, bool positive_only, int order, std::vector<Place>& out,
            const std::function<void(Place&, int)>& finish) {
  for (const Edge& e : newton_edges(f.H)) {
    if (positive_only && e.p <= 0) continue;
    BiPoly G = substitute_edge(f.H, e.p, e.q, e.N);
    // Characteristic polynomial: constant terms in T, only j0..j1 survive.
    CVector phi;
    for (int j = e.j0; j <= e.j1; ++j) phi.push_back(G[j].empty() ? cplx(0.0) : G[j][0]);
    const CVector roots = aberth_roots(phi);
    auto clusters = cluster_roots(roots, 1e-6);
    for (auto& cl : clusters) {
      // A root of multiplicity m is a simple root of the (m-1)-th derivative.
      CVector d = phi;
      for (int k = 1; k < cl.multiplicity; ++k) d = derivative(d);
      if (cl.multiplicity > 1) cl.value = newton_polish(d, cl.value, 20);
    }
    // Prefer representatives closest to the positive real axis.
    std::stable_sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
      return std::abs(std::arg(a.value)) < std::abs(std::arg(b.value)) - 1e-9;
    });
    std::vector<bool> done(clusters.size(), false);
    for (std::size_t a = 0; a < clusters.size(); ++a) {
      if (done[a]) continue;
      // Orbit under multiplication by q-th roots of unity.
      for (std::size_t b = a; b < clusters.size(); ++b) {
        for (int k = 0; k < e.q; ++k) {
          const cplx w = std::polar(1.0, 2.0 * kPi * k / e.q);
          if (std::abs(clusters[b].value - clusters[a].value * w) < 1e-6 * std::abs(clusters[a].value))
            done[b] = true;
        }
      }
      const cplx c = clusters[a].value;
      Frame g;
      g.E = f.E * e.q;
      g.base = compose_power(f.base, e.q);
      g.s = f.s * e.q + e.p;
      if (clusters[a].multiplicity == 1) {
        const CVector z = lift_simple(G, c, static_cast<std::size_t>(order));
        Place pl;
        pl.ram_index = g.E;
        Laurent tail{g.s, z};
        pl.y = laurent_add(g.base, tail);
        pl.y.coeffs.resize(std::min<std::size_t>(pl.y.coeffs.size(), static_cast<std::size_t>(order)));
        finish(pl, g.E);
        out.push_back(pl);
      } else {
        // z = c + Y with Y -> 0.
        BiPoly S = shift_z(G, c);
        bi_clean(S, 1e-9 * std::max(1.0, bi_scale(S)));
        g.H = S;
        g.base = laurent_add(g.base, Laurent{g.s, CVector{c}});
        expand(g, true, order, out, finish);
      }
    }
  }
}

}  // namespace

cplx Laurent::eval(cplx t) const {
  cplx s = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) s = s * t + coeffs[i];
  return s * std::pow(t, valuation);
}

cplx Laurent::derivative(cplx t) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int e = valuation + static_cast<int>(i);
    if (e != 0) s += coeffs[i] * static_cast<double>(e) * std::pow(t, e - 1);
  }
  return s;
}

std::vector<cplx> Place::parameters_for(cplx xv) const {
  const cplx w = at_infinity ? 1.0 / xv : xv - x0;
  std::vector<cplx> out;
  const cplx r = std::pow(w, 1.0 / ram_index);
  for (int k = 0; k < ram_index; ++k) out.push_back(r * std::polar(1.0, 2.0 * kPi * k / ram_index));
  return out;
}

std::string Place::name() const {
  std::string s = format_point(center, 4);
  if (!branch_label.empty()) s += "_" + branch_label;
  return s;
}

std::vector<Place> places_over(std::optional<cplx> x0, int order) {
  Frame f;
  f.H = local_poly(x0);
  std::vector<Place> out;
  auto finish = [&](Place& p, int E) {
    p.at_infinity = !x0.has_value();
    p.x0 = x0.value_or(0.0);
    if (x0) {
      p.x = Laurent{0, CVector(static_cast<std::size_t>(E) + 1, 0.0)};
      p.x.coeffs[0] = *x0;
      p.x.coeffs[E] = 1.0;
    } else {
      p.x = Laurent{-E, CVector{1.0}};
    }
    // Center from the minimal valuation among (x, y, 1).
    const bool zero_base = x0 && *x0 == 0.0;
    const int vx = !x0 ? -E : (zero_base ? E : 0);
    const cplx lx = (x0 && !zero_base) ? *x0 : cplx(1.0);
    int vy = p.y.valuation;
    cplx ly = p.y.leading();
    while (ly == 0.0 && vy < p.y.valuation + static_cast<int>(p.y.coeffs.size()) - 1) {
      ++vy;
      ly = p.y.coeffs[vy - p.y.valuation];
    }
    const int m = std::min({vx, vy, 0});
    ProjPoint c{vx == m ? lx : 0.0, vy == m ? ly : 0.0, m == 0 ? cplx(1.0) : cplx(0.0)};
    p.center = normalize(c);
  };
  expand(f, false, order, out, finish);
  int total = 0;
  for (const auto& p : out) total += p.ram_index;
  if (total != 5) throw std::runtime_error("Newton polygon analysis found inconsistent ramification");
  // Label places sharing a center by ascending ramification index.
  std::stable_sort(out.begin(), out.end(), [](const Place& a, const Place& b) { return a.ram_index < b.ram_index; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    int idx = 0, cnt = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
      double d = 0.0;
      for (int r = 0; r < 3; ++r) d = std::max(d, std::abs(out[k].center[r] - out[i].center[r]));
      if (d < 1e-8) {
        ++cnt;
        if (k < i) ++idx;
      }
    }
    if (cnt > 1) out[i].branch_label = std::to_string(idx + 1);
  }
  return out;
}

double expansion_residual(const Place& p, int order) {
  const BiPoly G = local_poly(p.at_infinity ? std::nullopt : std::optional<cplx>(p.x0));
  // X = t^E; G(t^E, y(t)) as a Laurent series.
  const int E = p.ram_index;
  const std::size_t n = static_cast<std::size_t>(order) + 8;
  Laurent acc;
  Laurent ypow{0, CVector{1.0}};
  double scale = 0.0;
  std::vector<Laurent> terms;
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < G[j].size(); ++i) {
      if (G[j][i] == 0.0) continue;
      Laurent t = ypow;
      t.valuation += static_cast<int>(i) * E;
      for (auto& v : t.coeffs) v *= G[j][i];
      terms.push_back(t);
      if (!t.coeffs.empty()) scale = std::max(scale, std::abs(t.coeffs[0]));
    }
    ypow = laurent_mul(ypow, p.y, n);
  }
  int vmin = 1 << 20;
  for (const auto& t : terms) vmin = std::min(vmin, t.valuation);
  for (const auto& t : terms) acc = laurent_add(acc, t);
  // The first `order` coefficients from the lowest possible exponent should vanish.
  double r = 0.0;
  for (int k = 0; k < order; ++k) {
    const int idx = vmin + k - acc.valuation;
    if (idx >= 0 && idx < static_cast<int>(acc.coeffs.size())) r = std::max(r, std::abs(acc.coeffs[idx]));
  }
  return r / std::max(scale, 1e-300);
}

}  // namespace bring
