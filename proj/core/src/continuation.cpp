#include "bring/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bring/curve.hpp"
#include "bring/discriminant.hpp"
#include "bring/polynomial.hpp"

namespace bring {

Segment Segment::line(cplx a, cplx b) {
  Segment s;
  s.kind = Kind::Line;
  s.a = a;
  s.b = b;
  return s;
}

Segment Segment::arc(cplx center, double radius, double th0, double th1) {
  Segment s;
  s.kind = Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.th0 = th0;
  s.th1 = th1;
  return s;
}

Segment Segment::chart(std::function<cplx(double)> x, std::function<cplx(double)> dx) {
  Segment s;
  s.kind = Kind::Chart;
  s.chart_x = std::move(x);
  s.chart_dx = std::move(dx);
  return s;
}

cplx Segment::x(double u) const {
  switch (kind) {
    case Kind::Line:
      return a + (b - a) * u;
    case Kind::Arc:
      return center + std::polar(radius, th0 + (th1 - th0) * u);
    case Kind::Chart:
      return chart_x(u);
  }
  return 0.0;
}

cplx Segment::dx(double u) const {
  switch (kind) {
    case Kind::Line:
      return b - a;
    case Kind::Arc:
      return kI * (th1 - th0) * std::polar(radius, th0 + (th1 - th0) * u);
    case Kind::Chart:
      return chart_dx(u);
  }
  return 0.0;
}

Segment Segment::reversed() const {
  switch (kind) {
    case Kind::Line:
      return line(b, a);
    case Kind::Arc:
      return arc(center, radius, th1, th0);
    case Kind::Chart: {
      auto fx = chart_x;
      auto fd = chart_dx;
      return chart([fx](double u) { return fx(1.0 - u); }, [fd](double u) { return -fd(1.0 - u); });
    }
  }
  return *this;
}

PlanePath reversed(const PlanePath& p) {
  PlanePath r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r.push_back(it->reversed());
  return r;
}

cplx polish_y(cplx x, cplx y, int iters) {
  for (int it = 0; it < iters; ++it) {
    const cplx d = affine::F(x, y) / affine::Fy(x, y);
    y -= d;
    if (std::abs(d) <= 1e-15 * std::max(1.0, std::abs(y))) break;
  }
  return y;
}

CVector fiber_roots(cplx x0) {
  if (x0 == 0.0) throw std::invalid_argument("fiber over x = 0 has a degenerate leading coefficient");
  CVector r = aberth_roots(affine::fiber_coeffs(x0));
  for (auto& y : r) y = polish_y(x0, y, 4);
  return r;
}

Fiber solve_fiber(cplx x0) {
  Fiber f{x0, fiber_roots(x0)};
  std::sort(f.sheets.begin(), f.sheets.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return f;
}

const std::vector<cplx>& finite_branch_points() {
  static const std::vector<cplx> pts = [] {
    CVector r = aberth_roots(to_complex(branch_polynomial()));
    auto key = [](cplx z) {
      double a = std::arg(z);
      if (a < 0) a += 2.0 * kPi;
      return std::make_pair(a, std::abs(z));
    };
    std::sort(r.begin(), r.end(), [&](cplx a, cplx b) { return key(a) < key(b); });
    return r;
  }();
  return pts;
}

const std::vector<cplx>& critical_x() {
  static const std::vector<cplx> pts = [] {
    std::vector<cplx> c{0.0};
    for (cplx b : finite_branch_points()) c.push_back(b);
    for (int k = 0; k < 5; ++k) c.push_back(zeta(k));
    return c;
  }();
  return pts;
}

double distance_to_critical(cplx x) {
  double d = 1e300;
  for (cplx c : critical_x()) d = std::min(d, std::abs(x - c));
  return d;
}

double default_clearance() {
  const auto& b = finite_branch_points();
  double d = 1e300;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) d = std::min(d, std::abs(b[i] - b[j]));
  return 0.25 * d;
}

std::vector<BranchPoint> branch_points() {
  std::vector<BranchPoint> out{{false, 0.0}};
  for (cplx b : finite_branch_points()) out.push_back({false, b});
  out.push_back({true, 0.0});
  return out;
}

int nearest_sheet(const CVector& sheets, cplx y) {
  int best = 0;
  for (int k = 1; k < static_cast<int>(sheets.size()); ++k)
    if (std::abs(sheets[k] - y) < std::abs(sheets[best] - y)) best = k;
  return best;
}

cplx SheetTrack::y_at(double u) const {
  // us is monotone, increasing when u1 > u0.
  const bool inc = u1 >= u0;
  auto it = inc ? std::upper_bound(us.begin(), us.end(), u) : std::upper_bound(us.begin(), us.end(), u, std::greater<>());
  std::size_t j = static_cast<std::size_t>(std::max<long>(0, (it - us.begin()) - 1));
  j = std::min(j, us.size() - 2);
  const double t = (u - us[j]) / (us[j + 1] - us[j]);
  const cplx guess = ys[j] + (ys[j + 1] - ys[j]) * t;
  return polish_y(seg.x(u), guess);
}

SheetTrack track_sheet(const Segment& seg, cplx y0, double u0, double u1) {
  SheetTrack tr;
  tr.seg = seg;
  tr.u0 = u0;
  tr.u1 = u1;
  const double len = std::abs(u1 - u0);
  const double dir = u1 >= u0 ? 1.0 : -1.0;
  const double floor = 1e-6 * len;
  double u = u0;
  cplx x = seg.x(u);
  cplx y = polish_y(x, y0);
  tr.us.push_back(u);
  tr.ys.push_back(y);
  double h = len / 32.0;
  while (dir * (u1 - u) > 1e-15 * std::max(1.0, len)) {
    h = std::min(h, std::abs(u1 - u));
    const double dc = distance_to_critical(x);
    double un = 0.0;
    cplx xn, ybest;
    for (;;) {
      un = (h >= std::abs(u1 - u)) ? u1 : u + dir * h;
      xn = seg.x(un);
      if (std::abs(xn - x) > 0.3 * dc && h > floor) {
        h *= 0.5;
        continue;
      }
      const cplx yp = y - affine::Fx(x, y) / affine::Fy(x, y) * (xn - x);
      const CVector fb = fiber_roots(xn);
      std::vector<double> d(fb.size());
      for (std::size_t k = 0; k < fb.size(); ++k) d[k] = std::abs(fb[k] - yp);
      const int i0 = static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin());
      double d1 = 1e300, sep = 1e300;
      for (int k = 0; k < static_cast<int>(fb.size()); ++k) {
        if (k == i0) continue;
        d1 = std::min(d1, d[k]);
        sep = std::min(sep, std::abs(fb[k] - fb[i0]));
      }
      if (d[i0] < 0.5 * d1 && d[i0] < 0.25 * sep) {
        ybest = fb[i0];
        break;
      }
      h *= 0.5;
      if (h < floor) throw ContinuationError("continuation ambiguous below minimum step");
    }
    u = un;
    x = xn;
    y = ybest;
    tr.us.push_back(u);
    tr.ys.push_back(y);
    h *= 1.5;
  }
  return tr;
}

cplx continue_y(const PlanePath& path, cplx y0) {
  cplx y = y0;
  for (const auto& s : path) y = track_sheet(s, y).y_end();
  return y;
}

ContinuationResult continue_fiber(const PlanePath& path, const Fiber& start) {
  ContinuationResult res;
  res.end.base_x = path.empty() ? start.base_x : path.back().end();
  for (cplx y : start.sheets) res.end.sheets.push_back(continue_y(path, y));
  res.closed = std::abs(res.end.base_x - start.base_x) <= 1e-12 * std::max(1.0, std::abs(start.base_x));
  if (res.closed) {
    res.permutation.resize(start.sheets.size());
    std::vector<bool> hit(start.sheets.size(), false);
    for (std::size_t i = 0; i < start.sheets.size(); ++i) {
      const int k = nearest_sheet(start.sheets, res.end.sheets[i]);
      if (hit[k]) throw ContinuationError("continuation merged two sheets");
      hit[k] = true;
      res.permutation[i] = k;
    }
  }
  return res;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int k = static_cast<int>(i); !seen[k]; k = p[k]) {
      seen[k] = true;
      c.push_back(k);
    }
    if (c.size() > 1) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<int> cycle_lengths(const Permutation& p) {
  std::vector<int> l;
  for (const auto& c : cycles_of(p)) l.push_back(static_cast<int>(c.size()));
  std::sort(l.begin(), l.end());
  return l;
}

std::string cycle_type(const Permutation& p) {
  std::string s;
  for (int l : cycle_lengths(p)) s += "(" + std::to_string(l) + ")";
  return s.empty() ? "()" : s;
}

std::string cycle_notation(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles_of(p)) {
    s += "[";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k] + 1);
    s += "]";
  }
  return s.empty() ? "id" : s;
}

PlanePath detoured_line(cplx from, cplx to, double detour, cplx exclude) {
  const double len = std::abs(to - from);
  const cplx dir = (to - from) / len;
  struct Hit {
    double t;
    cplx c;
    double perp;
  };
  std::vector<Hit> hits;
  for (cplx c : critical_x()) {
    if (std::abs(c - exclude) < 1e-12) continue;
    const cplx rel = (c - from) * std::conj(dir);
    if (rel.real() <= 0.0 || rel.real() >= len || std::abs(rel.imag()) >= detour) continue;
    hits.push_back({rel.real(), c, std::abs(rel.imag())});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
  PlanePath path;
  cplx cur = from;
  for (const auto& h : hits) {
    const double half = std::sqrt(detour * detour - h.perp * h.perp);
    const cplx entry = from + dir * (h.t - half);
    const cplx exit = from + dir * (h.t + half);
    path.push_back(Segment::line(cur, entry));
    const double a0 = std::arg(entry - h.c);
    double span = std::arg((exit - h.c) / (entry - h.c));
    // Points on the line get a counterclockwise half turn; others keep their side.
    if (h.perp < 1e-9 * detour) span = kPi;
    path.push_back(Segment::arc(h.c, detour, a0, a0 + span));
    cur = exit;
  }
  path.push_back(Segment::line(cur, to));
  return path;
}

PlanePath branch_loop(cplx base, cplx target, double clearance) {
  const double r = 0.5 * clearance;
  const cplx dir = (target - base) / std::abs(target - base);
  const cplx p0 = target - r * dir;
  PlanePath conn = detoured_line(base, p0, clearance, target);
  PlanePath path = conn;
  const double a0 = std::arg(p0 - target);
  path.push_back(Segment::arc(target, r, a0, a0 + 2.0 * kPi));
  for (const auto& s : reversed(conn)) path.push_back(s);
  return path;
}

MonodromyReport monodromy(cplx base_x) {
  MonodromyReport rep;
  rep.base_fiber = solve_fiber(base_x);
  const double clearance = default_clearance();
  std::vector<MonodromyDatum> finite;
  for (const auto& bp : branch_points()) {
    if (bp.infinite) continue;
    const auto res = continue_fiber(branch_loop(base_x, bp.x, clearance), rep.base_fiber);
    finite.push_back({bp, res.permutation});
  }
  const double R = std::abs(base_x);
  const double a0 = std::arg(base_x);
  rep.big_circle =
      continue_fiber({Segment::arc(0.0, R, a0, a0 + 2.0 * kPi)}, rep.base_fiber).permutation;

  // Product order: loops sorted by the direction from the base point.
  auto angle = [&](cplx b) {
    double a = std::arg((b - base_x) / base_x);
    if (a < 0) a += 2.0 * kPi;
    return a;
  };
  const std::pair<bool, bool> options[] = {{true, true}, {true, false}, {false, true}, {false, false}};
  for (auto [ascending, first_applied_first] : options) {
    auto order = finite;
    std::sort(order.begin(), order.end(), [&](const MonodromyDatum& a, const MonodromyDatum& b) {
      return ascending ? angle(a.branch_point.x) < angle(b.branch_point.x)
                       : angle(a.branch_point.x) > angle(b.branch_point.x);
    });
    Permutation prod(5);
    std::iota(prod.begin(), prod.end(), 0);
    for (const auto& d : order) prod = first_applied_first ? compose(prod, d.permutation) : compose(d.permutation, prod);
    if (prod == rep.big_circle) {
      rep.product_identity = true;
      rep.product_order = std::string(ascending ? "counterclockwise" : "clockwise") +
                          " by direction from the base point, " +
                          (first_applied_first ? "first loop applied first" : "last loop applied first");
      rep.data = order;
      break;
    }
  }
  if (!rep.product_identity) {
    rep.data = finite;
    rep.product_order = "no ordering reproduces the outer loop";
  }
  rep.data.push_back({{true, 0.0}, inverse(rep.big_circle)});

  int total = 0;
  for (const auto& d : rep.data)
    for (int l : cycle_lengths(d.permutation)) total += l - 1;
  rep.ramification_total = total;
  rep.genus = (total - 8) / 2;

  // Transitivity of the generated group.
  std::vector<bool> reach(5, false);
  std::vector<int> stack{0};
  reach[0] = true;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (const auto& d : rep.data) {
      const int t = d.permutation[s];
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  rep.transitive = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
  return rep;
}

}  // namespace bring
