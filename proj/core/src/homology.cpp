#include "bring/homology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bring/lattice.hpp"

namespace bring {

namespace {

const double kSlot = 2.0 * kPi / 5.0;

double deg(double d) { return d * kPi / 180.0; }

const double kOffsets[16] = {deg(2),  deg(3),  deg(4),  deg(5),  deg(6),  deg(7),  deg(8),  deg(9),
                             deg(-2), deg(-3), deg(-4), deg(-5), deg(-6), deg(-7), deg(-8), deg(-9)};

bool same_value(cplx a, cplx b, double rel) { return std::abs(a - b) < rel * std::max(1.0, std::abs(a)); }

}  // namespace

PlanePath TwoSpoke::legs() const {
  const cplx eo = std::polar(1.0, tho), ei = std::polar(1.0, thi);
  return {Segment::line(eps * eo, R * eo), Segment::arc(0.0, R, tho, tho + big), Segment::line(R * ei, eps * ei),
          Segment::arc(0.0, eps, thi, thi + small)};
}

Cycle build_cycle(const TwoSpoke& s) {
  Cycle c;
  c.spoke = s;
  cplx y = s.y0;
  for (const auto& leg : s.legs()) {
    c.tracks.push_back(track_sheet(leg, y));
    y = c.tracks.back().y_end();
  }
  c.closed = same_value(y, s.y0, 1e-8);
  return c;
}

std::pair<TwoSpoke, TwoSpoke> build_alpha_12(double delta, double eps, double R) {
  auto build = [&](int which) {
    const cplx x0 = std::polar(eps, delta);
    // Start on a sheet of the place over x = 0 where y ~ sqrt(2) x^{-1/2}.
    CVector big_sheets;
    for (cplx y : fiber_roots(x0))
      if (std::abs(y) > 2.0) big_sheets.push_back(y);
    if (big_sheets.size() != 2) throw ContinuationError("expected two large sheets near x = 0");
    std::sort(big_sheets.begin(), big_sheets.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    TwoSpoke s;
    s.tho = delta;
    s.eps = eps;
    s.R = R;
    s.y0 = which == 1 ? big_sheets[1] : big_sheets[0];
    const cplx G = which == 1 ? zeta(1) : zeta(4);
    const double garg = std::arg(G);
    s.thi = delta + garg;
    const cplx yR = continue_y({Segment::line(x0, std::polar(R, delta))}, s.y0);
    // The return ray is the image of the outgoing one under (zeta x, zeta^2 y) or (zeta^4 x, zeta^3 y).
    const cplx want = (which == 1 ? zeta(2) : zeta(3)) * yR;
    std::vector<int> ks{-4, -3, -2, -1, 0, 1, 2, 3, 4};
    std::sort(ks.begin(), ks.end(),
              [&](int a, int b) { return std::abs(garg + 2 * kPi * a) < std::abs(garg + 2 * kPi * b); });
    bool found = false;
    for (int k : ks) {
      const double span = garg + 2.0 * kPi * k;
      if (same_value(continue_y({Segment::arc(0.0, R, delta, delta + span)}, yR), want, 1e-6)) {
        s.big = span;
        found = true;
        break;
      }
    }
    if (!found) throw ContinuationError("no winding around infinity reaches the required sheet");
    const cplx ye = continue_y({Segment::line(std::polar(R, s.thi), std::polar(eps, s.thi))}, want);
    std::sort(ks.begin(), ks.end(),
              [&](int a, int b) { return std::abs(-garg + 2 * kPi * a) < std::abs(-garg + 2 * kPi * b); });
    found = false;
    for (int k : ks) {
      const double span = -garg + 2.0 * kPi * k;
      if (same_value(continue_y({Segment::arc(0.0, eps, s.thi, s.thi + span)}, ye), s.y0, 1e-8)) {
        s.small = span;
        found = true;
        break;
      }
    }
    if (!found) throw ContinuationError("no winding around zero closes the cycle");
    return s;
  };
  return {build(1), build(2)};
}

TwoSpoke transform_cycle(const TwoSpoke& s, cplx xmul, cplx ymul, bool conjugate) {
  TwoSpoke t = s;
  if (conjugate) {
    t.tho = -s.tho;
    t.thi = -s.thi;
    t.big = -s.big;
    t.small = -s.small;
    t.y0 = std::conj(s.y0);
  }
  const double a = std::arg(xmul);
  t.tho += a;
  t.thi += a;
  t.y0 *= ymul;
  return t;
}

TwoSpoke perturb(const TwoSpoke& s, double offset, double eps, double R) {
  const double k = std::round(s.tho / kSlot);
  const double newtho = k * kSlot + offset;
  const double shift = newtho - s.tho;
  const cplx y = continue_y({Segment::line(std::polar(s.eps, s.tho), std::polar(eps, s.tho)),
                             Segment::arc(0.0, eps, s.tho, newtho)},
                            s.y0);
  TwoSpoke t = s;
  t.tho = newtho;
  t.thi = s.thi + shift;
  t.eps = eps;
  t.R = R;
  t.y0 = y;
  return t;
}

std::vector<TwoSpoke> alpha_spokes() {
  const auto [a1, a2] = build_alpha_12();
  std::vector<TwoSpoke> out;
  for (int m = 0; m < 4; ++m)
    for (const auto& a : {a1, a2}) out.push_back(transform_cycle(a, zeta(3 * m), zeta(m)));
  return out;
}

std::vector<Cycle> general_position(const std::vector<TwoSpoke>& spokes, int start) {
  std::vector<Cycle> out;
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    const int slot = start + static_cast<int>(i);
    if (slot >= 16) throw std::out_of_range("no free offset slot");
    out.push_back(build_cycle(perturb(spokes[i], kOffsets[slot], 0.1 + 0.01 * slot, 3.0 + 0.1 * slot)));
    if (!out.back().closed) throw ContinuationError("perturbed cycle does not close");
  }
  return out;
}

namespace {

// Crossings of a radial leg of c1 with an arc leg of c2, counted with sign.
int ray_arc(const Cycle& c1, int i1, const Cycle& c2, int i2) {
  const Segment& ray = c1.tracks[i1].seg;
  const Segment& arc = c2.tracks[i2].seg;
  const double th = std::arg(ray.a);
  const double r0 = std::abs(ray.a), r1 = std::abs(ray.b);
  const double rho = arc.radius;
  if (!(std::min(r0, r1) < rho && rho < std::max(r0, r1))) return 0;
  const double u = (rho - r0) / (r1 - r0);
  const double lo = std::min(arc.th0, arc.th1), hi = std::max(arc.th0, arc.th1);
  int total = 0;
  const int n0 = static_cast<int>(std::ceil((lo - th) / (2.0 * kPi)));
  const int n1 = static_cast<int>(std::floor((hi - th) / (2.0 * kPi)));
  for (int n = n0; n <= n1; ++n) {
    const double phi = th + 2.0 * kPi * n;
    const double v = (phi - arc.th0) / (arc.th1 - arc.th0);
    const cplx y1 = c1.tracks[i1].y_at(u), y2 = c2.tracks[i2].y_at(v);
    if (!same_value(y1, y2, 1e-7)) continue;
    const cplx t1 = std::polar(1.0, th) * (r1 > r0 ? 1.0 : -1.0);
    const cplx t2 = kI * std::polar(1.0, phi) * (arc.th1 > arc.th0 ? 1.0 : -1.0);
    total += (std::conj(t1) * t2).imag() > 0 ? 1 : -1;
  }
  return total;
}

}  // namespace

int intersection(const Cycle& c1, const Cycle& c2) {
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto k1 = c1.tracks[i].seg.kind, k2 = c2.tracks[j].seg.kind;
      if (k1 == Segment::Kind::Line && k2 == Segment::Kind::Arc) total += ray_arc(c1, i, c2, j);
      if (k1 == Segment::Kind::Arc && k2 == Segment::Kind::Line) total -= ray_arc(c2, j, c1, i);
    }
  }
  return total;
}

IntMat intersection_matrix(const std::vector<Cycle>& cycles) {
  const int n = static_cast<int>(cycles.size());
  IntMat K = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) K(i, j) = intersection(cycles[i], cycles[j]);
  return K;
}

Automorphism phi_automorphism() { return {"phi", zeta(2), zeta(4), false}; }
Automorphism basis_automorphism() { return {"basis", zeta(3), zeta(1), false}; }
Automorphism conjugation_automorphism() { return {"conjugation", 1.0, 1.0, true}; }

IntMat homology_action_alpha(const Automorphism& a, const std::vector<TwoSpoke>& spokes,
                             const std::vector<Cycle>& alphas, const IntMat& K) {
  std::vector<TwoSpoke> images;
  for (const auto& s : spokes) images.push_back(transform_cycle(s, a.xmul, a.ymul, a.conjugate));
  // Images use the second offset set.
  const auto img = general_position(images, static_cast<int>(spokes.size()));
  const int n = static_cast<int>(alphas.size());
  IntMat R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = intersection(img[i], alphas[j]);
  // <img_i, alpha_j> = (M K)_ij.
  return R * int_inverse(K);
}

IntMat canonical_combinations() { return reference_basis_change().transpose(); }

IntMat to_canonical(const IntMat& action_alpha) {
  const IntMat C = canonical_combinations();
  return C * action_alpha * int_inverse(C);
}

IntMat reference_intersection_matrix() {
  return from_rows({{0, 1, -1, 1, -1, 0, 1, -1},
                    {-1, 0, 1, -1, 1, 0, 0, 0},
                    {1, -1, 0, 1, -1, 1, -1, 0},
                    {-1, 1, -1, 0, 1, -1, 1, 0},
                    {1, -1, 1, -1, 0, 1, -1, 1},
                    {0, 0, -1, 1, -1, 0, 1, -1},
                    {-1, 0, 1, -1, 1, -1, 0, 1},
                    {1, 0, 0, 0, -1, 1, -1, 0}});
}

IntMat reference_basis_change() {
  return from_rows({{1, 0, 0, 0, -2, 0, 1, 0},
                    {1, -1, 0, -1, -1, 1, 1, 1},
                    {1, -1, 0, 0, -1, 2, 1, -1},
                    {0, -1, 0, 0, 1, 2, 0, 0},
                    {1, -1, 1, 0, -1, 1, -1, -1},
                    {1, -1, 1, -1, 0, 0, -1, 1},
                    {1, -1, 1, -1, 0, 1, 0, 1},
                    {0, -1, 0, -1, 1, 1, 1, 2}});
}

IntMat reference_phi_action() {
  return from_rows({{0, 0, 0, 1, 0, 0, 0, 0},
                    {-1, 0, 0, -1, 0, 0, 0, 0},
                    {0, -1, 0, 1, 0, 0, 0, 0},
                    {0, 0, -1, -1, 0, 0, 0, 0},
                    {0, 0, 0, 0, -1, 1, -1, 1},
                    {0, 0, 0, 0, -1, 0, 0, 0},
                    {0, 0, 0, 0, 0, -1, 0, 0},
                    {0, 0, 0, 0, 0, 0, -1, 0}});
}

IntMat reference_real_structure_alpha() {
  return from_rows({{0, 0, 0, 0, 0, 0, -1, 0},
                    {0, 0, 0, 0, 0, -1, 0, 0},
                    {0, 0, 0, 0, -1, 0, 0, 0},
                    {0, 0, 0, -1, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0, 0, 0},
                    {0, -1, 0, 0, 0, 0, 0, 0},
                    {-1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 1, 0, 1, 0, 1}});
}

IntMat reference_real_structure_T() {
  return from_rows({{-1, 2, 1, 2, -1, 1, 0, 1},
                    {0, 1, 0, -3, 0, 0, 0, -1},
                    {-2, 1, 2, -1, 0, 1, 0, 0},
                    {0, 0, -1, 0, -1, 0, -1, 0},
                    {2, -2, -3, -2, 0, -1, -1, -1},
                    {-1, 0, 1, 3, 0, 1, 0, 1},
                    {1, -1, -1, -2, 0, -1, 0, -1},
                    {-1, 2, 3, 2, 0, 1, 1, 1}});
}

IntMat reference_real_structure_S() {
  IntMat S = IntMat::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    S(i, i) = 1;
    S(i, i + 4) = 1;
    S(i + 4, i + 4) = -1;
  }
  return S;
}

RealStructureReport verify_real_structure(const IntMat& sprime_alpha) {
  RealStructureReport r;
  const IntMat T = reference_real_structure_T(), S = reference_real_structure_S();
  const IntMat J = symplectic_J(4);
  const IntMat sc = to_canonical(sprime_alpha);
  r.t_symplectic = is_symplectic(T);
  r.conjugates_to_s = T * sc * int_inverse(T) == S;
  r.s_involution = S * S == int_identity(8);
  r.sprime_antisymplectic = sc * J * sc.transpose() == -J;
  return r;
}

}  // namespace bring
