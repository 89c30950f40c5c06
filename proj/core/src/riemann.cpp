#include "bring/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "bring/curve.hpp"
#include "bring/quadrature.hpp"

namespace bring {

namespace {

const double kDeg = kPi / 180.0;
const double kSector = 2.0 * kPi / 5.0;
const std::array<double, 4> kRings = {0.3, 0.8, 2.0, 4.0};

// Angle b shifted by a multiple of 2 pi to lie within pi of a.
double near_angle(double a, double b) { return a + std::remainder(b - a, 2.0 * kPi); }

bool crosses_ray(const Waypoint& from, const Waypoint& to, int* ray) {
  if (from.kind == 0 && to.kind == 2) {
    *ray = from.sector;
    return true;
  }
  if (from.kind == 2 && to.kind == 0) {
    *ray = to.sector;
    return true;
  }
  return false;
}

std::vector<Waypoint> neighbours(const Waypoint& w) {
  std::vector<Waypoint> out;
  const int s = w.sector, r = w.ring;
  if (w.kind == 1) {
    out.push_back({s, 0, r});
    out.push_back({s, 2, r});
    if (r > 0) out.push_back({s, 1, r - 1});
    if (r + 1 < static_cast<int>(kRings.size())) out.push_back({s, 1, r + 1});
  } else if (w.kind == 0) {
    out.push_back({s, 1, r});
    out.push_back({(s + 4) % 5, 2, r});
  } else {
    out.push_back({s, 1, r});
    out.push_back({(s + 1) % 5, 0, r});
  }
  return out;
}

Segment move_segment(const Waypoint& from, const Waypoint& to) {
  if (from.ring != to.ring) return Segment::line(waypoint_x(from), waypoint_x(to));
  const double a = waypoint_angle(from);
  return Segment::arc(0.0, kRings[from.ring], a, near_angle(a, waypoint_angle(to)));
}

}  // namespace

double ray_angle(int k) { return 5.0 * kDeg + kSector * k; }

double waypoint_angle(const Waypoint& w) {
  const double phi = ray_angle(w.sector);
  switch (w.kind) {
    case 0:
      return phi + 2.5 * kDeg;
    case 1:
      return phi + 0.5 * kSector;
    default:
      return phi + kSector - 2.5 * kDeg;
  }
}

cplx waypoint_x(const Waypoint& w) { return std::polar(kRings[w.ring], waypoint_angle(w)); }

const std::array<double, 4>& ring_radii() { return kRings; }

AbelMap::AbelMap(const PeriodData& periods, const QuadratureOptions& opt)
    : opt_(opt), Ainv_(periods.A.inverse()), tau_(periods.tau), lattice_(periods.tau) {
  for (int k = 0; k < 5; ++k) {
    const cplx dir = std::polar(1.0, ray_angle(k));
    CVector big;
    for (cplx y : fiber_roots(0.01 * dir))
      if (std::abs(y) > 3.0) big.push_back(y);
    if (big.size() != 2) throw ContinuationError("expected two large sheets near x = 0");
    std::sort(big.begin(), big.end(), [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
    for (int c = 0; c < 2; ++c) {
      const SheetTrack t = track_sheet(Segment::line(0.01 * dir, 4.0 * dir), big[c]);
      for (int r = 0; r < 4; ++r) cuts_[k][r][c] = t.y_at((kRings[r] - 0.01) / 3.99);
    }
  }
  build_states();
}

Vec4c AbelMap::normalize(const Vec4c& v) const { return Ainv_.transpose() * v; }

const CVector& AbelMap::waypoint_fiber(const Waypoint& w) const {
  auto key = std::make_tuple(w.sector, w.kind, w.ring);
  auto it = fibers_.find(key);
  if (it == fibers_.end()) it = fibers_.emplace(key, solve_fiber(waypoint_x(w)).sheets).first;
  return it->second;
}

int AbelMap::sheet_index(const Waypoint& w, cplx y) const { return nearest_sheet(waypoint_fiber(w), y); }

Vec4c AbelMap::integrate_segment(const Segment& s, cplx y0, cplx* y_end) const {
  const SheetTrack t = track_sheet(s, y0);
  if (y_end) *y_end = t.y_end();
  return normalize(integrate_track(t, opt_));
}

Vec4c AbelMap::chart_to_place(const Segment& chart, cplx y_anchor, double u_anchor, double u_place) const {
  const double stop = u_place + 1e-4 * (u_anchor - u_place);
  const SheetTrack t = track_sheet(chart, y_anchor, u_anchor, stop);
  auto f = [&](double u) { return Vec4c(differentials(chart.x(u), t.y_at(u)) * chart.dx(u)); };
  return normalize(integrate_vector(f, u_anchor, u_place, opt_));
}

void AbelMap::build_states() {
  const Waypoint w0{0, 1, 0};
  const cplx x0 = waypoint_x(w0);
  const cplx x1 = 0.09 * x0;
  const cplx t1 = std::pow(x1, 1.0 / 3.0);
  // Q is the place y ~ 2^{-1/3} x^{1/3}.
  const CVector f1 = fiber_roots(x1);
  const cplx y1 = f1[nearest_sheet(f1, std::pow(2.0, -1.0 / 3.0) * t1)];
  const Segment qchart = Segment::chart([t1](double u) { return std::pow(t1 * u, 3); },
                                        [t1](double u) { return 3.0 * t1 * std::pow(t1 * u, 2); });
  cplx yw;
  const Vec4c start = -chart_to_place(qchart, y1, 1.0, 0.0) + integrate_segment(Segment::line(x1, x0), y1, &yw);
  const Key k0{0, 1, 0, sheet_index(w0, yw)};
  states_[k0] = {yw, start};
  std::deque<Key> queue{k0};
  while (!queue.empty()) {
    const Key key = queue.front();
    queue.pop_front();
    const Waypoint w{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    const State st = states_.at(key);
    for (const Waypoint& t : neighbours(w)) {
      int ray = 0;
      if (crosses_ray(w, t, &ray)) {
        const double a = waypoint_angle(w);
        const double r = kRings[w.ring];
        const cplx yr = continue_y({Segment::arc(0.0, r, a, near_angle(a, ray_angle(ray)))}, st.y);
        bool on_cut = false;
        for (cplx c : cuts_[ray][w.ring]) on_cut = on_cut || std::abs(yr - c) < 1e-6 * std::abs(yr);
        if (on_cut) continue;
      }
      cplx y2;
      const Vec4c v = st.value + integrate_segment(move_segment(w, t), st.y, &y2);
      const Key k2{t.sector, t.kind, t.ring, sheet_index(t, y2)};
      auto it = states_.find(k2);
      if (it != states_.end()) {
        consistency_ = std::max(consistency_, (it->second.value - v).cwiseAbs().maxCoeff());
        ++checks_;
      } else {
        states_[k2] = {y2, v};
        queue.push_back(k2);
      }
    }
  }
}

Vec4c AbelMap::side_value(int ray, int ring, cplx ycut, int side) const {
  const Waypoint w = side < 0 ? Waypoint{(ray + 4) % 5, 2, ring} : Waypoint{ray, 0, ring};
  const double a = waypoint_angle(w);
  const double b = near_angle(a, ray_angle(ray));
  const double r = kRings[ring];
  const cplx yw = continue_y({Segment::arc(0.0, r, b, a)}, ycut);
  const State& st = states_.at({w.sector, w.kind, w.ring, sheet_index(w, yw)});
  cplx yend;
  const Vec4c v = st.value + integrate_segment(Segment::arc(0.0, r, a, b), st.y, &yend);
  if (std::abs(yend - ycut) > 1e-8 * std::abs(ycut)) throw ContinuationError("side value reached the wrong sheet");
  return v;
}

Vec4c AbelMap::from_waypoint(const Waypoint& w, cplx x, cplx y) const {
  const PlanePath path = detoured_line(waypoint_x(w), x, default_clearance(), cplx(1e300, 0.0));
  for (int s = 0; s < 5; ++s) {
    auto it = states_.find({w.sector, w.kind, w.ring, s});
    if (it == states_.end()) continue;
    if (std::abs(continue_y(path, it->second.y) - y) > 1e-7 * std::max(1.0, std::abs(y))) continue;
    Vec4c v = it->second.value;
    cplx yc = it->second.y;
    for (const auto& seg : path) v += integrate_segment(seg, yc, &yc);
    return v;
  }
  throw ContinuationError("no waypoint sheet continues to the requested point");
}

Vec4c AbelMap::to_point(cplx x, cplx y, int route) const {
  double a = std::fmod(std::arg(x) - ray_angle(0), 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  int sector = std::min(4, static_cast<int>(a / kSector));
  if (route != 0) sector = (sector + 2) % 5;
  int ring = 0;
  for (int r = 1; r < 4; ++r)
    if (std::abs(std::log(kRings[r] / std::abs(x))) < std::abs(std::log(kRings[ring] / std::abs(x)))) ring = r;
  return from_waypoint({sector, 1, ring}, x, y);
}

Vec4c AbelMap::to_place_b() const {
  const Waypoint w{0, 1, 0};
  const cplx x0 = waypoint_x(w);
  for (int s = 0; s < 5; ++s) {
    auto it = states_.find({0, 1, 0, s});
    if (it == states_.end() || std::abs(it->second.y) < 2.0) continue;
    const cplx y = it->second.y;
    // [0, 1, 0] is the place x = t^2, y ~ sqrt(2) / t.
    cplx t = std::sqrt(x0);
    if (std::abs(std::sqrt(2.0) / t - y) > std::abs(-std::sqrt(2.0) / t - y)) t = -t;
    const Segment chart = Segment::chart([t](double u) { return t * t * u * u; },
                                         [t](double u) { return 2.0 * t * t * u; });
    return it->second.value + chart_to_place(chart, y, 1.0, 0.0);
  }
  throw ContinuationError("no sheet of [0,1,0] at the inner waypoint");
}

Vec4c AbelMap::to_place_c() const {
  const Waypoint w{0, 1, 3};
  const cplx x0 = waypoint_x(w);
  for (int s = 0; s < 5; ++s) {
    auto it = states_.find({0, 1, 3, s});
    if (it == states_.end() || std::abs(it->second.y) < 0.5) continue;
    const cplx y = it->second.y;
    // [1, 0, 0]_2 is the place x = t^{-4}, y ~ t^{-3}.
    cplx best = 0.0;
    for (int q = 0; q < 4; ++q) {
      const cplx t = std::pow(x0, -0.25) * std::pow(kI, q);
      if (best == 0.0 || std::abs(std::pow(t, -3) - y) < std::abs(std::pow(best, -3) - y)) best = t;
    }
    const cplx t = best;
    const Segment chart = Segment::chart([t](double u) { return std::pow(t * (1.0 - u), -4); },
                                         [t](double u) { return 4.0 * t * std::pow(t * (1.0 - u), -5); });
    return it->second.value + chart_to_place(chart, y, 0.0, 1.0);
  }
  throw ContinuationError("no sheet of [1,0,0]_2 at the outer waypoint");
}

std::array<IntVec, 2> reference_congruences() {
  IntVec c1(8), c2(8);
  c1 << 0, 0, 0, 0, -1, 1, -1, -4;
  c2 << -1, 2, -3, -1, -11, 6, -1, -34;
  return {c1, c2};
}

Constraint2K constrain_2K(const IntMat& M, const Mat8x4c& Pi, const Mat4c& L, const Mat4c& tau) {
  const Mat4c LmI = L - Mat4c::Identity();
  if (std::abs(LmI.determinant()) < 1e-10) throw std::domain_error("L - Id is singular");
  Constraint2K out;
  const IntMat D = M - int_identity(static_cast<int>(M.rows()));
  out.snf = smith_normal_form(D);
  out.diagonal = out.snf.diagonal();
  const IntMat Vinv = int_inverse(out.snf.V);
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(out.diagonal.size()); ++i)
    if (out.diagonal[i] > 1) idx.push_back(i);
  const Mat4c Ainv = Pi.topRows<4>().inverse();
  const Mat4c right = LmI.inverse() * Ainv;
  const PeriodLattice lattice(tau);
  std::set<std::array<long long, 2>> keys;
  for (int n1 = 0; n1 < 5; ++n1) {
    for (int n5 = 0; n5 < 5; ++n5) {
      TorsionCandidate c;
      c.n1 = n1;
      c.n5 = n5;
      c.n = IntVec::Zero(8);
      c.n(0) = n1;
      c.n(4) = n5;
      const Eigen::Matrix<long long, 1, Eigen::Dynamic> r = c.n.transpose() * Vinv;
      for (std::size_t j = 0; j < idx.size() && j < 2; ++j) {
        const long long d = out.diagonal[idx[j]];
        c.residues[j] = ((r(idx[j]) % d) + d) % d;
      }
      keys.insert(c.residues);
      const Eigen::Matrix<cplx, 1, 8> nc = c.n.cast<double>().cast<cplx>().transpose();
      c.value = (nc * Pi * right).transpose();
      out.candidates.push_back(c);
    }
  }
  out.distinct_residues = static_cast<int>(keys.size());
  std::vector<Vec4c> reps;
  for (const auto& c : out.candidates) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || lattice.distance(c.value - r) < 1e-6;
    if (!seen) reps.push_back(c.value);
  }
  out.distinct_values = static_cast<int>(reps.size());
  const auto cs = reference_congruences();
  bool annihilate = true;
  for (const auto& c : cs) {
    const IntVec dc = D * c;
    for (int i = 0; i < dc.size(); ++i) annihilate = annihilate && dc(i) % 5 == 0;
  }
  bool rank2 = false;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) rank2 = rank2 || (cs[0](i) * cs[1](j) - cs[0](j) * cs[1](i)) % 5 != 0;
  out.congruences_annihilate = annihilate;
  // Both sublattices contain the rows of M - Id and have index 25.
  out.congruences_equivalent = annihilate && rank2 && idx.size() == 2 && out.diagonal[idx[0]] * out.diagonal[idx[1]] == 25;
  return out;
}

int resolve_candidate(const Constraint2K& c, const Vec4c& twoK, const PeriodLattice& lattice, double* distance) {
  int best = -1;
  double bd = 1e300;
  for (int i = 0; i < static_cast<int>(c.candidates.size()); ++i) {
    const double d = lattice.distance(c.candidates[i].value - twoK);
    if (d < bd) {
      bd = d;
      best = i;
    }
  }
  if (distance) *distance = bd;
  return best;
}

Vec4c two_k_canonical(const AbelMap& abel) { return -(2.0 * abel.to_place_b() + 3.0 * abel.to_place_c()); }

std::vector<DivisorSample> random_divisors(const AbelMap& abel, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> sheet(0, 4);
  std::vector<DivisorSample> out;
  for (int i = 0; i < count; ++i) {
    DivisorSample d;
    d.image = Vec4c::Zero();
    for (int p = 0; p < 3; ++p) {
      const cplx x = std::polar(0.7, angle(rng));
      const cplx y = solve_fiber(x).sheets[sheet(rng)];
      d.xs.push_back(x);
      d.ys.push_back(y);
      d.image += abel.to_point(x, y);
    }
    out.push_back(d);
  }
  return out;
}

HalfPeriodResult half_period_search(const Vec4c& twoK, const Theta& theta, const std::vector<DivisorSample>& divisors,
                                    int sign, double tol, std::uint64_t seed) {
  const Mat4c& tau = theta.lattice().tau();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  double scale = 0.0;
  for (int i = 0; i < 32; ++i) {
    Eigen::Vector4d u, w;
    for (int d = 0; d < 4; ++d) {
      u(d) = unit(rng);
      w(d) = unit(rng);
    }
    scale += std::abs(theta.direct(u.cast<cplx>() + tau * w.cast<cplx>()));
  }
  scale /= 32.0;
  HalfPeriodResult res;
  res.sign = sign;
  std::vector<std::pair<double, int>> scores;
  for (int h = 0; h < 256; ++h) {
    Vec4c ha, hb;
    for (int d = 0; d < 4; ++d) {
      ha(d) = (h >> d) & 1;
      hb(d) = (h >> (d + 4)) & 1;
    }
    const Vec4c K = 0.5 * twoK + 0.5 * (ha + tau * hb);
    double worst = 0.0;
    for (const auto& D : divisors) worst = std::max(worst, theta.reduced_abs(D.image + double(sign) * K) / scale);
    scores.push_back({worst, h});
  }
  std::sort(scores.begin(), scores.end());
  const int h = scores[0].second;
  for (int d = 0; d < 8; ++d) res.half[d] = (h >> d) & 1;
  Vec4c ha, hb;
  for (int d = 0; d < 4; ++d) {
    ha(d) = res.half[d];
    hb(d) = res.half[d + 4];
  }
  res.K = theta.lattice().reduce(0.5 * twoK + 0.5 * (ha + tau * hb));
  res.best = scores[0].first;
  res.second = scores[1].first;
  res.separation = res.second / std::max(res.best, 1e-300);
  for (const auto& s : scores) res.passing += s.first < tol ? 1 : 0;
  res.unique = res.passing == 1;
  return res;
}

namespace {

struct Piece {
  Segment seg;
  SheetTrack track;
};

}  // namespace

DirectKResult direct_K(const AbelMap& abel, const Theta& theta, const Vec4c& e) {
  const GaussLegendre& gl = gauss_legendre(24);
  const int ng = static_cast<int>(gl.nodes.size());
  DirectKResult res;
  Vec4c S = Vec4c::Zero();
  cplx deg = 0.0;
  for (int k = 0; k < 5; ++k) {
    const cplx dir = std::polar(1.0, ray_angle(k));
    for (int c = 0; c < 2; ++c) {
      const cplx y03 = abel.cut_values(k, 0)[c], y08 = abel.cut_values(k, 1)[c], y4 = abel.cut_values(k, 3)[c];
      const Vec4c Am = abel.side_value(k, 1, y08, -1), Ap = abel.side_value(k, 1, y08, +1);
      const Vec4c lam = Ap - Am;
      Eigen::Vector4d n, m;
      abel.lattice().coordinates(lam, n, m);
      if ((n - n.array().round().matrix()).cwiseAbs().maxCoeff() > 1e-6 ||
          (m - m.array().round().matrix()).cwiseAbs().maxCoeff() > 1e-6)
        throw ContinuationError("jump across a cut is not a period");
      m = m.array().round().matrix();

      // Outward along the ray: from [0, 1, 0] through x = 0.3, 4 to the place at infinity.
      const cplx xa = 0.3 * dir;
      cplx sa = std::sqrt(xa);
      if (std::abs(std::sqrt(2.0) / sa - y03) > std::abs(-std::sqrt(2.0) / sa - y03)) sa = -sa;
      std::vector<Piece> pieces;
      const Segment s1 = Segment::chart([sa](double u) { return sa * sa * u * u; },
                                        [sa](double u) { return 2.0 * sa * sa * u; });
      pieces.push_back({s1, track_sheet(s1, y03, 1.0, 1e-4)});
      const Segment s2 = Segment::line(xa, 4.0 * dir);
      pieces.push_back({s2, track_sheet(s2, y03)});
      const cplx xb = 4.0 * dir;
      std::string end;
      Segment s3;
      if (std::abs(y4) > 0.5) {
        cplx sb = 0.0;
        for (int q = 0; q < 4; ++q) {
          const cplx t = std::pow(xb, -0.25) * std::pow(kI, q);
          if (sb == 0.0 || std::abs(std::pow(t, -3) - y4) < std::abs(std::pow(sb, -3) - y4)) sb = t;
        }
        s3 = Segment::chart([sb](double u) { return std::pow(sb * (1.0 - u), -4); },
                            [sb](double u) { return 4.0 * sb * std::pow(sb * (1.0 - u), -5); });
        end = "[1,0,0]_2";
      } else {
        const cplx wb = 1.0 / xb;
        s3 = Segment::chart([wb](double u) { return 1.0 / (wb * (1.0 - u)); },
                            [wb](double u) { return 1.0 / (wb * (1.0 - u) * (1.0 - u)); });
        end = "[1,0,0]_1";
      }
      pieces.push_back({s3, track_sheet(s3, y4, 0.0, 1.0 - 1e-4)});
      if (std::abs(pieces[1].track.y_end() - y4) > 1e-8 * std::abs(y4))
        throw ContinuationError("cut sheet mismatch along the ray");

      auto w = [&](const Piece& p, double u) {
        return abel.normalize(differentials(p.seg.x(u), p.track.y_at(u)) * p.seg.dx(u));
      };
      std::vector<std::pair<int, std::pair<double, double>>> panels;
      for (int i = 0; i < 6; ++i) panels.push_back({0, {i / 6.0, (i + 1) / 6.0}});
      const double u08 = 0.5 / 3.7;
      std::vector<double> bnd;
      for (int i = 0; i <= 37; ++i) bnd.push_back(i / 37.0);
      bnd.push_back(u08);
      std::sort(bnd.begin(), bnd.end());
      for (std::size_t i = 0; i + 1 < bnd.size(); ++i) panels.push_back({1, {bnd[i], bnd[i + 1]}});
      for (int i = 0; i < 12; ++i) panels.push_back({2, {i / 12.0, (i + 1) / 12.0}});

      Vec4c C = Vec4c::Zero(), Cbase = Vec4c::Zero();
      std::vector<Vec4c> cs, ws;
      for (const auto& [pi, ab] : panels) {
        const auto [a, b] = ab;
        const Piece& p = pieces[pi];
        if (pi == 1 && std::abs(a - u08) < 1e-14) Cbase = C;
        Vec4c total = Vec4c::Zero();
        for (int g = 0; g < ng; ++g) {
          const double u = 0.5 * (a + b) + 0.5 * (b - a) * gl.nodes[g];
          Vec4c inner = Vec4c::Zero();
          for (int g2 = 0; g2 < ng; ++g2) {
            const double uu = 0.5 * (a + u) + 0.5 * (u - a) * gl.nodes[g2];
            inner += gl.weights[g2] * 0.5 * (u - a) * w(p, uu);
          }
          const Vec4c wn = gl.weights[g] * 0.5 * (b - a) * w(p, u);
          cs.push_back(C + inner);
          ws.push_back(wn);
          total += wn;
        }
        C += total;
      }
      const Vec4c Etot = C;
      const Vec4c shift = Am - Cbase;

      // Phase of theta along the cut, including both end places.
      std::vector<cplx> vals;
      vals.push_back(theta(shift - e));
      for (const auto& cn : cs) vals.push_back(theta(cn + shift - e));
      vals.push_back(theta(Etot + shift - e));
      double total_phase = 0.0, max_step = 0.0;
      for (std::size_t i = 1; i < vals.size(); ++i) {
        const double step = std::arg(vals[i] / vals[i - 1]);
        max_step = std::max(max_step, std::abs(step));
        total_phase += step;
      }
      const cplx wE = total_phase / (2.0 * kPi) -
                      kI * (std::log(std::abs(vals.back())) - std::log(std::abs(vals.front()))) / (2.0 * kPi);
      Vec4c IE = Vec4c::Zero();
      const Vec4c mc = m.cast<cplx>();
      // mc is real, so the conjugation in dot is harmless.
      for (std::size_t i = 0; i < cs.size(); ++i) IE += (cs[i] + shift + lam) * mc.dot(ws[i]);
      S += lam * wE - IE;
      deg += -mc.dot(Etot);
      res.rays.push_back({k, c, end, m, max_step});
    }
  }
  res.degree = deg;
  res.K = abel.lattice().reduce(e - S);
  return res;
}

Vec4c reference_K(cplx tau0) {
  Vec4c re, im;
  re << 3, 2, -2, -3;
  im << 1, -2, -2, 1;
  return re / 10.0 + kI * tau0.imag() * im;
}

Vec4c reference_two_K(cplx tau0) {
  Vec4c a, b;
  a << -12, -3, 3, -3;
  b << -6, -6, 3, 0;
  return a / 5.0 + tau0 * b;
}

std::pair<cplx, cplx> psi_of_Q() {
  const Eigen::Vector3cd v = plane_order_two() * Eigen::Vector3cd(0.0, 0.0, 1.0);
  const cplx x = v(0) / v(2);
  return {x, polish_y(x, v(1) / v(2))};
}

bool Characteristic::even() const {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += bits[i] * bits[i + 4];
  return s % 2 == 0;
}

std::string Characteristic::str() const {
  std::string s = "[";
  for (int i = 0; i < 8; ++i) {
    s += bits[i] ? "1/2" : "0";
    s += i == 3 ? " | " : (i == 7 ? "]" : " ");
  }
  return s;
}

std::vector<Characteristic> all_characteristics() {
  std::vector<Characteristic> out(256);
  for (int h = 0; h < 256; ++h)
    for (int d = 0; d < 8; ++d) out[h].bits[d] = (h >> d) & 1;
  return out;
}

Characteristic characteristic_transform(const IntMat& g, const Characteristic& ch) {
  if (g.rows() != 8 || !is_symplectic(g)) throw std::invalid_argument("characteristic action needs a symplectic 8x8 matrix");
  const IntMat gi = int_inverse(g);
  const IntMat A = g.topLeftCorner(4, 4), B = g.topRightCorner(4, 4);
  const IntMat C = g.bottomLeftCorner(4, 4), D = g.bottomRightCorner(4, 4);
  const IntMat cd = C * D.transpose(), ab = A * B.transpose();
  // Work in half units: 2 (a, b) g^{-1} + (diag(C D^T), diag(A B^T)) mod 2.
  Characteristic out;
  for (int j = 0; j < 8; ++j) {
    long long s = 0;
    for (int i = 0; i < 8; ++i) s += ch.bits[i] * gi(i, j);
    s += j < 4 ? cd(j, j) : ab(j - 4, j - 4);
    out.bits[j] = static_cast<int>(((s % 2) + 2) % 2);
  }
  return out;
}

std::vector<Characteristic> invariant_characteristics(const std::vector<IntMat>& generators) {
  std::vector<Characteristic> out;
  for (const auto& ch : all_characteristics()) {
    bool fixed = true;
    for (const auto& g : generators) fixed = fixed && characteristic_transform(g, ch) == ch;
    if (fixed) out.push_back(ch);
  }
  return out;
}

}  // namespace bring
