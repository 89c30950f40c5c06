#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bring/lattice.hpp"
#include "bring/periods.hpp"

namespace bring {

// Waypoints of the Abel map graph. Rays at angles 5 + 72k degrees (k = sector)
// carry the cuts; each sector has waypoints just after its ray (L), in its middle
// (M) and just before the next ray (R), on four rings.
struct Waypoint {
  int sector = 0;
  int kind = 1;  // 0 = L, 1 = M, 2 = R
  int ring = 0;
};
cplx waypoint_x(const Waypoint& w);
double waypoint_angle(const Waypoint& w);
double ray_angle(int k);
const std::array<double, 4>& ring_radii();

// Abel map with base point Q = [0, 0, 1], normalized so that the a-periods are the identity.
class AbelMap {
 public:
  explicit AbelMap(const PeriodData& periods, const QuadratureOptions& opt = {});

  // Integrals of v converted to integrals of omega = v A^{-1}.
  Vec4c normalize(const Vec4c& v) const;
  const Mat4c& tau() const { return tau_; }
  const PeriodLattice& lattice() const { return lattice_; }

  // Image of the regular point (x, y); route selects one of two inequivalent paths.
  Vec4c to_point(cplx x, cplx y, int route = 0) const;
  Vec4c to_place_b() const;  // [0, 1, 0]
  Vec4c to_place_c() const;  // [1, 0, 0]_2

  std::size_t state_count() const { return states_.size(); }
  double path_consistency() const { return consistency_; }
  int consistency_checks() const { return checks_; }

  // Values on the two cut sheets along ray k at ring radius i.
  const std::array<cplx, 2>& cut_values(int ray, int ring) const { return cuts_[ray][ring]; }
  // Abel image of the point on ray k, ring i, cut sheet value ycut, approached from
  // the clockwise (side < 0) or counterclockwise (side > 0) neighbour sector.
  Vec4c side_value(int ray, int ring, cplx ycut, int side) const;

  // omega integral along a segment from y0; returns the end sheet value in y_end.
  Vec4c integrate_segment(const Segment& s, cplx y0, cplx* y_end = nullptr) const;
  const QuadratureOptions& quadrature() const { return opt_; }

 private:
  struct State {
    cplx y;
    Vec4c value;
  };
  using Key = std::tuple<int, int, int, int>;  // sector, kind, ring, sheet

  int sheet_index(const Waypoint& w, cplx y) const;
  const CVector& waypoint_fiber(const Waypoint& w) const;
  Vec4c chart_to_place(const Segment& chart, cplx y_anchor, double u_anchor, double u_place) const;
  Vec4c from_waypoint(const Waypoint& w, cplx x, cplx y) const;
  void build_states();

  QuadratureOptions opt_;
  Mat4c Ainv_, tau_;
  PeriodLattice lattice_;
  std::array<std::array<std::array<cplx, 2>, 4>, 5> cuts_;
  mutable std::map<std::tuple<int, int, int>, CVector> fibers_;
  std::map<Key, State> states_;
  double consistency_ = 0.0;
  int checks_ = 0;
};

// Candidates for 2K_Q from the order five symmetry.
struct TorsionCandidate {
  int n1 = 0, n5 = 0;
  IntVec n;
  std::array<long long, 2> residues{};  // (n V^{-1})_i mod d_i for d_i > 1
  Vec4c value;
};

struct Constraint2K {
  SmithForm snf;
  std::vector<long long> diagonal;
  std::vector<TorsionCandidate> candidates;
  int distinct_residues = 0;        // distinct residue classes among the candidates
  int distinct_values = 0;          // distinct candidate points modulo the lattice
  bool congruences_annihilate = false;  // reference congruences vanish on the rows of M - Id
  bool congruences_equivalent = false;  // and cut out the same sublattice
};
Constraint2K constrain_2K(const IntMat& M, const Mat8x4c& Pi, const Mat4c& L, const Mat4c& tau);
// Index of the candidate closest to twoK modulo the lattice.
int resolve_candidate(const Constraint2K& c, const Vec4c& twoK, const PeriodLattice& lattice, double* distance = nullptr);
// The reference congruences on m.
std::array<IntVec, 2> reference_congruences();

// 2K_Q from the canonical divisor a + 2b + 3c, in the sign convention where
// theta(A(D) + K_Q) vanishes for effective D of degree g - 1.
Vec4c two_k_canonical(const AbelMap& abel);

struct DivisorSample {
  std::vector<cplx> xs, ys;
  Vec4c image;
};
std::vector<DivisorSample> random_divisors(const AbelMap& abel, int count, std::uint64_t seed);

struct HalfPeriodResult {
  int sign = 1;  // tests theta(A(D) + sign K)
  Vec4c K;
  std::array<int, 8> half{};  // K = twoK / 2 + (h_a + tau h_b) / 2
  double best = 0.0, second = 0.0, separation = 0.0;
  int passing = 0;
  bool unique = false;
};
HalfPeriodResult half_period_search(const Vec4c& twoK, const Theta& theta, const std::vector<DivisorSample>& divisors,
                                    int sign, double tol, std::uint64_t seed);

// K_Q from the boundary formula over the cut system: for a generic e, K_Q = e - S(e)
// where S(e) collects the contributions of the cuts.
struct DirectKRay {
  int ray = 0, sheet = 0;
  std::string end_place;
  Eigen::Vector4d m;
  double max_phase_step = 0.0;
};
struct DirectKResult {
  Vec4c K;
  cplx degree;
  std::vector<DirectKRay> rays;
};
DirectKResult direct_K(const AbelMap& abel, const Theta& theta, const Vec4c& e);

// Closed forms in tau0.
Vec4c reference_K(cplx tau0);
Vec4c reference_two_K(cplx tau0);

// Image of Q under the order two symmetry: (2/c1, c2/c1) with c1 = zeta + zeta^{-1}, c2 = zeta^2 + zeta^{-2}.
std::pair<cplx, cplx> psi_of_Q();

// Theta characteristic (a, b) with entries in {0, 1/2}, stored as bits.
struct Characteristic {
  std::array<int, 8> bits{};
  bool even() const;
  std::string str() const;
  bool operator==(const Characteristic& o) const { return bits == o.bits; }
};
std::vector<Characteristic> all_characteristics();
Characteristic characteristic_transform(const IntMat& g, const Characteristic& ch);
std::vector<Characteristic> invariant_characteristics(const std::vector<IntMat>& generators);

}  // namespace bring
