#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bring/types.hpp"

namespace bring {

struct ContinuationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Piece of a path in the x-plane parameterized by u in [0, 1].
struct Segment {
  enum class Kind { Line, Arc, Chart };
  Kind kind = Kind::Line;
  cplx a, b;                                   // line endpoints
  cplx center;                                 // arc
  double radius = 0.0, th0 = 0.0, th1 = 0.0;  // arc
  std::function<cplx(double)> chart_x, chart_dx;

  static Segment line(cplx a, cplx b);
  static Segment arc(cplx center, double radius, double th0, double th1);
  static Segment chart(std::function<cplx(double)> x, std::function<cplx(double)> dx);

  cplx x(double u) const;
  cplx dx(double u) const;  // dx/du
  cplx start() const { return x(0.0); }
  cplx end() const { return x(1.0); }
  Segment reversed() const;
};

using PlanePath = std::vector<Segment>;
PlanePath reversed(const PlanePath& p);

struct Fiber {
  cplx base_x;
  CVector sheets;
};

// Roots in y of the affine curve at x0, Newton-polished, ordered by (Re y, Im y).
Fiber solve_fiber(cplx x0);

// Unordered fiber roots; used on hot paths.
CVector fiber_roots(cplx x0);

// Newton refinement of a single sheet value.
cplx polish_y(cplx x, cplx y, int iters = 40);

// The ten finite nonzero branch points, ordered by (argument in [0, 2pi), modulus).
const std::vector<cplx>& finite_branch_points();
// Points where the fiber is degenerate: 0, the branch points, and the nodes x = zeta^k.
const std::vector<cplx>& critical_x();
double distance_to_critical(cplx x);
// Quarter of the minimal distance between two finite branch points.
double default_clearance();

struct BranchPoint {
  bool infinite = false;
  cplx x;
};
std::vector<BranchPoint> branch_points();

// A single sheet continued along a segment.
struct SheetTrack {
  Segment seg;
  std::vector<double> us;
  std::vector<cplx> ys;
  double u0 = 0.0, u1 = 1.0;

  cplx y_start() const { return ys.front(); }
  cplx y_end() const { return ys.back(); }
  // y at parameter u between u0 and u1, polished from the interpolated guess.
  cplx y_at(double u) const;
};

SheetTrack track_sheet(const Segment& seg, cplx y0, double u0 = 0.0, double u1 = 1.0);
cplx continue_y(const PlanePath& path, cplx y0);

using Permutation = std::vector<int>;

struct ContinuationResult {
  Fiber end;  // end[i] is the continuation of start[i]
  Permutation permutation;  // filled when the path is closed: start sheet i ends on sheet permutation[i]
  bool closed = false;
};
ContinuationResult continue_fiber(const PlanePath& path, const Fiber& start);

// Index of the sheet of `f` closest to y.
int nearest_sheet(const CVector& sheets, cplx y);

// Permutation helpers; compose(a, b) applies a first, then b.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
std::vector<int> cycle_lengths(const Permutation& p);  // nontrivial cycles, ascending
std::string cycle_type(const Permutation& p);          // e.g. "(2)(3)"
std::string cycle_notation(const Permutation& p);      // 1-based, e.g. "[1,2][3,4,5]"

// Straight path from `from` to `to` with circular detours around critical
// points closer than `detour` to the segment. A detour keeps the point on the
// side of the line it lies on; points on the line are passed counterclockwise.
PlanePath detoured_line(cplx from, cplx to, double detour, cplx exclude);
// Out to the loop circle, once counterclockwise around `target`, and back.
PlanePath branch_loop(cplx base, cplx target, double clearance);

struct MonodromyDatum {
  BranchPoint branch_point;
  Permutation permutation;
};

struct MonodromyReport {
  Fiber base_fiber;
  std::vector<MonodromyDatum> data;  // finite points in product order, then infinity
  Permutation big_circle;            // loop |x| = |base| counterclockwise
  bool product_identity = false;
  std::string product_order;
  bool transitive = false;
  int ramification_total = 0;
  int genus = -1;
};
MonodromyReport monodromy(cplx base_x = 2.0);

}  // namespace bring
