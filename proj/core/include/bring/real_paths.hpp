#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bring {

// A real branch of the curve over an open x-interval between junctions.
struct RealBranch {
  std::string label;  // "negative-axis", "gamma-", "gamma0", "gamma+"
  double x_lo = 0.0, x_hi = 0.0;
  std::string lo_place, hi_place;  // places reached at the interval ends
  std::vector<std::pair<double, double>> samples;
};

struct RealPathReport {
  std::vector<RealBranch> segments;
  int oval_count = 0;
  bool root_counts_ok = true;   // 1 / 3 / 3 real roots on x<0, 0<x<1, x>1
  int ordering_violations = 0;  // samples breaking the stated y-orderings
  bool closed_curves = true;    // every junction has degree two
  double gamma0_node_slope = 0.0;
  double gamma_plus_node_slope = 0.0;
  std::vector<std::string> crossing_data;  // ordering per interval
};

// Real roots of the affine curve at x, ascending.
std::vector<double> real_roots(double x);

RealPathReport trace_real_paths(double x_min = -4.0, double x_max = 4.0, int samples_per_unit = 64);

}  // namespace bring
