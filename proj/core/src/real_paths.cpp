#include "bring/real_paths.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "bring/continuation.hpp"
#include "bring/puiseux.hpp"

namespace bring {

std::vector<double> real_roots(double x) {
  std::vector<double> out;
  for (cplx y : fiber_roots(x))
    if (std::abs(y.imag()) < 1e-8 * std::max(1.0, std::abs(y))) out.push_back(y.real());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Match {
  std::string place;
  double slope = 0.0;
};

// The place whose expansion passes closest to (x, y).
Match match_place(const std::vector<Place>& places, double x, double y) {
  double best = 1e300;
  Match m;
  for (const auto& p : places) {
    for (cplx t : p.parameters_for(x)) {
      const double d = std::abs(p.y_at(t) - y) / std::max(1.0, std::abs(y));
      if (d < best) {
        best = d;
        m.place = p.name();
        m.slope = p.y.coeffs.size() > 1 ? p.y.coeffs[1].real() : 0.0;
      }
    }
  }
  return m;
}

}  // namespace

RealPathReport trace_real_paths(double x_min, double x_max, int samples_per_unit) {
  if (samples_per_unit < 16) throw std::invalid_argument("need at least 16 samples per unit interval");
  if (!(x_min < 0.0 && x_max > 1.0)) throw std::invalid_argument("x range must contain [0, 1]");
  RealPathReport rep;
  const auto at0 = places_over(0.0);
  const auto at1 = places_over(1.0);
  const auto atinf = places_over(std::nullopt);
  const double d = 1e-3, far = 1e3;

  RealBranch neg{"negative-axis", -far, 0.0, "", "", {}};
  std::vector<RealBranch> mid(3), right(3);
  const char* mid_labels[3] = {"gamma-", "gamma0", "gamma+"};
  for (int k = 0; k < 3; ++k) {
    mid[k] = {mid_labels[k], 0.0, 1.0, "", "", {}};
    right[k] = {"", 1.0, far, "", "", {}};
  }

  const int n = static_cast<int>(std::ceil((x_max - x_min) * samples_per_unit));
  for (int i = 0; i < n; ++i) {
    const double x = x_min + (i + 0.5) / samples_per_unit;
    if (x >= x_max) break;
    const auto ys = real_roots(x);
    const std::size_t want = x < 0.0 ? 1 : 3;
    if (ys.size() != want) {
      rep.root_counts_ok = false;
      continue;
    }
    if (x < 0.0)
      neg.samples.emplace_back(x, ys[0]);
    else
      for (int k = 0; k < 3; ++k) (x < 1.0 ? mid : right)[k].samples.emplace_back(x, ys[k]);
  }
  for (double x : {-d, -far}) rep.root_counts_ok &= real_roots(x).size() == 1;
  for (double x : {d, 1.0 - d, 1.0 + d, far}) rep.root_counts_ok &= real_roots(x).size() == 3;
  if (!rep.root_counts_ok) throw std::runtime_error("real root count differs from the 1/3/3 pattern");

  // Junctions through the local expansions.
  neg.hi_place = match_place(at0, -d, real_roots(-d)[0]).place;
  neg.lo_place = match_place(atinf, -far, real_roots(-far)[0]).place;
  const auto y0p = real_roots(d), y1m = real_roots(1.0 - d), y1p = real_roots(1.0 + d), yfar = real_roots(far);
  std::vector<Match> mid_hi(3), right_lo(3);
  for (int k = 0; k < 3; ++k) {
    mid[k].lo_place = match_place(at0, d, y0p[k]).place;
    mid_hi[k] = match_place(at1, 1.0 - d, y1m[k]);
    mid[k].hi_place = mid_hi[k].place;
    right_lo[k] = match_place(at1, 1.0 + d, y1p[k]);
    right[k].lo_place = right_lo[k].place;
    right[k].hi_place = match_place(atinf, far, yfar[k]).place;
  }
  // Branches on x > 1 inherit the label of the branch sharing their place at x = 1.
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m)
      if (right[k].lo_place == mid[m].hi_place) right[k].label = mid[m].label;
  for (int k = 0; k < 3; ++k) {
    if (mid[k].label == "gamma0") rep.gamma0_node_slope = mid_hi[k].slope;
    if (mid[k].label == "gamma+") rep.gamma_plus_node_slope = mid_hi[k].slope;
  }

  // Orderings: (0,1) gamma- < gamma0 < gamma+; (1,inf) gamma- < gamma+ < gamma0.
  auto label_index = [&](const std::string& l) {
    for (int k = 0; k < 3; ++k)
      if (right[k].label == l) return k;
    return -1;
  };
  const int rm = label_index("gamma-"), rp = label_index("gamma+"), r0 = label_index("gamma0");
  if (rm < 0 || rp < 0 || r0 < 0) throw std::runtime_error("could not match real branches through x = 1");
  for (std::size_t i = 0; i < mid[0].samples.size(); ++i)
    if (!(mid[0].samples[i].second < mid[1].samples[i].second && mid[1].samples[i].second < mid[2].samples[i].second))
      ++rep.ordering_violations;
  for (std::size_t i = 0; i < right[0].samples.size(); ++i)
    if (!(right[rm].samples[i].second < right[rp].samples[i].second &&
          right[rp].samples[i].second < right[r0].samples[i].second))
      ++rep.ordering_violations;
  rep.crossing_data = {"x<0: negative-axis", "0<x<1: gamma- < gamma0 < gamma+", "x>1: gamma- < gamma+ < gamma0"};

  rep.segments.push_back(neg);
  for (auto& b : mid) rep.segments.push_back(b);
  for (int k : {rm, r0, rp}) rep.segments.push_back(right[k]);

  // Junction graph: vertices are places, edges are real branches.
  std::map<std::string, int> id;
  for (const auto& s : rep.segments)
    for (const auto& p : {s.lo_place, s.hi_place}) id.emplace(p, static_cast<int>(id.size()));
  std::vector<int> parent(id.size()), degree(id.size(), 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& s : rep.segments) {
    const int a = id[s.lo_place], b = id[s.hi_place];
    ++degree[a];
    ++degree[b];
    parent[find(a)] = find(b);
  }
  rep.closed_curves = std::all_of(degree.begin(), degree.end(), [](int v) { return v == 2; });
  int comps = 0;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++comps;
  rep.oval_count = comps;
  return rep;
}

}  // namespace bring
