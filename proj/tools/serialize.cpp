#include "serialize.hpp"

#include <sstream>

#include <fmt/core.h>

#include "bring/discriminant.hpp"
#include "bring/puiseux.hpp"

namespace bring::cli {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json to_json(const IntMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

IntMat intmat_from(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<long long>();
  return m;
}

Mat8x4c mat8x4_from(const json& j) {
  if (j.size() != 8) throw std::invalid_argument("expected 8 rows of alpha periods");
  Mat8x4c m;
  for (int i = 0; i < 8; ++i) {
    if (j.at(i).size() != 4) throw std::invalid_argument("expected 4 columns of alpha periods");
    for (int k = 0; k < 4; ++k) m(i, k) = complex_from(j.at(i).at(k));
  }
  return m;
}

json complex_vector(const Vec4c& v) {
  json a = json::array();
  for (int i = 0; i < 4; ++i) a.push_back(to_json(v(i)));
  return a;
}

json config_json(const PipelineConfig& cfg) {
  return {{"seed", cfg.seed},
          {"tol_periods", cfg.tol_periods},
          {"tol_theta", cfg.tol_theta},
          {"quad_order", cfg.quad_order},
          {"divisors", cfg.divisors},
          {"base", to_json(cfg.base)}};
}

namespace {

json point_json(const ProjPoint& p) { return json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

json laurent_json(const Laurent& l) {
  json c = json::array();
  for (cplx z : l.coeffs) c.push_back(to_json(z));
  return {{"valuation", l.valuation}, {"coefficients", c}};
}

json permutation_json(const Permutation& p) {
  json a = json::array();
  for (int v : p) a.push_back(v + 1);
  return a;
}

}  // namespace

json curve_section(const CurveStage& c) {
  json singular = json::array();
  for (const auto& s : c.singular)
    singular.push_back({{"point", point_json(s.point)}, {"label", format_point(s.point)}, {"max_partial", s.max_partial}});
  json disc = json::array();
  for (const auto& a : discriminant_x()) disc.push_back(a.str());
  return {{"equivalence",
           {{"samples", c.equivalence.samples},
            {"max_relative_residual", c.equivalence.max_residual},
            {"expected_constant", to_json(equivalence_constant())},
            {"fitted_constant", to_json(c.equivalence.fitted_constant)},
            {"fitted_spread", c.equivalence.fitted_spread}}},
          {"discriminant",
           {{"coefficients_ascending", disc},
            {"constant", discriminant_constant().str()},
            {"factored_max_relative_difference", c.discriminant_residual}}},
          {"theta_series_residual", c.theta_series_residual},
          {"singular_points", singular},
          {"order_five_exponent", {{"k", c.phi_exponent.k}, {"residual", c.phi_exponent.residual}}}};
}

json branch_points_section() {
  json pts = json::array();
  for (const auto& b : branch_points()) {
    json places = json::array();
    const auto ps = b.infinite ? places_over(std::nullopt) : places_over(b.x);
    for (const auto& p : ps)
      places.push_back({{"name", p.name()},
                        {"center", point_json(p.center)},
                        {"ramification_index", p.ram_index},
                        {"x", laurent_json(p.x)},
                        {"y", laurent_json(p.y)},
                        {"expansion_residual", expansion_residual(p, 6)}});
    json entry = {{"infinite", b.infinite}, {"places", places}};
    entry["x"] = b.infinite ? json(nullptr) : to_json(b.x);
    pts.push_back(entry);
  }
  return {{"count", pts.size()}, {"branch_points", pts}};
}

json monodromy_section(const MonodromyReport& m, cplx base) {
  json entries = json::array();
  for (const auto& d : m.data) {
    json e = {{"infinite", d.branch_point.infinite},
              {"permutation", permutation_json(d.permutation)},
              {"cycles", cycle_notation(d.permutation)},
              {"cycle_type", cycle_type(d.permutation)}};
    e["x"] = d.branch_point.infinite ? json(nullptr) : to_json(d.branch_point.x);
    entries.push_back(e);
  }
  json fiber = json::array();
  for (cplx y : m.base_fiber.sheets) fiber.push_back(to_json(y));
  return {{"base", to_json(base)},
          {"base_fiber", fiber},
          {"entries", entries},
          {"big_circle", permutation_json(m.big_circle)},
          {"product_identity", m.product_identity},
          {"product_order", m.product_order},
          {"transitive", m.transitive},
          {"ramification_total", m.ramification_total},
          {"genus", m.genus}};
}

json real_paths_section(const RealPathReport& r) {
  json segs = json::array();
  for (const auto& s : r.segments)
    segs.push_back({{"label", s.label},
                    {"x_lo", s.x_lo},
                    {"x_hi", s.x_hi},
                    {"lo_place", s.lo_place},
                    {"hi_place", s.hi_place},
                    {"samples", s.samples.size()}});
  return {{"segments", segs},
          {"oval_count", r.oval_count},
          {"root_counts_ok", r.root_counts_ok},
          {"ordering_violations", r.ordering_violations},
          {"closed_curves", r.closed_curves},
          {"gamma0_node_slope", r.gamma0_node_slope},
          {"gamma_plus_node_slope", r.gamma_plus_node_slope},
          {"orderings", r.crossing_data}};
}

json spokes_json(const std::vector<TwoSpoke>& spokes) {
  json a = json::array();
  for (const auto& s : spokes)
    a.push_back({{"tho", s.tho},
                 {"thi", s.thi},
                 {"eps", s.eps},
                 {"R", s.R},
                 {"big", s.big},
                 {"small", s.small},
                 {"y0", to_json(s.y0)}});
  return a;
}

std::vector<TwoSpoke> spokes_from(const json& j) {
  std::vector<TwoSpoke> out;
  for (const auto& e : j) {
    TwoSpoke s;
    s.tho = e.at("tho").get<double>();
    s.thi = e.at("thi").get<double>();
    s.eps = e.at("eps").get<double>();
    s.R = e.at("R").get<double>();
    s.big = e.at("big").get<double>();
    s.small = e.at("small").get<double>();
    s.y0 = complex_from(e.at("y0"));
    out.push_back(s);
  }
  if (out.size() != 8) throw std::invalid_argument("expected 8 stored cycles");
  return out;
}

json homology_section(const HomologyStage& h) {
  const IntMat T0 = reference_basis_change();
  return {{"spokes", spokes_json(h.spokes)},
          {"cycles_closed", std::all_of(h.alphas.begin(), h.alphas.end(), [](const Cycle& c) { return c.closed; })},
          {"intersection_matrix", to_json(h.K)},
          {"intersection_matches_reference", h.K == reference_intersection_matrix()},
          {"basis_change", to_json(T0)},
          {"basis_change_symplectic", IntMat(T0.transpose() * h.K * T0) == symplectic_J(4)},
          {"phi_alpha", to_json(h.phi_alpha)},
          {"phi", to_json(h.phi)},
          {"phi_matches_reference", h.phi == reference_phi_action()},
          {"conjugation_alpha", to_json(h.conj_alpha)},
          {"conjugation_matches_reference", h.conj_alpha == reference_real_structure_alpha()},
          {"real_structure",
           {{"T_symplectic", h.real.t_symplectic},
            {"T_conjugates_to_S", h.real.conjugates_to_s},
            {"S_involution", h.real.s_involution},
            {"S_prime_antisymplectic", h.real.sprime_antisymplectic}}}};
}

json periods_section(const PeriodStage& p, const PipelineConfig& cfg) {
  json eig = json::array();
  for (int i = 0; i < 4; ++i) eig.push_back(p.data.imag_eigenvalues(i));
  return {{"config", {{"quad_order", cfg.quad_order}, {"tol_periods", cfg.tol_periods}}},
          {"alpha_periods", complex_matrix(p.data.alpha_periods)},
          {"Pi", complex_matrix(p.data.Pi)},
          {"tau", complex_matrix(p.data.tau)},
          {"tau_symmetry_error", p.data.symmetry_error},
          {"imag_tau_eigenvalues", eig},
          {"tau0", to_json(p.fit.tau0)},
          {"tau0_fit_residual", p.fit.max_residual},
          {"tau0_ratio_spread", p.fit.ratio_spread},
          {"j_tau0", to_json(p.j_tau0)},
          {"j_5tau0", to_json(p.j_5tau0)},
          {"symmetry_residual", p.symmetry_residual},
          {"a_structure", {{"a", complex_vector(p.a_fit.a)}, {"relative_residual", p.a_fit.relative_residual}}},
          {"phi_from_periods", {{"M", to_json(p.phi_action.M)}, {"rounding_error", p.phi_action.rounding_error}}},
          {"conjugation_from_periods",
           {{"M", to_json(p.conj_action.M)}, {"rounding_error", p.conj_action.rounding_error}}},
          {"involution_from_periods",
           {{"M", to_json(p.abar_action.M)},
            {"rounding_error", p.abar_action.rounding_error},
            {"pullback", complex_matrix(p.abar.L)},
            {"pullback_residual", p.abar.residual}}}};
}

namespace {

json half_json(const HalfPeriodResult& s) {
  json half = json::array();
  for (int h : s.half) half.push_back(h);
  return {{"sign", s.sign},
          {"K", complex_vector(s.K)},
          {"half_period", half},
          {"best", s.best},
          {"second", s.second},
          {"separation", s.separation},
          {"passing", s.passing},
          {"unique", s.unique}};
}

json characteristics_json(const std::vector<Characteristic>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"characteristic", c.str()}, {"even", c.even()}});
  return a;
}

}  // namespace

json riemann_section(const RiemannStage& r, const PeriodStage& p) {
  const PeriodLattice lat(p.data.tau);
  json cands = json::array();
  for (const auto& c : r.constraint.candidates) {
    json n = json::array();
    for (Eigen::Index i = 0; i < c.n.size(); ++i) n.push_back(c.n(i));
    cands.push_back({{"n1", c.n1},
                     {"n5", c.n5},
                     {"n", n},
                     {"residues", {c.residues[0], c.residues[1]}},
                     {"value", complex_vector(c.value)}});
  }
  json divisors = json::array();
  for (const auto& d : r.divisors) {
    json pts = json::array();
    for (std::size_t i = 0; i < d.xs.size(); ++i) pts.push_back({{"x", to_json(d.xs[i])}, {"y", to_json(d.ys[i])}});
    divisors.push_back({{"points", pts}, {"image", complex_vector(d.image)}});
  }
  json direct = json::array();
  for (int i = 0; i < 2; ++i) {
    json rays = json::array();
    for (const auto& ray : r.direct[i].rays)
      rays.push_back({{"ray", ray.ray},
                      {"sheet", ray.sheet},
                      {"end_place", ray.end_place},
                      {"m", {ray.m(0), ray.m(1), ray.m(2), ray.m(3)}},
                      {"max_phase_step", ray.max_phase_step}});
    direct.push_back({{"e", complex_vector(r.direct_e[i])},
                      {"K", complex_vector(r.direct[i].K)},
                      {"degree", to_json(r.direct[i].degree)},
                      {"distance_to_K_Q", lat.distance(r.direct[i].K - r.K)},
                      {"rays", rays}});
  }
  const Vec4c reference = reference_K(p.fit.tau0);
  json snf = json::array();
  for (long long d : r.constraint.diagonal) snf.push_back(d);
  return {
      {"smith_diagonal", snf},
      {"two_K_candidates", cands},
      {"distinct_residue_classes", r.constraint.distinct_residues},
      {"distinct_candidate_points", r.constraint.distinct_values},
      {"reference_congruences_annihilate", r.constraint.congruences_annihilate},
      {"reference_congruences_equivalent", r.constraint.congruences_equivalent},
      {"resolved_2K",
       {{"index", r.resolved},
        {"value", complex_vector(r.two_k_snf)},
        {"canonical_divisor_route", complex_vector(r.two_k_canonical)},
        {"distance", r.resolved_distance}}},
      {"divisors", divisors},
      {"theta_search", {half_json(r.search[0]), half_json(r.search[1])}},
      {"chosen_sign", r.search[r.chosen].sign},
      {"K_Q", complex_vector(r.K)},
      {"K_Q_reference", complex_vector(reference)},
      {"K_Q_distance_to_reference", lat.distance(r.K - reference)},
      {"theta_separation", r.search[r.chosen].separation},
      {"direct_formula", direct},
      {"direct_invariance", r.direct_invariance},
      {"abel_map", {{"states", r.abel_states}, {"path_consistency", r.abel_consistency}}},
      {"psi_Q_image", complex_vector(r.psi_image)},
      {"torsion_checks",
       {{"10K_Q", r.torsion_10K},
        {"K_Q", r.torsion_K},
        {"30_A_psi_Q", r.torsion_psi},
        {"psi_path_independence", r.path_independence},
        {"5_A_b", r.torsion_b},
        {"5_A_c", r.torsion_c}}},
      {"invariant_characteristic", characteristics_json(r.fixed_both)},
      {"fixed_by_phi", characteristics_json(r.fixed_phi)},
      {"fixed_by_involution", characteristics_json(r.fixed_abar)},
      {"even_characteristics", r.even},
      {"odd_characteristics", r.odd}};
}

json criteria_json(const std::vector<Criterion>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

std::string real_paths_csv(const RealPathReport& r, std::uint64_t seed) {
  std::ostringstream os;
  os << "# seed " << seed << "\n";
  os << "branch,x,y,sheet\n";
  for (const auto& s : r.segments)
    for (const auto& [x, y] : s.samples) {
      const auto roots = real_roots(x);
      int sheet = 0;
      double best = 1e300;
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (std::abs(roots[i] - y) < best) {
          best = std::abs(roots[i] - y);
          sheet = static_cast<int>(i);
        }
      os << s.label << ',' << fmt::format("{:.17g},{:.17g}", x, y) << ',' << sheet << "\n";
    }
  return os.str();
}

std::string cycles_csv(const HomologyStage& h, std::uint64_t seed) {
  std::ostringstream os;
  os << "# seed " << seed << "\n";
  os << "cycle,leg,u,x_re,x_im,y_re,y_im,sheet\n";
  for (std::size_t c = 0; c < h.alphas.size(); ++c)
    for (std::size_t l = 0; l < h.alphas[c].tracks.size(); ++l) {
      const auto& t = h.alphas[c].tracks[l];
      for (std::size_t k = 0; k < t.us.size(); ++k) {
        const cplx x = t.seg.x(t.us[k]);
        const cplx y = t.ys[k];
        const int sheet = nearest_sheet(solve_fiber(x).sheets, y);
        os << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", c + 1, l + 1, t.us[k], x.real(),
                          x.imag(), y.real(), y.imag(), sheet);
      }
    }
  return os.str();
}

}  // namespace bring::cli
