#include "bring/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/core.h>

#include "bring/discriminant.hpp"
#include "bring/lattice.hpp"

namespace bring {

CurveStage run_curve(const PipelineConfig& cfg) {
  CurveStage c;
  c.equivalence = verify_equivalence(50, cfg.seed);
  c.discriminant_residual = discriminant_spot_check(50, cfg.seed + 1);
  c.theta_series_residual = theta_series_check(0.1);
  c.singular = singular_points();
  c.phi_exponent = order_five_exponent();
  return c;
}

HomologyStage run_homology() { return run_homology(alpha_spokes()); }

HomologyStage run_homology(const std::vector<TwoSpoke>& spokes) {
  HomologyStage h;
  h.spokes = spokes;
  h.alphas = general_position(spokes, 0);
  h.K = intersection_matrix(h.alphas);
  h.phi_alpha = homology_action_alpha(phi_automorphism(), spokes, h.alphas, h.K);
  h.phi = to_canonical(h.phi_alpha);
  h.conj_alpha = homology_action_alpha(conjugation_automorphism(), spokes, h.alphas, h.K);
  h.real = verify_real_structure(h.conj_alpha);
  return h;
}

namespace {

void derive_periods(PeriodStage& p) {
  p.fit = fit_tau0(p.data.tau);
  p.j_tau0 = klein_j(p.fit.tau0);
  p.j_5tau0 = klein_j(5.0 * p.fit.tau0);
  p.symmetry_residual = symmetry_residual(reference_phi_action(), p.data.Pi, phi_eigenvalues());
  p.a_fit = a_structure_fit(p.data.A);
  p.phi_action = action_from_periods(p.data.Pi, phi_eigenvalues());
  p.conj_action = conjugation_from_periods(p.data.Pi);
  p.abar = pullback_matrix(plane_order_two());
  p.abar_action = action_from_periods(p.data.Pi, p.abar.L);
}

}  // namespace

PeriodStage run_periods(const HomologyStage& h, const PipelineConfig& cfg) {
  PeriodStage p;
  QuadratureOptions opt;
  opt.order = cfg.quad_order;
  opt.tol = cfg.tol_periods;
  p.data = period_matrices(h.alphas, opt);
  derive_periods(p);
  return p;
}

PeriodStage run_periods(const Mat8x4c& alpha_periods) {
  PeriodStage p;
  p.data = period_data(alpha_periods);
  derive_periods(p);
  return p;
}

RiemannStage run_riemann(const PeriodStage& p, const IntMat& phi, const PipelineConfig& cfg) {
  RiemannStage r;
  QuadratureOptions opt;
  opt.order = cfg.quad_order;
  opt.tol = cfg.tol_periods;
  const AbelMap abel(p.data, opt);
  const Theta theta(p.data.tau);
  const PeriodLattice& lat = abel.lattice();
  r.abel_states = abel.state_count();
  r.abel_consistency = abel.path_consistency();

  r.constraint = constrain_2K(phi, p.data.Pi, phi_eigenvalues(), p.data.tau);
  r.two_k_canonical = two_k_canonical(abel);
  r.resolved = resolve_candidate(r.constraint, r.two_k_canonical, lat, &r.resolved_distance);
  r.two_k_snf = r.constraint.candidates[r.resolved].value;

  r.divisors = random_divisors(abel, cfg.divisors, cfg.seed);
  r.search[0] = half_period_search(r.two_k_snf, theta, r.divisors, +1, cfg.tol_theta, cfg.seed + 1);
  r.search[1] = half_period_search(r.two_k_snf, theta, r.divisors, -1, cfg.tol_theta, cfg.seed + 1);
  r.chosen = (!r.search[0].unique && r.search[1].unique) ? 1 : 0;
  r.K = r.search[r.chosen].K;

  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int i = 0; i < 2; ++i) {
    Vec4c u, w;
    for (int d = 0; d < 4; ++d) {
      u(d) = unit(rng);
      w(d) = unit(rng);
    }
    r.direct_e[i] = u + p.data.tau * w;
    r.direct[i] = direct_K(abel, theta, r.direct_e[i]);
  }
  r.direct_invariance = lat.distance(r.direct[0].K - r.direct[1].K);

  const auto [px, py] = psi_of_Q();
  r.psi_image = abel.to_point(px, py);
  r.path_independence = lat.distance(r.psi_image - abel.to_point(px, py, 1));
  r.torsion_10K = lat.distance(10.0 * r.K);
  r.torsion_K = lat.distance(r.K);
  r.torsion_psi = lat.distance(30.0 * r.psi_image);
  r.torsion_b = lat.distance(5.0 * abel.to_place_b());
  r.torsion_c = lat.distance(5.0 * abel.to_place_c());

  r.fixed_phi = invariant_characteristics({phi});
  r.fixed_abar = invariant_characteristics({p.abar_action.M});
  r.fixed_both = invariant_characteristics({phi, p.abar_action.M});
  for (const auto& ch : all_characteristics()) (ch.even() ? r.even : r.odd)++;
  return r;
}

PipelineResults run_pipeline(const PipelineConfig& cfg) {
  PipelineResults r;
  r.curve = run_curve(cfg);
  r.monodromy = monodromy(cfg.base);
  r.real = trace_real_paths();
  r.homology = run_homology();
  r.periods = run_periods(r.homology, cfg);
  r.riemann = run_riemann(r.periods, r.homology.phi, cfg);
  return r;
}

namespace {

std::string cstr(cplx z) { return fmt::format("{:.10g}{:+.10g}i", z.real(), z.imag()); }

}  // namespace

std::vector<Criterion> evaluate_criteria(const PipelineResults& r) {
  std::vector<Criterion> out;
  auto add = [&](int id, std::string name, bool pass, std::string detail) {
    out.push_back({id, std::move(name), pass, std::move(detail)});
  };

  const auto& eq = r.curve.equivalence;
  add(1, "equivalence of the two plane models", eq.max_residual < 1e-9,
      fmt::format("max relative residual {:.3e} with constant -960(9+4sqrt5); fitted constant {} (spread {:.1e})",
                  eq.max_residual, cstr(eq.fitted_constant), eq.fitted_spread));

  add(2, "discriminant factorization", r.curve.discriminant_residual < 1e-8,
      fmt::format("max relative difference {:.3e} over 50 points", r.curve.discriminant_residual));

  {
    const auto& m = r.monodromy;
    int transpositions = 0;
    std::string zero, inf;
    for (const auto& d : m.data) {
      const std::string t = cycle_type(d.permutation);
      if (d.branch_point.infinite)
        inf = t;
      else if (std::abs(d.branch_point.x) < 1e-12)
        zero = t;
      else if (t == "(2)")
        ++transpositions;
    }
    const bool ok = zero == "(2)(3)" && inf == "(4)" && transpositions == 10 && m.product_identity && m.genus == 4;
    add(3, "monodromy cycle types", ok,
        fmt::format("0: {}, inf: {}, transpositions: {}, product identity: {}, genus {}", zero, inf, transpositions,
                    m.product_identity, m.genus));
  }

  add(4, "real ovals and orderings",
      r.real.oval_count == 1 && r.real.ordering_violations == 0 && r.real.root_counts_ok && r.real.closed_curves,
      fmt::format("ovals {}, ordering violations {}, root counts ok {}", r.real.oval_count,
                  r.real.ordering_violations, r.real.root_counts_ok));

  const IntMat& K = r.homology.K;
  add(5, "intersection matrix of alpha cycles", K == reference_intersection_matrix(),
      fmt::format("{} of 64 entries match", (K.array() == reference_intersection_matrix().array()).count()));

  {
    const IntMat T0 = reference_basis_change();
    const bool ok = T0.transpose() * K * T0 == symplectic_J(4);
    add(6, "canonical basis change", ok, ok ? "T0^T K T0 = J" : "T0^T K T0 differs from J");
  }

  const auto& pf = r.periods.fit;
  {
    const cplx expected(-0.5, 0.185576);
    const double dev = std::abs(pf.tau0 - expected);
    const bool ok = pf.max_residual < 1e-6 * std::abs(pf.tau0) && dev < 1e-5;
    add(7, "period matrix form", ok,
        fmt::format("tau0 = {}, residual {:.2e}, distance to -0.5+0.185576i {:.3e}", cstr(pf.tau0), pf.max_residual,
                    dev));
  }

  {
    const double e1 = std::abs(r.periods.j_tau0 - (-121945.0 / 32.0)) / (121945.0 / 32.0);
    const double e5 = std::abs(r.periods.j_5tau0 - (-12.5)) / 12.5;
    add(8, "j-invariant conditions", e1 < 1e-4 && e5 < 1e-4,
        fmt::format("j(tau0) = {} (rel {:.1e}), j(5 tau0) = {} (rel {:.1e})", cstr(r.periods.j_tau0), e1,
                    cstr(r.periods.j_5tau0), e5));
  }

  {
    const bool equal = r.homology.phi == reference_phi_action();
    add(9, "symmetry relation M Pi = Pi L", r.periods.symmetry_residual < 1e-7 && equal,
        fmt::format("residual {:.2e}, computed M equals reference: {}, period route agrees: {}",
                    r.periods.symmetry_residual, equal, r.periods.phi_action.M == r.homology.phi));
  }

  {
    const auto& rs = r.homology.real;
    const bool equal = r.homology.conj_alpha == reference_real_structure_alpha();
    add(10, "real structure", equal && rs.t_symplectic && rs.conjugates_to_s,
        fmt::format("S' equals reference: {}, T symplectic: {}, T S' T^-1 = S: {}", equal, rs.t_symplectic,
                    rs.conjugates_to_s));
  }

  const auto& rc = r.riemann;
  {
    const auto& d = rc.constraint.diagonal;
    const bool diag = d == std::vector<long long>{1, 1, 1, 1, 1, 1, 5, 5};
    const bool ok = diag && rc.constraint.distinct_residues == 25 && rc.constraint.distinct_values == 25;
    add(11, "Smith form and 2K candidates", ok,
        fmt::format("diag ({}), residue classes {}, distinct points {}, reference congruences equivalent: {}",
                    fmt::format("{},{},{},{},{},{},{},{}", d[0], d[1], d[2], d[3], d[4], d[5], d[6], d[7]),
                    rc.constraint.distinct_residues, rc.constraint.distinct_values,
                    rc.constraint.congruences_equivalent));
  }

  const PeriodLattice lat(r.periods.data.tau);
  {
    const auto& s = rc.search[rc.chosen];
    const double dev = lat.distance(s.K - reference_K(pf.tau0));
    add(12, "vector of Riemann constants", s.unique && dev < 1e-5 && s.separation >= 100.0,
        fmt::format("theta(A(D) {} K) vanishes for {} candidate(s); distance to reference K_Q {:.2e}; separation {:.2e}",
                    s.sign > 0 ? "+" : "-", s.passing, dev, s.separation));
  }

  {
    const double a = lat.distance(rc.two_k_snf - rc.two_k_canonical);
    const double b = lat.distance(rc.two_k_snf - 2.0 * rc.direct[0].K);
    const double c = lat.distance(rc.two_k_canonical - 2.0 * rc.direct[0].K);
    const auto& cand = rc.constraint.candidates[rc.resolved];
    add(13, "agreement of three routes to 2K", std::max({a, b, c}) < 1e-4,
        fmt::format("snf-canonical {:.1e}, snf-direct {:.1e}, canonical-direct {:.1e}; resolved n1={}, n5={}", a, b, c,
                    cand.n1, cand.n5));
  }

  add(14, "torsion", rc.torsion_10K < 1e-5 && rc.torsion_psi < 1e-5,
      fmt::format("10 K_Q: {:.1e}, 30 A(psi(Q)): {:.1e}, K_Q itself: {:.2f}", rc.torsion_10K, rc.torsion_psi,
                  rc.torsion_K));

  add(15, "invariant spin structure", rc.fixed_both.size() == 1,
      fmt::format("fixed by phi {}, by the involution {}, by both {}", rc.fixed_phi.size(), rc.fixed_abar.size(),
                  rc.fixed_both.size()));

  add(16, "theta-series parameterization", r.curve.theta_series_residual < 1e-10,
      fmt::format("|C| = {:.2e} at q = 0.1", r.curve.theta_series_residual));
  return out;
}

}  // namespace bring
