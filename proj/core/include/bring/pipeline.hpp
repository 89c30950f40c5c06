#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bring/continuation.hpp"
#include "bring/curve.hpp"
#include "bring/homology.hpp"
#include "bring/periods.hpp"
#include "bring/real_paths.hpp"
#include "bring/riemann.hpp"

namespace bring {

struct PipelineConfig {
  std::uint64_t seed = 1;
  double tol_periods = 1e-10;
  double tol_theta = 1e-5;
  int quad_order = 24;
  int divisors = 10;
  cplx base = 2.0;
};

struct CurveStage {
  EquivalenceReport equivalence;
  double discriminant_residual = 0.0;
  double theta_series_residual = 0.0;
  std::vector<SingularPoint> singular;
  SymmetryExponent phi_exponent;
};
CurveStage run_curve(const PipelineConfig& cfg);

struct HomologyStage {
  std::vector<TwoSpoke> spokes;
  std::vector<Cycle> alphas;
  IntMat K;
  IntMat phi_alpha, phi;            // phi action, alpha and canonical basis
  IntMat conj_alpha;                // complex conjugation, alpha basis
  RealStructureReport real;
};
HomologyStage run_homology();
// Rebuild from stored spoke parameters.
HomologyStage run_homology(const std::vector<TwoSpoke>& spokes);

struct PeriodStage {
  PeriodData data;
  Tau0Fit fit;
  cplx j_tau0, j_5tau0;
  double symmetry_residual = 0.0;
  AStructureFit a_fit;
  PeriodAction phi_action, conj_action, abar_action;
  Pullback abar;
};
PeriodStage run_periods(const HomologyStage& h, const PipelineConfig& cfg);
// Rebuild the derived quantities from stored alpha periods.
PeriodStage run_periods(const Mat8x4c& alpha_periods);

struct RiemannStage {
  Constraint2K constraint;
  int resolved = -1;
  double resolved_distance = 0.0;
  Vec4c two_k_canonical;
  Vec4c two_k_snf;
  std::vector<DivisorSample> divisors;
  std::array<HalfPeriodResult, 2> search;  // signs +1, -1
  int chosen = 0;
  Vec4c K;
  std::array<Vec4c, 2> direct_e;
  std::array<DirectKResult, 2> direct;
  double direct_invariance = 0.0;
  Vec4c psi_image;
  double torsion_10K = 0.0, torsion_K = 0.0, torsion_psi = 0.0;
  double torsion_b = 0.0, torsion_c = 0.0;
  std::size_t abel_states = 0;
  double abel_consistency = 0.0;
  double path_independence = 0.0;
  std::vector<Characteristic> fixed_phi, fixed_abar, fixed_both;
  int even = 0, odd = 0;
};
// phi is the canonical-basis action of the order five symmetry.
RiemannStage run_riemann(const PeriodStage& p, const IntMat& phi, const PipelineConfig& cfg);

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PipelineResults {
  CurveStage curve;
  MonodromyReport monodromy;
  RealPathReport real;
  HomologyStage homology;
  PeriodStage periods;
  RiemannStage riemann;
};
PipelineResults run_pipeline(const PipelineConfig& cfg);
std::vector<Criterion> evaluate_criteria(const PipelineResults& r);

}  // namespace bring
