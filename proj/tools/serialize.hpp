#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bring/pipeline.hpp"

namespace bring::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(cplx z);
cplx complex_from(const json& j);
json to_json(const IntMat& m);
IntMat intmat_from(const json& j);
template <typename Derived>
json complex_matrix(const Eigen::MatrixBase<Derived>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(cplx(m(i, k))));
    rows.push_back(row);
  }
  return rows;
}
Mat8x4c mat8x4_from(const json& j);
json complex_vector(const Vec4c& v);

json config_json(const PipelineConfig& cfg);

json curve_section(const CurveStage& c);
json branch_points_section();
json monodromy_section(const MonodromyReport& m, cplx base);
json real_paths_section(const RealPathReport& r);
json spokes_json(const std::vector<TwoSpoke>& spokes);
std::vector<TwoSpoke> spokes_from(const json& j);
json homology_section(const HomologyStage& h);
json periods_section(const PeriodStage& p, const PipelineConfig& cfg);
json riemann_section(const RiemannStage& r, const PeriodStage& p);
json criteria_json(const std::vector<Criterion>& cs);

// Plot data.
std::string real_paths_csv(const RealPathReport& r, std::uint64_t seed);
std::string cycles_csv(const HomologyStage& h, std::uint64_t seed);

}  // namespace bring::cli
