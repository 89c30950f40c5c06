#include "fixtures.hpp"

namespace bring::test {

const HomologyStage& homology() {
  static const HomologyStage h = run_homology();
  return h;
}

const PeriodStage& periods() {
  static const PeriodStage p = run_periods(homology(), PipelineConfig{});
  return p;
}

const AbelMap& abel() {
  static const AbelMap a(periods().data);
  return a;
}

const Theta& theta() {
  static const Theta t(periods().data.tau);
  return t;
}

const RiemannStage& riemann() {
  static const RiemannStage r = run_riemann(periods(), homology().phi, PipelineConfig{});
  return r;
}

}  // namespace bring::test
