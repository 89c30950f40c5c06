#pragma once

#include "bring/pipeline.hpp"

namespace bring::test {

// Shared default-configuration stages, computed once per process.
const HomologyStage& homology();
const PeriodStage& periods();
const AbelMap& abel();
const Theta& theta();
const RiemannStage& riemann();

}  // namespace bring::test
