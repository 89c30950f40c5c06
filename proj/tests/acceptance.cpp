#include <algorithm>
#include <iostream>

#include <fmt/core.h>

#include "bring/pipeline.hpp"

int main() {
  const bring::PipelineConfig cfg;
  const auto results = bring::run_pipeline(cfg);
  const auto criteria = bring::evaluate_criteria(results);
  for (const auto& c : criteria)
    std::cout << fmt::format("{} criterion {:2d} {}: {}\n", c.pass ? "PASS" : "FAIL", c.id, c.name, c.detail);
  const auto passed = std::count_if(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
  std::cout << fmt::format("{} of {} criteria pass\n", passed, criteria.size());
  return passed == static_cast<long>(criteria.size()) ? 0 : 1;
}
