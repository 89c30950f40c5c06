#pragma once

#include <vector>

namespace bring {

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order.
const GaussLegendre& gauss_legendre(int order);

}  // namespace bring
