#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bring/curve.hpp"
#include "bring/types.hpp"

namespace bring {

// Truncated Laurent series t^valuation * (c0 + c1 t + ...).
struct Laurent {
  int valuation = 0;
  CVector coeffs;

  cplx eval(cplx t) const;
  cplx derivative(cplx t) const;
  cplx leading() const { return coeffs.empty() ? cplx(0.0) : coeffs.front(); }
};

// A point of the desingularized curve above an x-value, with a local
// parameterization x = x0 + t^e (finite) or x = t^-e (infinite).
struct Place {
  ProjPoint center{};
  std::string branch_label;
  bool at_infinity = false;
  cplx x0 = 0.0;
  int ram_index = 1;
  Laurent x;
  Laurent y;

  cplx x_at(cplx t) const { return x.eval(t); }
  cplx y_at(cplx t) const { return y.eval(t); }
  // Local parameter values t with x(t) = xv near the place; one per sheet.
  std::vector<cplx> parameters_for(cplx xv) const;
  std::string name() const;
};

// Places above x0 (std::nullopt means infinity) with `order` series terms.
std::vector<Place> places_over(std::optional<cplx> x0, int order = 8);

// Largest |coefficient| among the first `order` terms of F(x(t), y(t)),
// relative to the coefficient scale of the substituted monomials.
double expansion_residual(const Place& p, int order);

}  // namespace bring
