#pragma once

#include "bring/types.hpp"

namespace bring {

// Coefficients are stored in ascending order: c[0] + c[1] x + ...
cplx horner(const CVector& c, cplx x);
CVector derivative(const CVector& c);

// All roots of a univariate polynomial by Aberth-Ehrlich iteration followed by
// Newton polishing. Leading zero coefficients are stripped.
CVector aberth_roots(const CVector& c, int max_iter = 400);

// Newton refinement of a single root.
cplx newton_polish(const CVector& c, cplx z, int iters = 8);

// Truncated power series in one variable, ascending coefficients.
namespace series {
CVector mul(const CVector& a, const CVector& b, std::size_t n);
CVector inverse(const CVector& a, std::size_t n);
CVector add(const CVector& a, const CVector& b);
CVector scale(const CVector& a, cplx s);
}  // namespace series

}  // namespace bring
