#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bring/types.hpp"

namespace bring {

using BigInt = boost::multiprecision::cpp_int;
// Integer polynomial, ascending coefficients.
using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
// Exact quotient a / b; throws if the division leaves a remainder.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);
void poly_trim(IntPoly& a);
CVector to_complex(const IntPoly& p);

// Resultant in y of two polynomials whose coefficients are polynomials in x.
IntPoly resultant_y(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g);

// y-discriminant of the affine plane curve: Res_y(F, F_y) / lc_y(F).
IntPoly discriminant_x();

// 256 x^10 - 837 x^5 + 3456.
IntPoly branch_polynomial();

// -x^3 (256 u^2 - 837 u + 3456)(u - 1)^2 with u = x^5.
cplx factored_discriminant(cplx x);

// Constant c with discriminant_x() = c * factored form.
BigInt discriminant_constant();

// Largest relative difference between the expanded and the factored discriminant
// at random points of the disk |x| < 2.
double discriminant_spot_check(int samples, std::uint64_t seed = 2);

// Real roots of the discriminant, deduplicated.
std::vector<double> discriminant_real_roots();

}  // namespace bring
