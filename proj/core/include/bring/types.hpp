#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace bring {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

using Vec4c = Eigen::Matrix<cplx, 4, 1>;
using RowVec4c = Eigen::Matrix<cplx, 1, 4>;
using Mat4c = Eigen::Matrix<cplx, 4, 4>;
using Mat8x4c = Eigen::Matrix<cplx, 8, 4>;
using Mat8d = Eigen::Matrix<double, 8, 8>;
using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

inline const double kPi = 3.14159265358979323846;
inline const cplx kI{0.0, 1.0};

inline cplx zeta(int k = 1) { return std::polar(1.0, 2.0 * kPi * k / 5.0); }

// Golden ratio (1 + sqrt 5) / 2.
inline double golden() { return 0.5 * (1.0 + std::sqrt(5.0)); }

}  // namespace bring
