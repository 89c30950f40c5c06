#include "bring/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bring {

IntMat int_identity(int n) { return IntMat::Identity(n, n); }

IntMat symplectic_J(int g) {
  IntMat J = IntMat::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    J(i, g + i) = 1;
    J(g + i, i) = -1;
  }
  return J;
}

long long int_determinant(const IntMat& m) {
  // Fraction-free elimination.
  const int n = static_cast<int>(m.rows());
  Eigen::Matrix<__int128, Eigen::Dynamic, Eigen::Dynamic> a = m.cast<__int128>();
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * static_cast<long long>(a(n - 1, n - 1));
}

IntMat int_inverse(const IntMat& m) {
  const long long d = int_determinant(m);
  if (std::llabs(d) != 1) throw std::invalid_argument("matrix is not unimodular");
  const Eigen::MatrixXd inv = m.cast<double>().fullPivLu().inverse();
  IntMat r = inv.array().round().cast<long long>().matrix();
  if (m * r != int_identity(static_cast<int>(m.rows()))) throw std::runtime_error("integer inverse failed");
  return r;
}

bool is_symplectic(const IntMat& g) {
  const IntMat J = symplectic_J(static_cast<int>(g.rows() / 2));
  return g * J * g.transpose() == J;
}

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<long long> SmithForm::diagonal() const {
  std::vector<long long> d;
  for (int i = 0; i < S.rows(); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMat& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  IntMat A = m, L = int_identity(r), R = int_identity(c);  // L m R = A throughout
  for (int k = 0; k < std::min(r, c); ++k) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      int pi = -1, pj = -1;
      for (int i = k; i < r; ++i)
        for (int j = k; j < c; ++j)
          if (A(i, j) != 0 && (pi < 0 || std::llabs(A(i, j)) < std::llabs(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      A.row(k).swap(A.row(pi));
      L.row(k).swap(L.row(pi));
      A.col(k).swap(A.col(pj));
      R.col(k).swap(R.col(pj));
      bool clean = true;
      for (int i = k + 1; i < r; ++i) {
        const long long q = A(i, k) / A(k, k);
        A.row(i) -= q * A.row(k);
        L.row(i) -= q * L.row(k);
        if (A(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < c; ++j) {
        const long long q = A(k, j) / A(k, k);
        A.col(j) -= q * A.col(k);
        R.col(j) -= q * R.col(k);
        if (A(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row k and repeat.
      int bad = -1;
      for (int i = k + 1; i < r && bad < 0; ++i)
        for (int j = k + 1; j < c; ++j)
          if (A(i, j) % A(k, k) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      A.row(k) += A.row(bad);
      L.row(k) += L.row(bad);
    }
    if (A(k, k) < 0) {
      A.row(k) *= -1;
      L.row(k) *= -1;
    }
  }
  SmithForm f;
  f.S = A;
  f.U = int_inverse(L);
  f.V = int_inverse(R);
  return f;
}

namespace {

Mat8d real_system(const Mat4c& tau) {
  Mat8d R = Mat8d::Zero();
  R.topLeftCorner<4, 4>().setIdentity();
  R.topRightCorner<4, 4>() = tau.real();
  R.bottomRightCorner<4, 4>() = tau.imag();
  return R;
}

}  // namespace

PeriodLattice::PeriodLattice(const Mat4c& tau) : tau_(tau), lu_(real_system(tau)) {}

void PeriodLattice::coordinates(const Vec4c& z, Eigen::Vector4d& u, Eigen::Vector4d& w) const {
  Eigen::Matrix<double, 8, 1> rhs;
  rhs << z.real(), z.imag();
  const Eigen::Matrix<double, 8, 1> uw = lu_.solve(rhs);
  u = uw.head<4>();
  w = uw.tail<4>();
}

Vec4c PeriodLattice::reduce(const Vec4c& z, Eigen::Vector4d* n, Eigen::Vector4d* m) const {
  Eigen::Vector4d u, w;
  coordinates(z, u, w);
  const Eigen::Vector4d nu = (u.array() + 0.5).floor().matrix();
  const Eigen::Vector4d nw = (w.array() + 0.5).floor().matrix();
  if (n) *n = nu;
  if (m) *m = nw;
  return z - nu.cast<cplx>() - tau_ * nw.cast<cplx>();
}

double PeriodLattice::distance(const Vec4c& z) const {
  Eigen::Vector4d u, w;
  coordinates(z, u, w);
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(u(i) - std::round(u(i))));
    d = std::max(d, std::abs(w(i) - std::round(w(i))));
  }
  return d;
}

Theta::Theta(const Mat4c& tau, double tail_tol, int max_radius) : tau_(tau), lattice_(tau) {
  Eigen::Matrix4d Y = tau.imag();
  Y = (0.5 * (Y + Y.transpose())).eval();
  const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(Y).eigenvalues()(0);
  if (lmin <= 0.0) throw std::invalid_argument("imaginary part of tau is not positive definite");
  // For reduced z = u + tau w the term n has modulus exp(-pi (n+w)Y(n+w) + pi wYw);
  // keep every n that can exceed tail_tol for some w in [-1/2, 1/2]^4.
  const double wmax = 0.5 * std::sqrt(Y.cwiseAbs().sum());
  const double T = -std::log(tail_tol) / kPi;
  const double bound = std::pow(std::sqrt(T + wmax * wmax) + wmax, 2);
  const Eigen::Matrix4d Yinv = Y.inverse();
  int R = 0;
  for (int d = 0; d < 4; ++d) R = std::max(R, static_cast<int>(std::ceil(std::sqrt(bound * Yinv(d, d)))));
  if (R > max_radius) throw std::runtime_error("theta truncation radius exceeds the configured maximum");
  radius_ = R;
  for (int a = -R; a <= R; ++a)
    for (int b = -R; b <= R; ++b)
      for (int c = -R; c <= R; ++c)
        for (int d = -R; d <= R; ++d) {
          const Eigen::Vector4d n(a, b, c, d);
          if (n.dot(Y * n) > bound) continue;
          const Vec4c nc = n.cast<cplx>();
          terms_.push_back({{a + R, b + R, c + R, d + R}, std::exp(kI * kPi * (nc.transpose() * tau_ * nc)(0, 0))});
        }
}

cplx Theta::direct(const Vec4c& z) const {
  const int R = radius_, w = 2 * R + 1;
  // Powers exp(2 pi i k z_d) for k in [-R, R].
  std::vector<cplx> pw(4 * static_cast<std::size_t>(w));
  for (int d = 0; d < 4; ++d) {
    const cplx e = std::exp(2.0 * kPi * kI * z(d));
    const cplx ei = 1.0 / e;
    pw[d * w + R] = 1.0;
    for (int k = 1; k <= R; ++k) {
      pw[d * w + R + k] = pw[d * w + R + k - 1] * e;
      pw[d * w + R - k] = pw[d * w + R - k + 1] * ei;
    }
  }
  cplx total = 0.0;
  for (const auto& t : terms_)
    total += t.coeff * pw[t.idx[0]] * pw[w + t.idx[1]] * pw[2 * w + t.idx[2]] * pw[3 * w + t.idx[3]];
  return total;
}

cplx Theta::operator()(const Vec4c& z) const {
  Eigen::Vector4d n, m;
  const Vec4c zr = lattice_.reduce(z, &n, &m);
  const Vec4c mc = m.cast<cplx>();
  // theta(z + tau m) = exp(-i pi m tau m - 2 pi i m z) theta(z)
  const cplx factor =
      std::exp(-kI * kPi * (mc.transpose() * tau_ * mc)(0, 0) - 2.0 * kPi * kI * (mc.transpose() * zr)(0, 0));
  return factor * direct(zr);
}

double Theta::reduced_abs(const Vec4c& z) const { return std::abs(direct(lattice_.reduce(z))); }

}  // namespace bring
