#pragma once

#include <vector>

#include "bring/types.hpp"

namespace bring {

// Integer matrix helpers.
IntMat int_identity(int n);
IntMat symplectic_J(int g);  // [[0, I], [-I, 0]]
long long int_determinant(const IntMat& m);
// Inverse of a unimodular matrix; throws if the matrix is not unimodular.
IntMat int_inverse(const IntMat& m);
bool is_symplectic(const IntMat& g);  // g J g^T = J
IntMat from_rows(const std::vector<std::vector<long long>>& rows);

struct SmithForm {
  IntMat U, S, V;  // M = U S V, U and V unimodular, S diagonal with d_i | d_{i+1}
  std::vector<long long> diagonal() const;
};
SmithForm smith_normal_form(const IntMat& m);

// The lattice Z^g + tau Z^g.
class PeriodLattice {
 public:
  explicit PeriodLattice(const Mat4c& tau);

  // Real coordinates (u, w) with z = u + tau w.
  void coordinates(const Vec4c& z, Eigen::Vector4d& u, Eigen::Vector4d& w) const;
  // Representative with u, w in [-1/2, 1/2); n, m receive the removed integer parts.
  Vec4c reduce(const Vec4c& z, Eigen::Vector4d* n = nullptr, Eigen::Vector4d* m = nullptr) const;
  // Largest coordinate distance of z to the lattice.
  double distance(const Vec4c& z) const;
  const Mat4c& tau() const { return tau_; }

 private:
  Mat4c tau_;
  Eigen::PartialPivLU<Mat8d> lu_;
};

// Riemann theta function with a fixed period matrix.
class Theta {
 public:
  explicit Theta(const Mat4c& tau, double tail_tol = 1e-12, int max_radius = 12);

  // Lattice sum evaluated after reduction, with the quasi-periodicity factor restored.
  // The truncation is an ellipsoid in the Im(tau) norm sized for reduced arguments.
  cplx operator()(const Vec4c& z) const;
  // Lattice sum at z itself, with no reduction.
  cplx direct(const Vec4c& z) const;
  // |theta| at the reduced representative of z.
  double reduced_abs(const Vec4c& z) const;
  int radius() const { return radius_; }
  std::size_t term_count() const { return terms_.size(); }
  const PeriodLattice& lattice() const { return lattice_; }

 private:
  Mat4c tau_;
  PeriodLattice lattice_;
  int radius_ = 0;
  struct Term {
    int idx[4];  // n + R
    cplx coeff;  // exp(i pi n tau n)
  };
  std::vector<Term> terms_;
};

}  // namespace bring
