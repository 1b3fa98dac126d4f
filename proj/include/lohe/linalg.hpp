#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace lohe {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kDefaultKernelTol = 1e-10;

/// max |M_ij + M_ji|, the amount by which M fails to be skew-symmetric.
double skew_residual(const Matrix& m);

/// Real skew-symmetric frequency matrix. Construction rejects input whose
/// symmetric part exceeds 1e-12 of the largest entry.
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Matrix entries_;
};

/// 2x2 rotation generator [[0, -w], [w, 0]].
SkewMatrix planar_frequency(double omega);

/// Linear subspace of R^n carried as an orthonormal n x d basis. d = 0 is a
/// valid value (the zero subspace).
class Subspace {
 public:
  /// `basis` columns must already be orthonormal (checked to 1e-12).
  Subspace(Eigen::Index ambient, Matrix basis);

  static Subspace zero(Eigen::Index ambient);
  static Subspace full(Eigen::Index ambient);
  /// Orthonormalizes arbitrary spanning columns; rank decided at `tol`
  /// relative to the largest singular value.
  static Subspace span(const Matrix& columns, double tol = kDefaultKernelTol);

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  Matrix projector() const;
  Vector project(const Vector& v) const;
  /// ||v - P v||
  double residual(const Vector& v) const;
  Subspace orthogonal_complement() const;

 private:
  Eigen::Index ambient_;
  Matrix basis_;
};

/// Span of right-singular vectors with sigma_j <= tol * sigma_max (everything
/// when M is zero).
Subspace kernel(const Matrix& m, double tol = kDefaultKernelTol);

/// a ∩ b as the kernel of the stacked complement projectors [I - Pa; I - Pb].
Subspace intersect(const Subspace& a, const Subspace& b, double tol = kDefaultKernelTol);

/// ||Pa - Pb||_F. Zero iff the spans coincide.
double projector_distance(const Subspace& a, const Subspace& b);

/// Largest principal angle between equal-dimension subspaces, pi/2 when the
/// dimensions differ.
double max_principal_angle(const Subspace& a, const Subspace& b);

bool same_span(const Subspace& a, const Subspace& b, double tol = 1e-8);

/// Kernel by exact rational elimination, orthonormalized afterwards. The
/// dimension is exact.
Subspace exact_kernel_oracle(const IntMatrix& m);

/// Rank over the rationals.
Eigen::Index exact_rank(const IntMatrix& m);

/// exp(t * omega). Orthogonal with determinant one for skew input.
Matrix expm_skew(const SkewMatrix& omega, double t);

}  // namespace lohe
