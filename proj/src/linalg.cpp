#include "lohe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "lohe/error.hpp"
#include "lohe/exact.hpp"

namespace lohe {

double skew_residual(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "skew_residual needs a square matrix");
  }
  return (m + m.transpose()).cwiseAbs().maxCoeff();
}

SkewMatrix::SkewMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "frequency matrix must be square and nonempty, got " +
                    std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
  }
  const double scale = entries_.cwiseAbs().maxCoeff();
  const double residual = skew_residual(entries_);
  if (residual > 1e-12 * scale) {
    throw Error(ErrorCode::NotSkewSymmetric,
                "max |M_ij + M_ji| = " + std::to_string(residual));
  }
}

SkewMatrix planar_frequency(double omega) {
  Matrix m(2, 2);
  m << 0.0, -omega, omega, 0.0;
  return SkewMatrix(std::move(m));
}

Subspace::Subspace(Eigen::Index ambient, Matrix basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  if (basis_.cols() == 0) {
    basis_.resize(ambient_, 0);
  }
  if (basis_.rows() != ambient_ || basis_.cols() > ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subspace basis has wrong shape");
  }
  if (basis_.cols() > 0) {
    const Matrix gram = basis_.transpose() * basis_;
    const double err =
        (gram - Matrix::Identity(basis_.cols(), basis_.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-12) {
      throw Error(ErrorCode::NumericalFailure,
                  "subspace basis is not orthonormal (err " + std::to_string(err) + ")");
    }
  }
}

Subspace Subspace::zero(Eigen::Index ambient) { return Subspace(ambient, Matrix(ambient, 0)); }

Subspace Subspace::full(Eigen::Index ambient) {
  return Subspace(ambient, Matrix::Identity(ambient, ambient));
}

Subspace Subspace::span(const Matrix& columns, double tol) {
  const Eigen::Index n = columns.rows();
  if (columns.cols() == 0 || columns.isZero(0.0)) {
    return zero(n);
  }
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) {
    ++rank;
  }
  Matrix basis = svd.matrixU().leftCols(rank);
  return Subspace(n, std::move(basis));
}

Matrix Subspace::projector() const { return basis_ * basis_.transpose(); }

Vector Subspace::project(const Vector& v) const {
  return basis_ * (basis_.transpose() * v);
}

double Subspace::residual(const Vector& v) const { return (v - project(v)).norm(); }

Subspace Subspace::orthogonal_complement() const {
  return kernel(basis_.cols() == 0 ? Matrix::Zero(1, ambient_) : Matrix(basis_.transpose()));
}

Subspace kernel(const Matrix& m, double tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0 || m.isZero(0.0)) {
    return Subspace::full(n);
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  // Right-singular vectors beyond min(r, n) belong to the kernel as well.
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j >= sv.size() || sv(j) <= cutoff) {
      null_cols.push_back(j);
    }
  }
  Matrix basis(n, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t c = 0; c < null_cols.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(null_cols[c]);
  }
  return Subspace(n, std::move(basis));
}

Subspace intersect(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "intersect: ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                    std::to_string(b.ambient_dim()));
  }
  const Eigen::Index n = a.ambient_dim();
  const Matrix id = Matrix::Identity(n, n);
  Matrix stacked(2 * n, n);
  stacked.topRows(n) = id - a.projector();
  stacked.bottomRows(n) = id - b.projector();
  return kernel(stacked, tol);
}

double projector_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "projector_distance: ambient mismatch");
  }
  return (a.projector() - b.projector()).norm();
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "max_principal_angle: ambient mismatch");
  }
  if (a.dim() != b.dim()) {
    return std::numbers::pi / 2;
  }
  if (a.dim() == 0) {
    return 0.0;
  }
  // sin of the largest angle is the spectral norm of (I - Pa) Qb.
  const Matrix off = b.basis() - a.basis() * (a.basis().transpose() * b.basis());
  Eigen::JacobiSVD<Matrix> svd(off);
  return std::asin(std::min(1.0, svd.singularValues()(0)));
}

bool same_span(const Subspace& a, const Subspace& b, double tol) {
  return a.dim() == b.dim() && projector_distance(a, b) <= tol;
}

Subspace exact_kernel_oracle(const IntMatrix& m) {
  const auto vectors = exact::kernel_basis(m);
  Matrix columns(m.cols(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
      columns(i, static_cast<Eigen::Index>(c)) = static_cast<double>(vectors[c][i]);
    }
  }
  if (columns.cols() == 0) {
    return Subspace::zero(m.cols());
  }
  // Exact kernel vectors are independent; Householder QR orthonormalizes
  // without re-deciding the rank.
  Eigen::HouseholderQR<Matrix> qr(columns);
  Matrix q = qr.householderQ() * Matrix::Identity(m.cols(), columns.cols());
  return Subspace(m.cols(), std::move(q));
}

Eigen::Index exact_rank(const IntMatrix& m) {
  auto rows = exact::to_rational(m);
  return static_cast<Eigen::Index>(exact::row_reduce(rows, m.cols()).size());
}

Matrix expm_skew(const SkewMatrix& omega, double t) {
  const Matrix scaled = t * omega.matrix();
  return scaled.exp();
}

namespace exact {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix rows(static_cast<std::size_t>(m.rows()),
                      RationalVector(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rows[i][j] = Rational(m(i, j));
    }
  }
  return rows;
}

std::vector<Eigen::Index> row_reduce(RationalMatrix& rows, Eigen::Index cols) {
  std::vector<Eigen::Index> pivots;
  std::size_t lead = 0;
  for (Eigen::Index c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = 1 / rows[lead][c];
    for (auto& x : rows[lead]) {
      x *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) {
        continue;
      }
      const Rational factor = rows[r][c];
      for (Eigen::Index k = c; k < cols; ++k) {
        rows[r][k] -= factor * rows[lead][k];
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::vector<RationalVector> kernel_basis(const IntMatrix& m) {
  const Eigen::Index n = m.cols();
  auto rows = to_rational(m);
  const auto pivots = row_reduce(rows, n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<RationalVector> basis;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RationalVector v(static_cast<std::size_t>(n), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace exact

}  // namespace lohe
