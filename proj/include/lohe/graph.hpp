#pragma once

#include <vector>

#include "lohe/linalg.hpp"

namespace lohe {

/// Weighted digraph on m agents. adjacency(i, j) > 0 means agent i receives
/// the state of agent j, i.e. the edge (j, i) exists.
class Digraph {
 public:
  /// Rejects negative weights, a nonzero diagonal, and non-square input.
  explicit Digraph(Matrix adjacency);

  /// Unit-weight cycle in which agent i listens to agent i-1 (agent 0 listens
  /// to agent m-1).
  static Digraph directed_cycle(Eigen::Index m);
  static Digraph complete(Eigen::Index m);

  Eigen::Index agents() const { return adjacency_.rows(); }
  const Matrix& adjacency() const { return adjacency_; }
  double weight(Eigen::Index i, Eigen::Index j) const { return adjacency_(i, j); }

  /// in_neighbors()[i] lists every j with a_ij > 0.
  std::vector<std::vector<Eigen::Index>> in_neighbors() const;

 private:
  Matrix adjacency_;
};

/// L with l_ij = -a_ij off the diagonal and l_ii equal to the i-th row sum of A.
class Laplacian {
 public:
  explicit Laplacian(const Digraph& g);

  const Matrix& matrix() const { return matrix_; }
  Eigen::Index size() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
};

/// Strongly connected components by Tarjan's algorithm over the relation
/// "i receives from j". Components come out in reverse topological order.
std::vector<std::vector<Eigen::Index>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

inline Laplacian laplacian(const Digraph& g) { return Laplacian(g); }

/// Positive left null vector of L (beta^T L = 0), normalized to sum one.
/// Throws NotStronglyConnected when the flag is false and NumericalFailure
/// when the computed vector has entries of mixed sign.
Vector left_null_vector(const Laplacian& lap, bool strongly_connected);

}  // namespace lohe
