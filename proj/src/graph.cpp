#include "lohe/graph.hpp"

#include <algorithm>
#include <string>

#include "lohe/error.hpp"

namespace lohe {

Digraph::Digraph(Matrix adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() == 0 || adjacency_.rows() != adjacency_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "adjacency matrix must be square and nonempty");
  }
  for (Eigen::Index i = 0; i < adjacency_.rows(); ++i) {
    if (adjacency_(i, i) != 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "adjacency diagonal must be zero (a_" + std::to_string(i + 1) +
                      std::to_string(i + 1) + " = " + std::to_string(adjacency_(i, i)) + ")");
    }
    for (Eigen::Index j = 0; j < adjacency_.cols(); ++j) {
      if (!(adjacency_(i, j) >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "adjacency weights must be nonnegative");
      }
    }
  }
}

Digraph Digraph::directed_cycle(Eigen::Index m) {
  Matrix a = Matrix::Zero(m, m);
  if (m > 1) {
    for (Eigen::Index i = 0; i < m; ++i) {
      a(i, (i + m - 1) % m) = 1.0;
    }
  }
  return Digraph(std::move(a));
}

Digraph Digraph::complete(Eigen::Index m) {
  Matrix a = Matrix::Ones(m, m);
  a.diagonal().setZero();
  return Digraph(std::move(a));
}

std::vector<std::vector<Eigen::Index>> Digraph::in_neighbors() const {
  std::vector<std::vector<Eigen::Index>> in(static_cast<std::size_t>(agents()));
  for (Eigen::Index i = 0; i < agents(); ++i) {
    for (Eigen::Index j = 0; j < agents(); ++j) {
      if (adjacency_(i, j) > 0.0) {
        in[i].push_back(j);
      }
    }
  }
  return in;
}

Laplacian::Laplacian(const Digraph& g) : matrix_(-g.adjacency()) {
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    matrix_(i, i) = g.adjacency().row(i).sum();
  }
}

namespace {

struct TarjanState {
  const std::vector<std::vector<Eigen::Index>>& successors;
  std::vector<int> index;
  std::vector<int> lowlink;
  std::vector<bool> on_stack;
  std::vector<Eigen::Index> stack;
  int counter = 0;
  std::vector<std::vector<Eigen::Index>> components;

  void visit(Eigen::Index v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Eigen::Index w : successors[v]) {
      if (index[w] < 0) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<Eigen::Index> component;
      Eigen::Index w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  }
};

}  // namespace

std::vector<std::vector<Eigen::Index>> strongly_connected_components(const Digraph& g) {
  const auto m = static_cast<std::size_t>(g.agents());
  // Information flows j -> i whenever a_ij > 0.
  std::vector<std::vector<Eigen::Index>> successors(m);
  for (Eigen::Index i = 0; i < g.agents(); ++i) {
    for (Eigen::Index j = 0; j < g.agents(); ++j) {
      if (g.weight(i, j) > 0.0) {
        successors[j].push_back(i);
      }
    }
  }
  TarjanState state{successors, std::vector<int>(m, -1), std::vector<int>(m, -1),
                    std::vector<bool>(m, false), {}, 0, {}};
  for (Eigen::Index v = 0; v < g.agents(); ++v) {
    if (state.index[v] < 0) {
      state.visit(v);
    }
  }
  return std::move(state.components);
}

bool is_strongly_connected(const Digraph& g) {
  return strongly_connected_components(g).size() == 1;
}

Vector left_null_vector(const Laplacian& lap, bool strongly_connected) {
  if (!strongly_connected) {
    throw Error(ErrorCode::NotStronglyConnected,
                "a positive left null vector of L requires a strongly connected digraph");
  }
  const Matrix& l = lap.matrix();
  Eigen::JacobiSVD<Matrix> svd(l.transpose(), Eigen::ComputeFullV);
  Vector beta = svd.matrixV().col(l.cols() - 1);
  if (beta(0) < 0.0) {
    beta = -beta;
  }
  const double scale = beta.cwiseAbs().maxCoeff();
  if (beta.minCoeff() <= 1e-12 * scale) {
    throw Error(ErrorCode::NumericalFailure,
                "left null vector of L has entries of mixed sign (min " +
                    std::to_string(beta.minCoeff() / scale) + " relative)");
  }
  beta /= beta.sum();
  const double residual = (beta.transpose() * l).norm();
  if (residual > 1e-10 * std::max(l.norm(), 1e-300)) {
    throw Error(ErrorCode::NumericalFailure,
                "left null vector residual " + std::to_string(residual) + " too large");
  }
  return beta;
}

}  // namespace lohe
