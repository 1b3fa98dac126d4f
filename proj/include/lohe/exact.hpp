#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "lohe/linalg.hpp"

namespace lohe::exact {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<Eigen::Index> row_reduce(RationalMatrix& rows, Eigen::Index cols);

/// Kernel basis vectors: one per free column, with a 1 in that column.
std::vector<RationalVector> kernel_basis(const IntMatrix& m);

}  // namespace lohe::exact
