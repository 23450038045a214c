#pragma once

#include <optional>
#include <vector>

#include "domfan/numeric.hpp"

// Small exact linear algebra over Q used by the cone and root code.
namespace domfan::linalg {

using Matrix = std::vector<RationalVector>;  // row-major

/// Rank of a list of vectors.
size_t rank(const std::vector<RationalVector>& vectors);

/// Solves target = sum_i c_i * columns[i]. The columns must be linearly
/// independent; returns nullopt when target is not in their span.
std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns,
                                            const RationalVector& target);

/// A basis of { x : row . x = 0 for every row }.
std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, size_t dim);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const std::vector<std::vector<Integer>>& m);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace domfan::linalg
