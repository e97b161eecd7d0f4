#pragma once

#include <optional>

#include <Eigen/Dense>

#include "grcyc/common.hpp"
#include "grcyc/subset.hpp"

namespace grcyc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Determinant by LU with partial pivoting; the empty matrix has determinant 1.
Complex determinant(const Matrix& m);

Matrix select_columns(const Matrix& m, const Subset& cols);
Matrix select_rows(const Matrix& m, const Subset& rows);

/// Solves m x = rhs for square m. Returns nullopt when m is numerically
/// singular, meaning |det m| < zero_eps times the product of its row norms.
std::optional<Vector> solve_square(const Matrix& m, const Vector& rhs, double zero_eps);

/// Product of Euclidean row norms (Hadamard bound on every maximal minor).
double row_norm_product(const Matrix& m);

/// Throws InvalidArgument on any NaN/Inf entry.
void require_finite(const Matrix& m, std::string_view context);

}  // namespace grcyc
