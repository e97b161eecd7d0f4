#include "grcyc/linalg.hpp"

#include <cmath>

namespace grcyc {

Complex determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return Complex(1.0, 0.0);
  return m.partialPivLu().determinant();
}

Matrix select_columns(const Matrix& m, const Subset& cols) {
  Matrix out(m.rows(), cols.size());
  for (int j = 0; j < cols.size(); ++j) out.col(j) = m.col(cols[j] - 1);
  return out;
}

Matrix select_rows(const Matrix& m, const Subset& rows) {
  Matrix out(rows.size(), m.cols());
  for (int i = 0; i < rows.size(); ++i) out.row(i) = m.row(rows[i] - 1);
  return out;
}

double row_norm_product(const Matrix& m) {
  double p = 1.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) p *= m.row(r).norm();
  return p;
}

std::optional<Vector> solve_square(const Matrix& m, const Vector& rhs, double zero_eps) {
  if (m.rows() != m.cols() || m.rows() != rhs.size()) {
    fail(ErrorCode::ShapeMismatch, "solve_square: incompatible shapes");
  }
  Eigen::PartialPivLU<Matrix> lu(m);
  const double scale = row_norm_product(m);
  if (!(std::abs(lu.determinant()) > zero_eps * scale)) return std::nullopt;
  return Vector(lu.solve(rhs));
}

void require_finite(const Matrix& m, std::string_view context) {
  if (!m.allFinite()) fail(ErrorCode::InvalidArgument, std::string(context) + ": non-finite entry");
}

}  // namespace grcyc
