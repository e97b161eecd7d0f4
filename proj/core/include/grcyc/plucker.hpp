#pragma once

#include <cstddef>
#include <vector>

#include "grcyc/common.hpp"
#include "grcyc/linalg.hpp"
#include "grcyc/subset.hpp"

namespace grcyc {

/// A point of Gr(k,n) as its projective vector of Plücker coordinates,
/// indexed by k-subsets of {1..n} in lexicographic order.
///
/// Always stored in canonical form: the coordinate of largest modulus is
/// exactly 1 + 0i (the lexicographically first one among ties within a
/// relative 1e-12).
class PluckerVector {
public:
  /// Throws InvalidArgument if the sizes disagree, any entry is non-finite,
  /// or the vector is identically zero.
  PluckerVector(int k, int n, std::vector<Complex> coords);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return coords_.size(); }

  Complex operator[](const Subset& s) const;
  Complex at(std::size_t rank) const { return coords_.at(rank); }
  const std::vector<Complex>& coords() const noexcept { return coords_; }

  /// Rank of the subset normalized to 1.
  std::size_t pivot() const noexcept { return pivot_; }
  Subset pivot_subset() const;

  /// Coordinate of an ordered column list: the sign of the sorting
  /// permutation times the coordinate of the sorted set, or 0 on repeats.
  Complex ordered(const std::vector<int>& columns) const;

private:
  int k_;
  int n_;
  std::vector<Complex> coords_;
  std::size_t pivot_ = 0;
};

/// Every k x k minor of a k x n matrix, lexicographic order, not normalized.
std::vector<Complex> maximal_minors(const Matrix& a);

/// Throws RankDeficient if every minor has modulus below
/// zero_eps * (product of row norms).
PluckerVector plucker_from_matrix(const Matrix& a, const Tolerance& tol = {});

/// A k x n matrix whose row span is the point: the identity sits in the
/// columns of the pivot subset.
Matrix representative_matrix(const PluckerVector& p);

/// max_I |p_I - e^{i phi} q_I| with both in canonical scale and phi the
/// best aligning phase. Throws ShapeMismatch.
double projective_distance(const PluckerVector& p, const PluckerVector& q);

/// Canonical forms agree within abs_eps + rel_eps * (max modulus = 1).
bool projective_equal(const PluckerVector& p, const PluckerVector& q, const Tolerance& tol = {});

/// The point of Gr(n-k,n) orthogonal to `p` under
/// <v,w> = sum_j (-1)^(j-1) v_j w_j; its coordinate at I^c equals p's at I.
PluckerVector orthogonal_complement(const PluckerVector& p);

/// Kernel of the alternating form above applied to a k x n matrix:
/// an (n-k) x n matrix whose rows are orthogonal to every row of `a`.
Matrix alternating_orthogonal_basis(const Matrix& a);

/// Row span of a * m^T, i.e. every row vector v is mapped to m v.
/// Throws SingularMap if |det m| <= zero_eps.
Matrix apply_row_span_map(const Matrix& m, const Matrix& a, const Tolerance& tol = {});
PluckerVector apply_row_span_map(const Matrix& m, const PluckerVector& p, const Tolerance& tol = {});

/// Largest three-term Plücker relation residual
/// |D_Sac D_Sbd - D_Sab D_Scd - D_Sad D_Sbc|, relative to max modulus 1.
double plucker_relation_residual(const PluckerVector& p);

}  // namespace grcyc

namespace grcyc {

/// Whether `v` lies in the row span of the point: every maximal minor of the
/// representative matrix with `v` appended as an extra row is below
/// zero_eps-relative size (scaled by |v|).
bool contains_vector(const PluckerVector& p, const Vector& v, double rel_tol = 1e-9);

}  // namespace grcyc
