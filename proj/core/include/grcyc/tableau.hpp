#pragma once

#include <vector>

namespace grcyc {

/// Rectangular semistandard tableau with entries in {1..n}: rows weakly
/// increase, columns strictly increase.
class Tableau {
public:
  /// Throws InvalidTableau on a ragged, empty or non-semistandard filling.
  Tableau(std::vector<std::vector<int>> rows, int n);

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return static_cast<int>(rows_.front().size()); }
  int n() const noexcept { return n_; }
  int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<int>>& entries() const noexcept { return rows_; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

private:
  std::vector<std::vector<int>> rows_;
  int n_;
};

/// Schützenberger promotion: remove the 1s, decrement the rest, slide each
/// hole out by forward jeu de taquin (smaller of east/south moves in; south
/// on ties) and fill the vacated corner cells with n.
Tableau promotion(const Tableau& t);

/// Least p >= 1 with pr^p(t) = t. Throws std::logic_error if p does not
/// divide n, which would contradict pr^n = id on rectangles.
int promotion_order(const Tableau& t);

/// Every semistandard filling of the rows x cols rectangle from {1..n}.
std::vector<Tableau> all_rectangular_ssyt(int rows, int cols, int n);

}  // namespace grcyc
