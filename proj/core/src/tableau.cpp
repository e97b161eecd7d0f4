#include "grcyc/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "grcyc/common.hpp"

namespace grcyc {

Tableau::Tableau(std::vector<std::vector<int>> rows, int n) : rows_(std::move(rows)), n_(n) {
  if (rows_.empty() || rows_.front().empty()) fail(ErrorCode::InvalidTableau, "tableau must be nonempty");
  const std::size_t width = rows_.front().size();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != width) fail(ErrorCode::InvalidTableau, "tableau must be rectangular");
    for (std::size_t c = 0; c < width; ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n_) fail(ErrorCode::InvalidTableau, "entry " + std::to_string(v) + " outside 1..n");
      if (c > 0 && rows_[r][c - 1] > v) fail(ErrorCode::InvalidTableau, "rows must weakly increase");
      if (r > 0 && rows_[r - 1][c] >= v) fail(ErrorCode::InvalidTableau, "columns must strictly increase");
    }
  }
}

Tableau promotion(const Tableau& t) {
  constexpr int kHole = 0;
  const int rows = t.rows();
  const int cols = t.cols();
  const int n = t.n();
  auto g = t.entries();
  // the 1s occupy a prefix of the first row
  int ones = 0;
  for (int c = 0; c < cols; ++c) {
    if (g[0][static_cast<std::size_t>(c)] == 1) ++ones;
  }
  for (auto& row : g)
    for (int& v : row) v = (v == 1) ? kHole : v - 1;

  auto cell = [&](int r, int c) -> int& { return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  for (int start = ones - 1; start >= 0; --start) {
    int r = 0;
    int c = start;
    while (true) {
      const bool has_east = c + 1 < cols;
      const bool has_south = r + 1 < rows;
      if (!has_east && !has_south) break;
      bool go_south;
      if (!has_east) go_south = true;
      else if (!has_south) go_south = false;
      else go_south = cell(r + 1, c) <= cell(r, c + 1);
      if (go_south) {
        cell(r, c) = cell(r + 1, c);
        ++r;
      } else {
        cell(r, c) = cell(r, c + 1);
        ++c;
      }
      cell(r, c) = kHole;
    }
    cell(r, c) = n;
  }
  return Tableau(std::move(g), n);
}

int promotion_order(const Tableau& t) {
  Tableau cur = promotion(t);
  int order = 1;
  while (!(cur == t)) {
    cur = promotion(cur);
    ++order;
    if (order > t.n()) break;
  }
  if (order > t.n() || t.n() % order != 0) {
    throw std::logic_error("promotion order " + std::to_string(order) + " does not divide n");
  }
  return order;
}

std::vector<Tableau> all_rectangular_ssyt(int rows, int cols, int n) {
  std::vector<Tableau> out;
  if (rows < 1 || cols < 1) return out;
  std::vector<std::vector<int>> g(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rows * cols) {
      out.emplace_back(g, n);
      return;
    }
    const int r = pos / cols;
    const int c = pos % cols;
    int lo = 1;
    if (c > 0) lo = std::max(lo, g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    // leave room for the strictly increasing column below
    const int hi = n - (rows - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace grcyc
