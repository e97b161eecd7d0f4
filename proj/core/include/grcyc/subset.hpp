#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grcyc {

/// A k-subset of {1..n}, strictly increasing and 1-based.
class Subset {
public:
  Subset() = default;
  /// Sorts nothing: throws InvalidArgument unless members are strictly
  /// increasing and inside {1..n}.
  Subset(int n, std::vector<int> members);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const noexcept { return members_; }
  int operator[](int pos) const { return members_[static_cast<std::size_t>(pos)]; }
  bool contains(int index) const;

  /// Complement in {1..n}.
  Subset complement() const;
  /// Every member shifted by `by` modulo n (result sorted).
  Subset rotated(int by) const;
  /// i -> n+1-i.
  Subset reflected() const;
  int sum() const;

  /// "1,3,4".
  std::string to_string() const;
  static Subset parse(int n, std::string_view text);

  /// Builds a subset from arbitrary indices taken modulo n (1-based, so 0 == n);
  /// throws InvalidArgument on repeats.
  static Subset from_indices_mod(int n, std::vector<int> indices);

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

private:
  int n_ = 0;
  std::vector<int> members_;
};

std::uint64_t binomial(int n, int k);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> all_subsets(int n, int k);

/// Position of `s` in the lexicographic order of all_subsets(s.n(), s.size()).
std::size_t subset_rank(const Subset& s);

/// Cyclic interval {start, start+1, ..., start+len-1} modulo n.
Subset cyclic_interval(int n, int start, int len);

}  // namespace grcyc
