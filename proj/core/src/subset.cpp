#include "grcyc/subset.hpp"

#include <algorithm>
#include <charconv>

#include "grcyc/common.hpp"

namespace grcyc {

Subset::Subset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n_ < 0) fail(ErrorCode::InvalidArgument, "subset ground set size must be nonnegative");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n_) {
      fail(ErrorCode::InvalidArgument, "subset member out of range 1.." + std::to_string(n_));
    }
    if (i > 0 && members_[i] <= members_[i - 1]) {
      fail(ErrorCode::InvalidArgument, "subset members must be strictly increasing");
    }
  }
}

bool Subset::contains(int index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

Subset Subset::complement() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_ - size()));
  for (int i = 1; i <= n_; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return Subset(n_, std::move(out));
}

Subset Subset::rotated(int by) const {
  return from_indices_mod(n_, [&] {
    std::vector<int> v = members_;
    for (int& m : v) m += by;
    return v;
  }());
}

Subset Subset::reflected() const {
  std::vector<int> v;
  v.reserve(members_.size());
  for (auto it = members_.rbegin(); it != members_.rend(); ++it) v.push_back(n_ + 1 - *it);
  return Subset(n_, std::move(v));
}

int Subset::sum() const {
  int s = 0;
  for (int m : members_) s += m;
  return s;
}

std::string Subset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members_[i]);
  }
  return out;
}

Subset Subset::parse(int n, std::string_view text) {
  std::vector<int> members;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      fail(ErrorCode::InvalidArgument, "cannot parse subset '" + std::string(text) + "'");
    }
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Subset(n, std::move(members));
}

Subset Subset::from_indices_mod(int n, std::vector<int> indices) {
  for (int& i : indices) i = ((i - 1) % n + n) % n + 1;
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    fail(ErrorCode::InvalidArgument, "repeated index modulo n");
  }
  return Subset(n, std::move(indices));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t subset_rank(const Subset& s) {
  // Count subsets lexicographically before s, position by position.
  const int n = s.n();
  const int k = s.size();
  std::uint64_t rank = 0;
  int prev = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < s[pos]; ++v) rank += binomial(n - v, k - pos - 1);
    prev = s[pos];
  }
  return static_cast<std::size_t>(rank);
}

Subset cyclic_interval(int n, int start, int len) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) idx.push_back(start + j);
  return Subset::from_indices_mod(n, std::move(idx));
}

}  // namespace grcyc
