#pragma once

#include <optional>
#include <vector>

#include "grcyc/plucker.hpp"

namespace grcyc {

/// A partition fitting in the k x (n-k) box, stored with exactly k parts.
class Partition {
public:
  /// Pads with zeros to k parts. Throws InvalidArgument unless the parts are
  /// weakly decreasing, nonnegative, at most k of them, and lambda_1 <= n-k.
  Partition(int k, int n, std::vector<int> parts);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// lambda_i, 1-based.
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  int size() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  int k_;
  int n_;
  std::vector<int> parts_;
};

/// Every partition in the k x (n-k) box, in lexicographic order of parts.
std::vector<Partition> all_partitions(int k, int n);

/// The 180-degree-rotated complement inside the box.
Partition partition_complement(const Partition& lambda);

/// e_j(zs); e_0 = 1 and e_j = 0 for j < 0 or j > |zs|.
Complex elementary_symmetric(int j, const std::vector<Complex>& zs);

/// A point of the Peterson variety: the identity, or u_{k,n}(z_1..z_k).
struct ToeplitzPoint {
  enum class Kind { Identity, Generic };
  Kind kind = Kind::Identity;
  int k = 0;
  int n = 0;
  std::vector<Complex> zs;
  Matrix matrix;
};

ToeplitzPoint identity_point(int k, int n);

/// Upper unitriangular banded Toeplitz matrix with (r,s) entry e_{s-r}(zs).
/// Throws InvalidRoots unless the zs are k distinct nonzero numbers whose
/// n-th powers agree to 1e-9 relative.
ToeplitzPoint toeplitz_u(int k, int n, const std::vector<Complex>& zs);

/// D_I = det of g restricted to rows I^c and columns k+1..n.
PluckerVector gamma_embed(const ToeplitzPoint& g);

/// 0 on the identity, (-1)^(k-1) z_1^n otherwise.
Complex q_value(const ToeplitzPoint& g);

}  // namespace grcyc
