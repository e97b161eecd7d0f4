#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "grcyc/plucker.hpp"

namespace grcyc {

/// Sparse integer exponent vector over the lexicographic k-subsets.
using ExponentVector = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Lattice basis of { e in Z^C(n,k) : sum_I e_I [i in I] = 0 for all i and
/// sum_I e_I = 0 }. The Laurent monomials prod_I D_I^e_I with e in this
/// lattice are exactly the functions invariant under column rescaling and
/// global scalars. Computed once per (k,n) by unimodular integer column
/// elimination; thread-safe.
std::shared_ptr<const std::vector<ExponentVector>> torus_invariant_basis(int k, int n);

/// True iff p and q agree on every basis monomial, i.e. q is obtained
/// from p by rescaling columns. Throws ZeroCoordinate if any coordinate of
/// either point has modulus <= zero_eps; a vanishing coordinate is not an
/// answer of "inequivalent".
bool torus_equivalent(const PluckerVector& p, const PluckerVector& q, const Tolerance& tol = {});

/// Largest |monomial(p)/monomial(q) - 1| over the basis, each term divided by
/// (1 + sum |e_I|). Same preconditions as torus_equivalent.
double torus_residual(const PluckerVector& p, const PluckerVector& q, const Tolerance& tol = {});

}  // namespace grcyc
