#pragma once

#include <random>

#include "grcyc/linalg.hpp"
#include "grcyc/plucker.hpp"

namespace grcyc {

/// k x n matrix with independent standard complex Gaussian entries.
Matrix random_matrix(int k, int n, std::mt19937_64& rng);

/// Totally positive point: columns f_k(theta_j) at sorted angles drawn from
/// [0, 2pi), each scaled by a positive factor in [0.5, 2].
PluckerVector random_tp_point(int k, int n, std::mt19937_64& rng);

}  // namespace grcyc
