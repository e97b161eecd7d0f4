#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/moment_curve.hpp"
#include "grcyc/positivity.hpp"
#include "grcyc/sampling.hpp"
#include "oracles.hpp"

using namespace grcyc;

namespace {

const double kRt2 = std::sqrt(2.0);

Matrix octagon() {
  Matrix a(2, 4);
  a << 1, 1 / kRt2, 0, -1 / kRt2, 0, 1 / kRt2, 1, 1 / kRt2;
  return a;
}

bool contains_root(const std::vector<Complex>& zs, Complex z) {
  for (auto w : zs)
    if (std::abs(w - z) < 1e-12) return true;
  return false;
}

}  // namespace

TEST(SigmaMatrix, MatchesRowShift) {
  std::mt19937_64 rng(1);
  for (Complex t : {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(-1.0, 1.0)}) {
    for (int k = 1; k <= 4; ++k) {
      const int n = k + 3;
      const Matrix a = random_matrix(k, n, rng);
      const Matrix direct = oracle::shift_rows(a, shift_constant(k, t));
      EXPECT_LT((a * sigma_t_matrix(k, n, t).transpose() - direct).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(SigmaMatrix, ShiftedOctagon) {
  Matrix expected(2, 4);
  expected << 1 / kRt2, 0, -1 / kRt2, -1, 1 / kRt2, 1, 1 / kRt2, 0;
  EXPECT_LT((octagon() * sigma_t_matrix(2, 4, 1.0).transpose() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SigmaMatrix, ZeroParameter) {
  try {
    sigma_t_matrix(2, 4, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroParameter);
  }
}

TEST(SigmaMatrix, NthPowerIsScalar) {
  for (Complex t : {Complex(1.0, 0.0), Complex(3.0, 0.0), Complex(0.5, -2.0)}) {
    for (int k = 1; k <= 4; ++k) {
      const int n = 6;
      const Matrix s = sigma_t_matrix(k, n, t);
      Matrix p = Matrix::Identity(n, n);
      for (int i = 0; i < n; ++i) p = p * s;
      EXPECT_LT((p - shift_constant(k, t) * Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(SigmaMatrix, PowerVectorIsEigenvector) {
  for (Complex t : {Complex(1.0, 0.0), Complex(-1.0, 1.0)}) {
    const int k = 3;
    const int n = 5;
    for (auto z : shift_roots(k, n, t)) {
      Vector v(n);
      for (int j = 0; j < n; ++j) v(j) = std::pow(z, j);
      // Row vector v maps to v * S^T.
      const Vector image = (v.transpose() * sigma_t_matrix(k, n, t).transpose()).transpose();
      EXPECT_LT((image - z * v).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(SigmaOnPlucker, AgreesWithMatrixAction) {
  std::mt19937_64 rng(2);
  for (Complex t : {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(-1.0, 1.0)}) {
    for (int k = 1; k <= 4; ++k) {
      for (int n = k; n <= 8; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
          const auto p = plucker_from_matrix(random_matrix(k, n, rng));
          const auto via_matrix = apply_row_span_map(sigma_t_matrix(k, n, t), p);
          ASSERT_LT(projective_distance(sigma_t_on_plucker(p, t), via_matrix), 1e-9);
        }
      }
    }
  }
}

TEST(SigmaOnPlucker, Examples) {
  const auto oct = plucker_from_matrix(octagon());
  EXPECT_TRUE(projective_equal(sigma_t_on_plucker(oct, 1.0), oct));

  std::mt19937_64 rng(3);
  auto p = plucker_from_matrix(random_matrix(2, 5, rng));
  auto q = p;
  for (int i = 0; i < 5; ++i) q = sigma_t_on_plucker(q, 3.0);
  EXPECT_TRUE(projective_equal(p, q));

  std::vector<Complex> coords(6, 0.0);
  coords[0] = 1.0;
  const auto shifted = sigma_t_on_plucker(PluckerVector(2, 4, coords), 1.0);
  const auto brute = apply_row_span_map(sigma_t_matrix(2, 4, 1.0), PluckerVector(2, 4, coords));
  EXPECT_TRUE(projective_equal(shifted, brute));
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    const bool is_14 = all_subsets(4, 2)[i].to_string() == "1,4";
    EXPECT_EQ(std::abs(shifted.at(i)) > 0.5, is_14);
  }
}

TEST(Roots, S0Selection) {
  const Complex z = std::polar(1.0, kPi / 4);
  auto d = roots_and_s0(2, 4, 1.0);
  ASSERT_EQ(d.roots.size(), 4u);
  ASSERT_TRUE(d.s0.has_value());
  EXPECT_TRUE(contains_root(d.s0->roots, z));
  EXPECT_TRUE(contains_root(d.s0->roots, std::conj(z)));

  d = roots_and_s0(1, 2, 1.0);
  ASSERT_EQ(d.roots.size(), 2u);
  EXPECT_EQ(d.s0->roots.size(), 1u);
  EXPECT_NEAR(std::abs(d.s0->roots[0] - 1.0), 0.0, 1e-15);

  d = roots_and_s0(3, 6, 1.0);
  EXPECT_TRUE(contains_root(d.s0->roots, 1.0));
  EXPECT_TRUE(contains_root(d.s0->roots, std::polar(1.0, kPi / 3)));
  EXPECT_TRUE(contains_root(d.s0->roots, std::polar(1.0, -kPi / 3)));

  EXPECT_FALSE(roots_and_s0(2, 4, Complex(-1.0, 1.0)).s0.has_value());
}

TEST(Roots, SortedByArgument) {
  const auto roots = shift_roots(3, 7, Complex(2.0, -1.0));
  for (std::size_t i = 1; i < roots.size(); ++i) EXPECT_LT(std::arg(roots[i - 1]), std::arg(roots[i]));
}

TEST(Roots, RootSetValidation) {
  EXPECT_THROW(make_root_set(2, 4, 1.0, {1.0, 2.0}), Error);
  const Complex z = std::polar(1.0, kPi / 4);
  EXPECT_THROW(make_root_set(2, 4, 1.0, {z, z}), Error);
}

TEST(VS, Examples) {
  const Complex z = std::polar(1.0, kPi / 4);
  EXPECT_TRUE(projective_equal(v_s(make_root_set(2, 4, 1.0, {z, std::conj(z)})), plucker_from_matrix(octagon())));
  const auto line = v_s(make_root_set(1, 5, 1.0, {1.0}));
  for (auto c : line.coords()) EXPECT_NEAR(std::abs(c - 1.0), 0.0, 1e-12);
}

TEST(VS, OctagonPowerMatrix) {
  // A' = rows (1, z, z^2, z^3) and (1, 1/z, ...) with z = e^{i pi/4}.
  const Complex z = std::polar(1.0, kPi / 4);
  Matrix ap(2, 4);
  for (int j = 0; j < 4; ++j) {
    ap(0, j) = std::pow(z, j);
    ap(1, j) = std::pow(std::conj(z), j);
  }
  const auto minors_a = oracle::minors(octagon());
  const auto minors_ap = oracle::minors(ap);
  for (std::size_t i = 0; i < minors_a.size(); ++i) {
    EXPECT_LT(std::abs(minors_ap[i] - Complex(0.0, -2.0) * minors_a[i]) , 1e-12);
  }
}

TEST(FixedPoints, CountsAndFixedness) {
  for (Complex t : {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(-1.0, 1.0)}) {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= n; ++k) {
        const auto fps = enumerate_fixed_points(k, n, t);
        ASSERT_EQ(fps.size(), binomial(n, k));
        for (const auto& fp : fps) {
          EXPECT_LT(fixedness_residual(fp.point, t), 1e-9);
          EXPECT_LT(projective_distance(apply_row_span_map(sigma_t_matrix(k, n, t), fp.point), fp.point), 1e-9);
        }
      }
    }
  }
}

TEST(FixedPoints, DistinctForDistinctRootSets) {
  const auto fps = enumerate_fixed_points(2, 4, 1.0);
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j) EXPECT_FALSE(projective_equal(fps[i].point, fps[j].point));
}

TEST(FixedPoints, SmallestCase) {
  const auto fps = enumerate_fixed_points(1, 2, 1.0);
  ASSERT_EQ(fps.size(), 2u);
  Matrix plus(1, 2);
  plus << 1, 1;
  Matrix minus(1, 2);
  minus << 1, -1;
  const bool a = projective_equal(fps[0].point, plucker_from_matrix(plus)) &&
                 projective_equal(fps[1].point, plucker_from_matrix(minus));
  const bool b = projective_equal(fps[1].point, plucker_from_matrix(plus)) &&
                 projective_equal(fps[0].point, plucker_from_matrix(minus));
  EXPECT_TRUE(a || b);
}

TEST(FixedPoints, UnitRootCharacterization) {
  // At t = 1 every fixed point satisfies D_{I+1} = zeta D_I for one n-th root of unity zeta.
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& fp : enumerate_fixed_points(k, n, 1.0)) {
        const auto& p = fp.point;
        const Subset piv = p.pivot_subset();
        const Complex zeta = p[piv.rotated(1)] / p[piv];
        EXPECT_NEAR(std::abs(std::pow(zeta, n) - 1.0), 0.0, 1e-9);
        for (const auto& s : all_subsets(n, k)) EXPECT_LT(std::abs(p[s.rotated(1)] - zeta * p[s]), 1e-9);
      }
    }
  }
}

TEST(TnnFixedPoint, FormulaAndRatio) {
  const auto p = tnn_fixed_point(2, 4, 16.0);
  EXPECT_NEAR(std::abs(p[Subset(4, {1, 3})] / p[Subset(4, {1, 2})]), 2 * std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(projective_equal(tnn_fixed_point(2, 4, 1.0), plucker_from_matrix(octagon())));
  EXPECT_THROW(tnn_fixed_point(2, 4, -1.0), Error);
  EXPECT_THROW(tnn_fixed_point(2, 4, 0.0), Error);
}

TEST(TnnFixedPoint, MatchesEnumeratedTnnPoint) {
  for (double t : {1.0, 2.0, 0.25}) {
    for (int n = 2; n <= 7; ++n) {
      for (int k = 1; k < n; ++k) {
        int hits = 0;
        for (const auto& fp : enumerate_fixed_points(k, n, t)) {
          if (is_tnn(fp.point)) {
            ++hits;
            EXPECT_LT(projective_distance(fp.point, tnn_fixed_point(k, n, t)), 1e-9);
          }
        }
        EXPECT_EQ(hits, 1);
      }
    }
  }
}

TEST(TnnFixedPoint, SmallTConcentrates) {
  const auto p = tnn_fixed_point(3, 6, 1e-30);
  EXPECT_EQ(p.pivot(), 0u);
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_LT(std::abs(p.at(i)), 1e-2);
}

TEST(FixedPoints, NoTnnForNonPositiveT) {
  for (Complex t : {Complex(-1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 1.0)}) {
    for (int n = 2; n <= 7; ++n) {
      for (int k = 1; k < n; ++k) {
        for (const auto& fp : enumerate_fixed_points(k, n, t)) EXPECT_FALSE(is_tnn(fp.point));
      }
    }
  }
}

TEST(PowerVectorSubspace, Cases) {
  const int n = 6;
  const auto v = remark_subspace(std::polar(1.0, 2 * kPi / n), 3, n);
  EXPECT_TRUE(projective_equal(v, tnn_fixed_point(3, n, 1.0)));

  const auto w = remark_subspace(1.0, 2, 4);
  Matrix m(2, 4);
  m << 1, 1, 1, 1, 1, 2, 3, 4;
  EXPECT_TRUE(projective_equal(w, plucker_from_matrix(m)));
  EXPECT_TRUE(is_tnn(w));

  const Complex z = std::polar(1.0, kPi / 3);
  const auto u = remark_subspace(z, 3, 7);
  Vector pv(7);
  for (int j = 0; j < 7; ++j) pv(j) = std::pow(z, j);
  EXPECT_TRUE(contains_vector(u, pv));
  EXPECT_TRUE(is_tnn(u));

  try {
    remark_subspace(std::polar(1.0, kPi / 2), 2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArgumentOutOfRange);
  }
}

TEST(PowerVectorSubspace, RandomAdmissible) {
  std::mt19937_64 rng(4);
  for (auto [k, n] : {std::pair{2, 4}, {3, 6}, {3, 7}}) {
    const double bound = (k - 1) * kPi / (n - 1);
    std::uniform_real_distribution<double> arg(-bound, bound);
    std::uniform_real_distribution<double> logmod(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const Complex z = std::polar(std::exp(logmod(rng)), arg(rng));
      const auto v = remark_subspace(z, k, n);
      EXPECT_TRUE(is_tnn(v));
      Vector pv(n);
      for (int j = 0; j < n; ++j) pv(j) = std::pow(z, j);
      EXPECT_TRUE(contains_vector(v, pv));
    }
  }
}

TEST(Flow, IdentityAndFixedPoint) {
  std::mt19937_64 rng(5);
  const auto p = plucker_from_matrix(random_matrix(2, 5, rng));
  EXPECT_LT(projective_distance(flow(p, 0.0), p), 1e-12);
  const auto v0 = tnn_fixed_point(3, 6, 1.0);
  for (double s : {0.5, 3.0, 40.0}) EXPECT_LT(projective_distance(flow(v0, s), v0), 1e-10);
}

TEST(Flow, MatchesMatrixExponential) {
  // exp(s S) by a plain Taylor series on a small s.
  std::mt19937_64 rng(6);
  const int k = 2;
  const int n = 5;
  const Matrix a = random_matrix(k, n, rng);
  const double s = 0.7;
  const Matrix sig = sigma_t_matrix(k, n, 1.0);
  Matrix e = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int i = 1; i < 40; ++i) {
    term = term * sig * (s / i);
    e += term;
  }
  EXPECT_LT(projective_distance(flow(plucker_from_matrix(a), s), plucker_from_matrix(a * e.transpose())), 1e-10);
}

TEST(Flow, Semigroup) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = plucker_from_matrix(random_matrix(3, 7, rng));
    EXPECT_LT(projective_distance(flow(flow(p, 1.3), 2.1), flow(p, 3.4)), 1e-8);
  }
}

TEST(Flow, ConvergesToV0) {
  std::mt19937_64 rng(8);
  const auto v0 = tnn_fixed_point(2, 5, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_LT(projective_distance(flow(random_tp_point(2, 5, rng), 40.0), v0), 1e-6);
  }
}
