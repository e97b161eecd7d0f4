#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/peterson.hpp"
#include "grcyc/schur.hpp"
#include "oracles.hpp"

using namespace grcyc;

namespace {

const Complex kZeta = std::polar(1.0, kPi / 4);

// Random k-subset of the roots of z^n = (-1)^{k-1} t.
std::vector<Complex> random_roots(int k, int n, Complex t, std::mt19937_64& rng) {
  auto roots = shift_roots(k, n, t);
  std::shuffle(roots.begin(), roots.end(), rng);
  roots.resize(static_cast<std::size_t>(k));
  return roots;
}

}  // namespace

TEST(Partition, BoxAndComplement) {
  EXPECT_EQ(all_partitions(2, 4).size(), 6u);
  EXPECT_EQ(all_partitions(3, 6).size(), 20u);
  EXPECT_EQ(partition_complement(Partition(2, 4, {})).parts(), (std::vector<int>{2, 2}));
  EXPECT_EQ(partition_complement(Partition(2, 4, {1})).parts(), (std::vector<int>{2, 1}));
  for (const auto& lam : all_partitions(3, 6)) EXPECT_EQ(partition_complement(partition_complement(lam)), lam);
  EXPECT_THROW(Partition(2, 4, {3}), Error);
  EXPECT_THROW(Partition(2, 4, {1, 2}), Error);
}

TEST(ElementarySymmetric, Examples) {
  const Complex a(1.5, -0.5);
  const Complex b(0.2, 2.0);
  EXPECT_EQ(elementary_symmetric(0, {a, b}), Complex(1.0, 0.0));
  EXPECT_LT(std::abs(elementary_symmetric(1, {a, b}) - (a + b)), 1e-15);
  EXPECT_NEAR(std::abs(elementary_symmetric(2, {kZeta, std::conj(kZeta)}) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(elementary_symmetric(3, {a, b}), Complex(0.0, 0.0));
  EXPECT_EQ(elementary_symmetric(-1, {a, b}), Complex(0.0, 0.0));
}

TEST(Toeplitz, Examples) {
  const Complex z(0.3, 0.4);
  const auto u = toeplitz_u(1, 3, {z});
  // Band of width k: only e_0 and e_1 appear.
  EXPECT_EQ(u.matrix(0, 2), Complex(0.0, 0.0));
  EXPECT_LT(std::abs(u.matrix(0, 1) - z), 1e-15);
  EXPECT_LT(std::abs(u.matrix(1, 2) - z), 1e-15);
  EXPECT_EQ(u.matrix(2, 0), Complex(0.0, 0.0));

  const auto u24 = toeplitz_u(2, 4, {kZeta, std::conj(kZeta)});
  EXPECT_NEAR(std::abs(u24.matrix(0, 1) - std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u24.matrix(0, 2) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u24.matrix(0, 3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(determinant(u24.matrix) - 1.0), 0.0, 1e-14);

  EXPECT_THROW(toeplitz_u(2, 4, {1.0, 2.0}), Error);
}

TEST(Gamma, IdentityHasSingleSupport) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto g = gamma_embed(identity_point(k, n));
      EXPECT_EQ(g.pivot(), 0u);
      for (std::size_t i = 1; i < g.size(); ++i) EXPECT_EQ(g.at(i), Complex(0.0, 0.0));
    }
  }
}

TEST(Gamma, MatchesVs) {
  const auto g = gamma_embed(toeplitz_u(2, 4, {kZeta, std::conj(kZeta)}));
  EXPECT_TRUE(projective_equal(g, tnn_fixed_point(2, 4, 1.0)));

  std::mt19937_64 rng(1);
  const Complex t(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto zs = random_roots(2, 5, t, rng);
    EXPECT_LT(projective_distance(gamma_embed(toeplitz_u(2, 5, zs)), v_s(make_root_set(2, 5, t, zs))), 1e-9);
  }
}

TEST(Gamma, MinorsMatchLeibniz) {
  std::mt19937_64 rng(2);
  const auto zs = random_roots(2, 5, 3.0, rng);
  const auto u = toeplitz_u(2, 5, zs);
  std::vector<Complex> brute;
  for (const auto& s : all_subsets(5, 2)) {
    const Subset rows = s.complement();
    Matrix m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = u.matrix(rows[r] - 1, 2 + c);
    brute.push_back(oracle::leibniz_det(m));
  }
  EXPECT_LT(oracle::scaled_mismatch(gamma_embed(u).coords(), brute), 1e-12);
}

TEST(QValue, Examples) {
  EXPECT_EQ(q_value(identity_point(2, 4)), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(q_value(toeplitz_u(2, 4, {kZeta, std::conj(kZeta)})) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(q_value(toeplitz_u(1, 3, {2.0})) - 8.0), 0.0, 1e-14);
}

TEST(QValue, RecoversT) {
  std::mt19937_64 rng(3);
  for (Complex t : {Complex(2.0, 0.0), Complex(-1.0, 1.0), Complex(0.0, -3.0)}) {
    for (int k = 1; k <= 4; ++k) {
      const auto zs = random_roots(k, 7, t, rng);
      EXPECT_LT(std::abs(q_value(toeplitz_u(k, 7, zs)) - t), 1e-10 * std::abs(t));
    }
  }
}

TEST(Schur, Examples) {
  const std::vector<Complex> s0{kZeta, std::conj(kZeta)};
  EXPECT_NEAR(std::abs(schur_eval(Partition(2, 4, {1}), s0) - std::sqrt(2.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(schur_eval(Partition(2, 4, {}), s0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(schur_eval(Partition(2, 4, {2, 2}), s0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(schur_sine_formula(Partition(2, 4, {})), 1.0, 1e-15);
  EXPECT_NEAR(schur_sine_formula(Partition(2, 4, {1})), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(schur_sine_formula(Partition(2, 4, {2, 2})), 1.0, 1e-14);
  try {
    schur_eval(Partition(2, 4, {1}), {Complex(1.0, 0.0), Complex(1.0, 1e-8)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoincidentPoints);
  }
}

TEST(Schur, BialternantMatchesMonomialExpansion) {
  // s_{(2,1)}(x, y) = x^2 y + x y^2, s_{(1,1)} = xy, s_{(2)} = x^2 + xy + y^2.
  const Complex x(0.3, 1.1);
  const Complex y(-0.7, 0.2);
  EXPECT_LT(std::abs(schur_eval(Partition(2, 5, {2, 1}), {x, y}) - (x * x * y + x * y * y)), 1e-13);
  EXPECT_LT(std::abs(schur_eval(Partition(2, 5, {1, 1}), {x, y}) - x * y), 1e-13);
  EXPECT_LT(std::abs(schur_eval(Partition(2, 5, {2}), {x, y}) - (x * x + x * y + y * y)), 1e-13);
}

TEST(Schur, PluckerPathAgrees) {
  std::mt19937_64 rng(4);
  const auto s0 = *roots_and_s0(2, 4, 1.0).s0;
  EXPECT_NEAR(std::abs(schur_via_plucker(Partition(2, 4, {1}), s0) - std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(schur_via_plucker(Partition(2, 4, {}), s0) - 1.0), 0.0, 1e-12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto zs = random_roots(2, 5, 1.0, rng);
    const auto rs = make_root_set(2, 5, 1.0, zs);
    const Partition lam(2, 5, {2, 1});
    EXPECT_LT(std::abs(schur_via_plucker(lam, rs) - schur_eval(lam, zs)), 1e-10);
  }
}

TEST(Schur, SineFormulaAtS0) {
  for (double t : {1.0, 2.0}) {
    for (int n = 2; n <= 8; ++n) {
      for (int k = 1; k < n; ++k) {
        const auto s0 = *roots_and_s0(k, n, t).s0;
        for (const auto& lam : all_partitions(k, n)) {
          const Complex v = schur_eval(lam, s0.roots);
          EXPECT_LT(std::abs(v - schur_sine_formula(lam, t)), 1e-8 * std::max(1.0, std::abs(v)));
        }
      }
    }
  }
}

TEST(Schur, ModulusInequality) {
  const std::vector<Complex> pair{std::polar(1.0, 3 * kPi / 4), std::polar(1.0, -3 * kPi / 4)};
  const auto rep = modulus_inequality_check(Partition(2, 4, {1}), pair);
  EXPECT_TRUE(rep.holds);
  EXPECT_NEAR(rep.modulus, rep.bound, 1e-12);

  const auto eq = modulus_inequality_check(Partition(2, 4, {1}), roots_and_s0(2, 4, 1.0).s0->roots);
  EXPECT_NEAR(eq.modulus, eq.bound, 1e-12);

  for (const auto& fp : enumerate_fixed_points(2, 5, 1.0)) {
    for (const auto& lam : all_partitions(2, 5)) EXPECT_TRUE(modulus_inequality_check(lam, fp.roots.roots).holds);
  }
  EXPECT_THROW(modulus_inequality_check(Partition(2, 4, {1}), {Complex(2.0, 0.0), Complex(-2.0, 0.0)}), Error);
}
