#include <gtest/gtest.h>

#include "hurwitz/bezout.hpp"
#include "hurwitz/oracle.hpp"
#include "test_support.hpp"

namespace hurwitz {
namespace {

using testing::scalar;

TEST(Linearize, Layout) {
  MatrixPolynomial f({CMatrix::Identity(2, 2), CMatrix::Constant(2, 2, 1.0), CMatrix::Constant(2, 2, 2.0)});
  const CMatrix c = linearize(f);
  ASSERT_EQ(c.rows(), 4);
  EXPECT_EQ(c(0, 0), Complex(-1.0));
  EXPECT_EQ(c(0, 2), Complex(-2.0));
  EXPECT_EQ(c(2, 0), Complex(1.0));
  EXPECT_EQ(c(3, 1), Complex(1.0));
  EXPECT_EQ(c(2, 2), Complex(0.0));
}

TEST(Linearize, RejectsNonMonic) {
  try {
    linearize(scalar({2.0, 1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMonic);
  }
}

TEST(Zeros, ScalarSquare) {
  for (const auto& z : zeros(scalar({1.0, 2.0, 1.0}))) EXPECT_LT(std::abs(z + 1.0), 1e-7);
}

TEST(Zeros, SingularMarkovExample) {
  const std::vector<Complex> want{{-1.0, 0.0}, {-1.876, 0.0}, {-0.062, 0.513}, {-0.062, -0.513}};
  const auto got = zeros(testing::load("singular_markov.json"));
  ASSERT_EQ(got.size(), 4u);
  for (const auto& w : want) {
    EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](Complex z) { return std::abs(z - w) < 1e-3; })) << w;
  }
}

TEST(GammaPrimeOracle, Examples) {
  EXPECT_EQ(gamma_prime_oracle(testing::load("stable_degree3_3x3.json")), (GammaPrimeTriple{0, 9, 0}));
  EXPECT_EQ(gamma_prime_oracle(testing::load("nonhermitian_cf.json")), (GammaPrimeTriple{2, 2, 0}));
  EXPECT_EQ(gamma_prime_oracle(scalar({1.0, 1.0, 1.0, 1.0})), (GammaPrimeTriple{0, 1, 2}));
}

TEST(IsHurwitzOracle, Examples) {
  EXPECT_TRUE(is_hurwitz_oracle(testing::load("symmetric_quadratic.json")).hurwitz);
  EXPECT_FALSE(is_hurwitz_oracle(testing::load("left_markov_degree4.json")).hurwitz);
  EXPECT_TRUE(is_hurwitz_oracle(scalar({1.0, 1.0})).hurwitz);
  const auto marginal = is_hurwitz_oracle(scalar({1.0, 0.0, 1.0}));
  EXPECT_FALSE(marginal.hurwitz);
  EXPECT_TRUE(marginal.marginal);
}

TEST(GammaRealAxis, Rotation) {
  const auto f = testing::load("unstable_degree3_2x2.json");
  const auto g = gamma_real_axis(substitute_monomial(f, Complex(0.0, 1.0), 1));
  const auto h = gamma_prime_oracle(f);
  EXPECT_EQ(g.plus, h.minus);
  EXPECT_EQ(g.minus, h.plus);
  EXPECT_EQ(g.zero, h.zero);
}

TEST(Generators, StableOutputsAreStable) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int p = 1 + static_cast<int>(seed % 4);
    const int n = 1 + static_cast<int>(seed % 8);
    const auto f = generate_stable(p, n, seed);
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(gamma_prime_oracle(f), (GammaPrimeTriple{0, n * p, 0}));
    EXPECT_LE(is_hurwitz_oracle(f).max_real_part, -0.5 + 1e-6);
  }
}

TEST(Generators, FromCfOutputsAreStableAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int p = 1 + static_cast<int>(seed % 3);
    const int n = 1 + static_cast<int>(seed % 6);
    const auto f = generate_from_cf(p, n, seed);
    EXPECT_TRUE(is_hurwitz_oracle(f).hurwitz) << seed;
    const auto g = generate_from_cf(p, n, seed);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(f.coeff(k), g.coeff(k));
  }
}

TEST(Generators, DegreeOneIsMinusSpectrum) {
  const auto f = generate_stable(3, 1, 99);
  const Eigen::ComplexEigenSolver<CMatrix> solver(f.coeff(1), false);
  std::vector<Complex> minus;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) minus.push_back(-solver.eigenvalues()(i));
  EXPECT_TRUE(same_zero_multiset(zeros(f), minus, 1e-10));
}

TEST(Generators, UnstablePerturbationHasRightHalfPlaneZero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = generate_unstable_perturbation(generate_stable(2, 3, seed), seed);
    EXPECT_GT(gamma_prime_oracle(f).plus, 0);
    EXPECT_GE(axis_clearance(f), 1e-6);
  }
}

TEST(Generators, RejectOutOfRange) {
  try {
    generate_stable(5, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Oracle, LinearizationAgreesWithDeterminant) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto f = generate_from_cf(1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 5), seed,
                                    ParameterSigns::kIndefinite);
    EXPECT_TRUE(same_zero_multiset(det_poly(f).to_scalar().roots(), zeros(f), 1e-6)) << seed;
  }
}

TEST(Oracle, SimilarityInvariance) {
  testing::Points rng(61);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int p = 2 + static_cast<int>(seed % 2);
    const auto f = seed % 2 == 0 ? generate_stable(p, 3, seed)
                                 : generate_unstable_perturbation(generate_stable(p, 3, seed), seed);
    const CMatrix t = CMatrix::Identity(p, p) + 0.3 * rng.matrix(p, p);
    const auto g = t.inverse() * f * t;
    EXPECT_EQ(gamma_prime_oracle(g), gamma_prime_oracle(f));
    EXPECT_TRUE(same_zero_multiset(zeros(g), zeros(f), 1e-7));
  }
}

}  // namespace
}  // namespace hurwitz
