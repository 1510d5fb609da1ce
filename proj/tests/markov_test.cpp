#include <gtest/gtest.h>

#include "hurwitz/hermitian.hpp"
#include "hurwitz/markov.hpp"
#include "hurwitz/oracle.hpp"
#include "test_support.hpp"

namespace hurwitz {
namespace {

using testing::kI;
using testing::mat;
using testing::rel_diff;
using testing::scalar;

// Expansion coefficients of num * den^{-1} (right) or den^{-1} * num (left)
// read off a contour integral, independent of the recurrences.
CMatrix laurent(const MatrixPolynomial& num, const MatrixPolynomial& den, Side side, int power) {
  const double radius = 2.0 * testing::zero_radius(den);
  return testing::contour_coefficient(
      [&](Complex z) -> CMatrix {
        const CMatrix d = den(z).inverse();
        return side == Side::kRight ? CMatrix(num(z) * d) : CMatrix(d * num(z));
      },
      power, radius);
}

CMatrix sign(int k, const CMatrix& m) { return k % 2 == 0 ? m : CMatrix(-m); }

void expect_blocks(const MarkovSequence& s, const std::vector<CMatrix>& want, double tol) {
  ASSERT_GE(s.count(), static_cast<int>(want.size()));
  for (std::size_t k = 0; k < want.size(); ++k) {
    EXPECT_LT(rel_diff(s.blocks[k], want[k]), tol) << "s_" << k << "\n" << s.blocks[k];
  }
}

TEST(MarkovEven, ScalarSquare) {
  const auto s = markov_right(scalar({1.0, 2.0, 1.0}), 3);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(s.blocks[static_cast<std::size_t>(k)](0, 0), 2.0);
}

TEST(MarkovEven, DegreeFourMinorsExample) {
  const auto s = markov_right(testing::load("minors_degree4.json"), 5);
  expect_blocks(s,
                {mat({{3.0, -2.5}, {-2.5, 57.0 / 4}}), mat({{8.0, -0.5}, {-0.5, 69.0 / 4}}),
                 mat({{26.0, 5.5}, {5.5, 101.0 / 4}}), mat({{92.0, 23.5}, {23.5, 189.0 / 4}}),
                 mat({{338.0, 77.5}, {77.5, 437.0 / 4}})},
                1e-13);
}

TEST(MarkovFirstType, ScalarCube) {
  const auto s = markov_right_first_type(scalar({1.0, 3.0, 3.0, 1.0}), 2);
  ASSERT_TRUE(s.s_minus1);
  EXPECT_NEAR(s.s_minus1->real()(0, 0), 1.0 / 3, 1e-15);
  EXPECT_NEAR(s.blocks[0].real()(0, 0), 8.0 / 9, 1e-15);
  EXPECT_NEAR(s.blocks[1].real()(0, 0), 8.0 / 27, 1e-15);
  EXPECT_EQ(s.at(-1), *s.s_minus1);
}

TEST(MarkovFirstType, CancellingQuotient) {
  const auto s = markov_right_first_type(scalar({1.0, 1.0, 1.0, 1.0}), 2);
  EXPECT_EQ((*s.s_minus1)(0, 0), 1.0);
  EXPECT_EQ(s.blocks[0](0, 0), 0.0);
  EXPECT_EQ(s.blocks[1](0, 0), 0.0);
}

TEST(MarkovFirstType, SingularLeadingEvenBlock) {
  MatrixPolynomial f({CMatrix::Identity(2, 2), mat({{1.0, 0.0}, {0.0, 0.0}}), CMatrix::Identity(2, 2),
                      CMatrix::Identity(2, 2)});
  try {
    markov_right_first_type(f, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularLeadingEvenBlock);
  }
}

TEST(MarkovSecondType, ScalarCube) {
  const auto s = markov_right_second_type(scalar({1.0, 3.0, 3.0, 1.0}), 4);
  const double want[] = {3.0, 8.0, 24.0, 72.0};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(s.blocks[static_cast<std::size_t>(k)].real()(0, 0), want[k], 1e-12);
}

TEST(MarkovSecondType, UnstableDegreeThreeExample) {
  const auto s = markov_right_second_type(testing::load("unstable_degree3_2x2.json"), 3);
  // dyadic entries, reproduced exactly
  EXPECT_EQ(s.blocks[0], mat({{3.0, 4.0}, {4.0, 8.0}}));
  EXPECT_EQ(s.blocks[1], mat({{2.0, -3.0}, {-3.0, 7.0}}));
  EXPECT_EQ(s.blocks[2], mat({{10.0, 15.0 + 25.0 * kI}, {15.0 - 25.0 * kI, 20.0}}));
}

TEST(MarkovSecondType, StableDegreeThreeExample) {
  const auto s = markov_right_second_type(testing::load("stable_degree3_3x3.json"), 3);
  expect_blocks(s,
                {mat({{2.0, -1.0 - kI, kI}, {-1.0 + kI, 2.0, -1.0}, {-kI, -1.0, 2.0}}),
                 mat({{1.0, kI, -kI}, {-kI, 2.0, 0.0}, {kI, 0.0, 3.0}}),
                 mat({{15.0, 1.0 + 5.0 * kI, 3.0 - 5.0 * kI},
                      {1.0 - 5.0 * kI, 10.0, -6.0 * kI},
                      {3.0 + 5.0 * kI, 6.0 * kI, 50.0}})},
                1e-12);
}

TEST(MarkovLeft, DegreeFourExample) {
  const auto s = markov_left(testing::load("left_markov_degree4.json"), 4, MarkovKind::kEven);
  expect_blocks(s,
                {mat({{2.0, 2.0 - kI}, {2.0 + kI, 3.0}}), mat({{-2.0, -1.0 - kI}, {-1.0 + kI, -3.0}}),
                 mat({{13.0, 2.0 + 13.0 * kI}, {2.0 - 13.0 * kI, 20.0}}), mat({{-210.0, -kI}, {kI, -377.0}})},
                1e-12);
}

TEST(MarkovLeft, DualityIsExact) {
  for (const char* name : {"left_markov_degree4.json", "minors_degree6.json", "stable_degree3_3x3.json"}) {
    const auto f = testing::load(name);
    const auto kind = canonical_kind(f.degree());
    const auto left = markov_left(f, 6, kind);
    const auto right = markov_sequence(adjoint_reversal(f), kind, Side::kRight, 6);
    for (int k = 0; k < 6; ++k) {
      EXPECT_EQ(left.blocks[static_cast<std::size_t>(k)], CMatrix(right.blocks[static_cast<std::size_t>(k)].adjoint()));
    }
  }
}

TEST(MarkovSeries, AllKindsMatchContourCoefficients) {
  testing::Points rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int p = 1 + trial % 3;
    const int n = 2 + trial % 4;
    const auto f = rng.polynomial(p, n, true);
    const auto parts = even_odd_split(f);
    for (const Side side : {Side::kRight, Side::kLeft}) {
      if (n % 2 == 0) {
        const auto s = markov_sequence(f, MarkovKind::kEven, side, 6);
        for (int k = 0; k < 6; ++k) {
          const CMatrix want = laurent(parts.odd, parts.even, side, k);
          EXPECT_LT(rel_diff(sign(k, s.blocks[static_cast<std::size_t>(k)]), want), 1e-9) << trial << " k=" << k;
        }
        continue;
      }
      const auto second = markov_sequence(f, MarkovKind::kOddSecond, side, 6);
      for (int k = 0; k < 6; ++k) {
        const CMatrix want = laurent(parts.even, parts.odd, side, k - 1);
        EXPECT_LT(rel_diff(sign(k, second.blocks[static_cast<std::size_t>(k)]), want), 1e-9) << trial << " k=" << k;
      }
      const auto first = markov_sequence(f, MarkovKind::kOddFirst, side, 6);
      EXPECT_LT(rel_diff(*first.s_minus1, laurent(parts.odd, parts.even, side, -1)), 1e-9);
      for (int k = 0; k < 6; ++k) {
        const CMatrix want = laurent(parts.odd, parts.even, side, k);
        EXPECT_LT(rel_diff(sign(k, first.blocks[static_cast<std::size_t>(k)]), want), 1e-9) << trial << " k=" << k;
      }
    }
  }
}

TEST(MarkovSeries, PartialSumTimesDenominatorApproachesNumerator) {
  const auto f = testing::load("minors_degree6.json");
  const auto parts = even_odd_split(f);
  const auto t = alternating(markov_right(f, 3).blocks);
  // three terms: the residual falls like |z|^-3
  auto residual = [&](double r) {
    const Complex z = std::polar(r, 0.7);
    CMatrix sum = CMatrix::Zero(2, 2);
    for (int k = 0; k < 3; ++k) sum += t[static_cast<std::size_t>(k)] * std::pow(z, -(k + 1));
    return rel_diff(CMatrix(sum * parts.even(z)), parts.odd(z));
  };
  const double near = residual(1e3);
  const double far = residual(1e4);
  EXPECT_LT(near, 1e-3);
  EXPECT_GT(near / far, 300.0);
}

TEST(MarkovSeries, SymmetricQuadraticHasNonHermitianSecondBlock) {
  const auto f = testing::load("symmetric_quadratic.json");
  const auto s = markov_right(f, 2);
  const auto parts = even_odd_split(f);
  EXPECT_LT(rel_diff(s.blocks[1], CMatrix(-laurent(parts.odd, parts.even, Side::kRight, 1))), 1e-10);
  EXPECT_LT(rel_diff(s.blocks[1], mat({{34.5, 9.5}, {42.0, 8.5}})), 1e-14);
  EXPECT_FALSE(is_hermitian(s.blocks[1]));
}

TEST(BlockHankel, ViewsAndPositivity) {
  const auto s = markov_right(testing::load("minors_degree4.json"), 6);
  const auto h = block_hankel(s, 1, 2);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      EXPECT_EQ(CMatrix(h.matrix.block(2 * a, 2 * b, 2, 2)), s.blocks[static_cast<std::size_t>(1 + a + b)]);
    }
  }
  EXPECT_TRUE(is_positive_definite(block_hankel(s, 0, 1).matrix));
  EXPECT_EQ(block_hankel(s, 0, -1).matrix.size(), 0);

  const auto left = markov_left(testing::load("left_markov_degree4.json"), 4, MarkovKind::kEven);
  EXPECT_TRUE(is_positive_definite(block_hankel(left, 0, 1).matrix));
  EXPECT_FALSE(is_positive_definite(block_hankel(left, 1, 1).matrix));
}

TEST(BlockHankel, InsufficientBlocks) {
  const auto s = markov_right(testing::load("minors_degree4.json"), 3);
  try {
    block_hankel(s, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientBlocks);
  }
}

TEST(BlockHankel, ShiftIdentityAndCongruence) {
  for (const char* name : {"minors_degree4.json", "minors_degree6.json"}) {
    const auto f = testing::load(name);
    const int m = f.degree() / 2;
    const CMatrix c = companion_of_reflected_even(f);
    const auto s = markov_right(f, 20);
    auto h = [&](int j) { return block_hankel(s, j, m - 1).matrix; };
    CMatrix ck = CMatrix::Identity(c.rows(), c.cols());
    for (int k = 0; k <= 3; ++k) {
      for (int j = 0; j <= 3; ++j) EXPECT_LT(rel_diff(h(j + k), CMatrix(h(j) * ck)), 1e-9) << name << j << k;
      for (int l = 0; l <= 1; ++l) {
        EXPECT_LT(rel_diff(h(2 * k + l), CMatrix(ck.adjoint() * h(l) * ck)), 1e-9) << name << l << k;
      }
      ck = ck * c;
    }
  }
}

TEST(HermitianTruncation, Examples) {
  EXPECT_TRUE(hermitian_truncation_check(markov_right(testing::load("minors_degree6.json"), 6)).hermitian);
  const auto bad = hermitian_truncation_check(markov_right(testing::load("symmetric_quadratic.json"), 2));
  EXPECT_FALSE(bad.hermitian);
  EXPECT_EQ(bad.first_offending_index, 1);
}

TEST(OddCoefficients, ScalarSquare) {
  MarkovSequence s;
  s.p = 1;
  s.blocks = {CMatrix::Constant(1, 1, 2.0)};
  const std::vector<CMatrix> even{CMatrix::Constant(1, 1, 1.0), CMatrix::Constant(1, 1, 1.0)};
  const auto odd = odd_coeffs_from_markov(s, even);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0](0, 0), 2.0);
}

TEST(OddCoefficients, RoundTrip) {
  for (const char* name : {"minors_degree4.json", "minors_degree6.json", "left_markov_degree4.json"}) {
    const auto f = testing::load(name);
    const int m = f.degree() / 2;
    const auto s = markov_right(f, m);
    std::vector<CMatrix> even;
    for (int k = 0; k <= 2 * m; k += 2) even.push_back(f.coeff(k));
    const auto odd = odd_coeffs_from_markov(s, even);
    ASSERT_EQ(static_cast<int>(odd.size()), m);
    for (int r = 0; r < m; ++r) {
      EXPECT_LT(rel_diff(odd[static_cast<std::size_t>(r)], f.coeff(2 * m - 1 - 2 * r)), 1e-9) << name;
    }
  }
}

TEST(OddCoefficients, ZeroSequence) {
  MarkovSequence s;
  s.p = 2;
  s.blocks = {CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)};
  const std::vector<CMatrix> even{CMatrix::Identity(2, 2), CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)};
  for (const auto& a : odd_coeffs_from_markov(s, even)) EXPECT_EQ(a.norm(), 0.0);
}

}  // namespace
}  // namespace hurwitz
