#include <gtest/gtest.h>

#include "hurwitz/hermitian.hpp"
#include "hurwitz/markov.hpp"
#include "test_support.hpp"

namespace hurwitz {
namespace {

using testing::kI;
using testing::mat;
using testing::rel_diff;

TEST(IsHermitian, Examples) {
  EXPECT_TRUE(is_hermitian(mat({{2.0, -1.0 - kI}, {-1.0 + kI, 2.0}})));
  EXPECT_FALSE(is_hermitian(mat({{34.5, 9.5}, {42.0, 8.5}})));
  EXPECT_TRUE(is_hermitian(mat({{1.0, -3.0, 2.0}, {-3.0, 0.0, 7.0}, {2.0, 7.0, -4.0}})));
}

TEST(IsHermitian, RejectsNonSquare) {
  try {
    is_hermitian(CMatrix::Zero(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSquare);
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(CMatrix::Identity(3, 3)), (InertiaTriple{3, 0, 0}));
  EXPECT_EQ(inertia(mat({{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -2.0}})), (InertiaTriple{1, 1, 1}));
  MarkovSequence s;
  s.p = 1;
  s.blocks = {CMatrix::Constant(1, 1, 1.0), CMatrix::Zero(1, 1), CMatrix::Zero(1, 1)};
  EXPECT_EQ(inertia(block_hankel(s, 0, 1).matrix), (InertiaTriple{1, 0, 1}));
}

TEST(Inertia, SylvesterLaw) {
  testing::Points rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 2 + trial % 4;
    const Eigen::HouseholderQR<CMatrix> qr(rng.matrix(p, p));
    const CMatrix u = qr.householderQ() * CMatrix::Identity(p, p);
    CMatrix d = CMatrix::Zero(p, p);
    InertiaTriple want;
    for (int i = 0; i < p; ++i) {
      const int sign = static_cast<int>(rng.engine()() % 3) - 1;
      d(i, i) = sign * rng.uniform(0.5, 3.0);
      (sign > 0 ? want.pi : sign < 0 ? want.nu : want.delta) += 1;
    }
    const CMatrix m = u.adjoint() * d * u;
    const auto got = inertia(0.5 * (m + m.adjoint()));
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.dimension(), p);
  }
}

TEST(IsPositiveDefinite, Examples) {
  EXPECT_TRUE(is_positive_definite(mat({{3.0, 4.0}, {4.0, 8.0}})));
  EXPECT_FALSE(is_positive_definite(mat({{-27.0 / 8, 323.0 / 8 + 25.0 * kI}, {323.0 / 8 - 25.0 * kI, -227.0 / 8}})));
  EXPECT_FALSE(is_positive_definite(CMatrix::Zero(2, 2)));
  EXPECT_TRUE(is_positive_definite(CMatrix(0, 0)));
}

TEST(IsPositiveDefinite, AgreesWithLeadingQuasideterminants) {
  testing::Points rng(22);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 1 + trial % 3;
    const int l = 1 + trial % 4;
    const CMatrix a = rng.matrix(l * p, l * p);
    CMatrix m = a * a.adjoint();
    m.diagonal().array() -= rng.uniform(-0.3, 0.6);
    m = 0.5 * (m + m.adjoint());
    bool chain = true;
    for (int k = 1; k <= l && chain; ++k) {
      const CMatrix lead = m.topLeftCorner(k * p, k * p);
      try {
        chain = is_positive_definite(quasideterminant(lead, p, k));
      } catch (const Error&) {
        chain = false;
      }
    }
    const bool pd = is_positive_definite(m);
    positives += pd;
    EXPECT_EQ(pd, chain) << "trial " << trial;
  }
  EXPECT_GT(positives, 5);
  EXPECT_LT(positives, 55);
}

TEST(Quasideterminant, OrderOneIsIdentity) {
  const CMatrix m = mat({{1.0, 2.0}, {3.0, 4.0}});
  EXPECT_EQ(quasideterminant(m, 2, 1), m);
}

TEST(Quasideterminant, SchurComplementsOfWorkedExamples) {
  const CMatrix s0 = mat({{3.0, 4.0}, {4.0, 8.0}});
  const CMatrix s1 = mat({{2.0, -3.0}, {-3.0, 7.0}});
  const CMatrix s2 = mat({{10.0, 15.0 + 25.0 * kI}, {15.0 - 25.0 * kI, 20.0}});
  CMatrix h(4, 4);
  h << s0, s1, s1, s2;
  const CMatrix want = mat({{-27.0 / 8, 323.0 / 8 + 25.0 * kI}, {323.0 / 8 - 25.0 * kI, -227.0 / 8}});
  EXPECT_LT(rel_diff(quasideterminant(h, 2, 2), want), 1e-14);

  const CMatrix t0 = mat({{2.0, -1.0 - kI, kI}, {-1.0 + kI, 2.0, -1.0}, {-kI, -1.0, 2.0}});
  const CMatrix t1 = mat({{1.0, kI, -kI}, {-kI, 2.0, 0.0}, {kI, 0.0, 3.0}});
  const CMatrix t2 =
      mat({{15.0, 1.0 + 5.0 * kI, 3.0 - 5.0 * kI}, {1.0 - 5.0 * kI, 10.0, -6.0 * kI}, {3.0 + 5.0 * kI, 6.0 * kI, 50.0}});
  CMatrix g(6, 6);
  g << t0, t1, t1, t2;
  const CMatrix pd = mat({{10.0, -1.5 - 0.5 * kI, -0.5 + 0.5 * kI},
                          {-1.5 + 0.5 * kI, 0.5, 1.0 + 0.5 * kI},
                          {-0.5 - 0.5 * kI, 1.0 - 0.5 * kI, 36.5}});
  const CMatrix q = quasideterminant(g, 3, 2);
  EXPECT_LT(rel_diff(q, pd), 1e-13);
  EXPECT_TRUE(is_positive_definite(q));
}

TEST(Quasideterminant, DeterminantFactorisation) {
  testing::Points rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 1 + trial % 3;
    const int l = 2 + trial % 3;
    const CMatrix m = rng.matrix(l * p, l * p) + 2.0 * CMatrix::Identity(l * p, l * p);
    const Complex lhs = m.determinant();
    const Complex rhs = m.topLeftCorner((l - 1) * p, (l - 1) * p).determinant() * quasideterminant(m, p, l).determinant();
    EXPECT_LT(rel_diff(lhs, rhs), 1e-11);
  }
}

TEST(Quasideterminant, SingularLeadingBlockThrows) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 1) = 1.0;
  try {
    quasideterminant(m, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularLeadingBlock);
  }
}

}  // namespace
}  // namespace hurwitz
