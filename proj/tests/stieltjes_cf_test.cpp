#include <gtest/gtest.h>

#include "hurwitz/oracle.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/stieltjes_cf.hpp"
#include "test_support.hpp"

namespace hurwitz {
namespace {

using testing::mat;
using testing::rel_diff;
using testing::scalar;

// F_o F_e^{-1} evaluated directly from the polynomial, at large |z|.
double fraction_mismatch(const MatrixPolynomial& f, const EvenOddPair& pair, std::uint64_t seed) {
  const auto parts = even_odd_split(f);
  testing::Points rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex z = rng.in_annulus(10.0, 20.0);
    const CMatrix a = parts.odd(z) * parts.even(z).inverse();
    const CMatrix b = pair.odd(z) * pair.even(z).inverse();
    worst = std::max(worst, rel_diff(a, b));
  }
  return worst;
}

TEST(CfExpand, ScalarSquare) {
  const auto cf = cf_expand(scalar({1.0, 2.0, 1.0}));
  EXPECT_EQ(cf.pattern, CfPattern::kEven);
  ASSERT_EQ(cf.params.size(), 2u);
  EXPECT_NEAR(cf.params[0].real()(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(cf.params[1].real()(0, 0), 2.0, 1e-15);
}

TEST(CfExpand, NonHermitianCounterexample) {
  const auto cf = cf_expand(testing::load("nonhermitian_cf.json"));
  ASSERT_EQ(cf.params.size(), 2u);
  EXPECT_LT(rel_diff(cf.params[0], mat({{6.0, -1.0}, {-15.0, 3.0}})), 1e-14);
  EXPECT_LT(rel_diff(cf.params[1], mat({{4.0 / 3, -1.0 / 3}, {6.0, -1.0}})), 1e-14);
}

TEST(CfExpand, SingularMarkovExampleBreaksDown) {
  try {
    cf_expand(testing::load("singular_markov.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExpansionBreakdown);
  }
}

TEST(CfSynthesize, ScalarSquare) {
  const StieltjesCF cf{1, CfPattern::kEven, {CMatrix::Constant(1, 1, 0.5), CMatrix::Constant(1, 1, 2.0)}};
  const auto f = cf_polynomial(cf);
  ASSERT_EQ(f.degree(), 2);
  EXPECT_NEAR(std::abs(f.coeff(1)(0, 0) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(f.coeff(2)(0, 0) - 1.0), 0.0, 1e-14);
}

TEST(CfSynthesize, IdentityParametersGiveStablePolynomial) {
  for (int p = 1; p <= 3; ++p) {
    const StieltjesCF cf{p, CfPattern::kEven, {CMatrix::Identity(p, p), CMatrix::Identity(p, p)}};
    const auto f = cf_polynomial(cf);
    EXPECT_TRUE(f.is_monic());
    EXPECT_TRUE(is_hurwitz_oracle(f).hurwitz);
  }
}

TEST(CfSynthesize, SingularTailParameter) {
  const StieltjesCF cf{2, CfPattern::kEven, {CMatrix::Identity(2, 2), mat({{1.0, 0.0}, {0.0, 0.0}})}};
  try {
    cf_synthesize(cf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularTailParameter);
  }
}

TEST(CfRoundTrip, ExpandThenSynthesize) {
  std::vector<MatrixPolynomial> cases;
  for (const char* name : {"nonhermitian_cf.json", "stable_degree3_3x3.json", "unstable_degree3_2x2.json",
                           "minors_degree4.json", "minors_degree6.json", "left_markov_degree4.json"}) {
    cases.push_back(testing::load(name));
  }
  testing::Points rng(41);
  for (int i = 0; i < 10; ++i) cases.push_back(rng.polynomial(1 + i % 3, 1 + i % 6, true));
  for (const auto& f : cases) {
    const auto back = cf_synthesize(cf_expand(f));
    EXPECT_LT(fraction_mismatch(f, back, 7), 1e-8);
    const auto g = cf_polynomial(cf_expand(f));
    for (int k = 0; k <= f.degree(); ++k) EXPECT_LT(rel_diff(g.coeff(k), f.coeff(k)), 1e-8);
  }
}

TEST(CfRoundTrip, SynthesizeThenExpand) {
  testing::Points rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 1 + trial % 3;
    const int n = 1 + trial % 6;
    StieltjesCF cf{p, n % 2 == 0 ? CfPattern::kEven : CfPattern::kOdd, {}};
    for (int k = 0; k < n; ++k) cf.params.push_back(rng.matrix(p, p) + 2.0 * CMatrix::Identity(p, p));
    const auto back = cf_expand(cf_polynomial(cf));
    ASSERT_EQ(back.params.size(), cf.params.size());
    for (std::size_t k = 0; k < cf.params.size(); ++k) EXPECT_LT(rel_diff(back.params[k], cf.params[k]), 1e-9);
  }
}

TEST(HurwitzViaCf, WorkedExamples) {
  const auto v = hurwitz_via_cf(testing::load("stable_degree3_3x3.json"));
  EXPECT_EQ(v.verdict, Verdict::kStable);
  EXPECT_EQ(v.certificates.size(), 3u);
  for (const auto& c : v.certificates) EXPECT_TRUE(c.positive_definite.value_or(false));

  const auto bad = testing::load("nonhermitian_cf.json");
  EXPECT_NE(hurwitz_via_cf(bad).verdict, Verdict::kStable);
  EXPECT_FALSE(is_hurwitz_oracle(bad).hurwitz);

  EXPECT_EQ(hurwitz_via_cf(scalar({1.0, 2.0, 1.0})).verdict, Verdict::kStable);
  EXPECT_EQ(hurwitz_via_cf(testing::load("unstable_degree3_2x2.json")).verdict, Verdict::kUnstable);
}

TEST(HurwitzViaCf, GenerativeSoundness) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int p = 1 + static_cast<int>(seed % 3);
    const int n = 1 + static_cast<int>(seed % 6);
    const auto f = generate_from_cf(p, n, seed);
    EXPECT_TRUE(is_hurwitz_oracle(f).hurwitz) << seed;
    EXPECT_EQ(hurwitz_via_markov(f).verdict, Verdict::kStable) << seed;
    EXPECT_EQ(hurwitz_via_cf(f).verdict, Verdict::kStable) << seed;
  }
}

TEST(HurwitzViaCf, AgreesWithMarkovAndOracle) {
  for (std::uint64_t seed = 50; seed < 90; ++seed) {
    const int p = 1 + static_cast<int>(seed % 3);
    const int n = 1 + static_cast<int>(seed % 6);
    for (const auto& f : {generate_from_cf(p, n, seed, ParameterSigns::kIndefinite), generate_stable(p, n, seed)}) {
      const auto cf = hurwitz_via_cf(f);
      const auto mk = hurwitz_via_markov(f);
      if (cf.verdict == Verdict::kInapplicable) continue;
      EXPECT_EQ(cf.verdict == Verdict::kStable, is_hurwitz_oracle(f).hurwitz) << seed;
      if (mk.verdict != Verdict::kInapplicable) {
        EXPECT_EQ(cf.verdict, mk.verdict) << seed;
      }
    }
  }
}

}  // namespace
}  // namespace hurwitz
