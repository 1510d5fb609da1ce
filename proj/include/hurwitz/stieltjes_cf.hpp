#pragma once

#include <vector>

#include "hurwitz/matrix_polynomial.hpp"
#include "hurwitz/stability.hpp"

namespace hurwitz {

/// kEven:  F_o/F_e = I/(z c_1 + I/(c_2 + I/(... z c_{n-1} + c_n^{-1})))
/// kOdd:   F_e/F_o = I/(c_1 + I/(z c_2 + I/(... z c_{n-1} + c_n^{-1})))
/// kOddC:  F_o/F_e = c_1 + I/(z c_2 + I/(... z c_{n-1} + c_n^{-1}))
/// with A/B = A B^{-1}. kOdd and kOddC carry the same parameters.
enum class CfPattern { kEven, kOdd, kOddC };

std::string_view to_string(CfPattern pattern);

struct StieltjesCF {
  int p = 0;
  CfPattern pattern = CfPattern::kEven;
  std::vector<CMatrix> params;  // c_1 ... c_n
};

/// Euclidean expansion of the even/odd quotient. Starting from
/// (P_0, P_1) = (F_e, F_o) for even n and (F_o, F_e) for odd n, level k
/// takes c_k = lead(P_{k-1}) lead(P_k)^{-1} and
/// P_{k+1} = P_{k-1} - z c_k P_k (z-weighted level) or P_{k-1} - c_k P_k.
/// Leading blocks are read at tracked structural degrees.
/// Throws kNotMonic, kDegreeTooLow, kExpansionBreakdown.
StieltjesCF cf_expand(const MatrixPolynomial& f);

/// Folds the fraction back into a pair (F_e, F_o) with a monic leading
/// block, such that the right quotient reproduces the fraction.
/// Throws kSingularTailParameter, kDimensionMismatch.
EvenOddPair cf_synthesize(const StieltjesCF& cf);

/// The monic polynomial F = F_e(z^2) + z F_o(z^2) of a fraction.
MatrixPolynomial cf_polynomial(const StieltjesCF& cf);

/// Largest relative mismatch of F_o F_e^{-1} between two pairs at
/// `samples` seeded points of modulus in [10, 20].
double quotient_mismatch(const EvenOddPair& a, const EvenOddPair& b, int samples = 10);

/// Stable iff the canonical Markov truncation is Hermitian, the expansion
/// exists and every c_k is Hermitian positive definite. Breakdown under the
/// Hermitian hypothesis is kUnstable; a non-Hermitian truncation is
/// kInapplicable. Throws kNotMonic, kDegreeTooLow.
CriterionVerdict hurwitz_via_cf(const MatrixPolynomial& f, double tol = kDefaultLinalgTol);

}  // namespace hurwitz
