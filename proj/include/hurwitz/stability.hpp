#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/markov.hpp"
#include "hurwitz/oracle.hpp"

namespace hurwitz {

enum class Verdict { kStable, kUnstable, kInapplicable };

std::string_view to_string(Verdict v);

/// A named matrix together with what was decided about it.
struct Certificate {
  std::string name;
  CMatrix matrix;
  std::optional<bool> positive_definite;
  std::optional<InertiaTriple> inertia;
};

struct CriterionVerdict {
  std::string id;
  Verdict verdict = Verdict::kInapplicable;
  std::vector<Certificate> certificates;
  /// Machine-readable cause for kInapplicable (empty otherwise), e.g.
  /// "non_hermitian_truncation", "first_second_type_disagreement".
  std::string cause;
  std::string reason;
  double seconds = 0.0;
};

struct StieltjesResult {
  bool positive_definite = false;
  std::vector<Certificate> certificates;
};

/// H_{0,floor(l/2)} > 0 and H_{1,floor((l-1)/2)} > 0 for the truncation
/// s_0..s_l. Throws kInsufficientBlocks, kNonHermitianSequence.
StieltjesResult stieltjes_positive_definite(const MarkovSequence& s, int l, double tol = kDefaultLinalgTol);

/// Hurwitz verdict from the Markov parameters. Even degree: Stieltjes
/// positivity of s_0..s_{n-1}. Odd degree: second-type parameters s_0..s_2m,
/// cross-checked against H_{m-1}, H_{1,m-1}, s_{-1} > 0 from the first-type
/// parameters when the leading block of F_e is invertible. A non-Hermitian
/// truncation gives kInapplicable. Throws kNotMonic, kDegreeTooLow.
CriterionVerdict hurwitz_via_markov(const MatrixPolynomial& f, Side side = Side::kRight,
                                    double tol = kDefaultLinalgTol);

struct GammaPrimeBreakdown {
  GammaPrimeTriple gamma;
  InertiaTriple first;   // H_{m-1} (even) or H_m (odd)
  InertiaTriple second;  // H_{1,m-1}
  bool divisor_computed = false;
  GammaTriple divisor_gamma;  // zeros of the common divisor w.r.t. R
  std::optional<MatrixPolynomial> divisor;
};

/// Zero counts of F with respect to iR from the inertia of the two block
/// Hankel matrices of the canonical Markov parameters, corrected by the
/// zeros of a common divisor of F_e(-z^2) and z F_o(-z^2) (right divisor
/// for side = right, left divisor for side = left). The divisor is only
/// computed when a Hankel matrix is singular.
/// Throws kNotMonic, kDegreeTooLow, kNonHermitianSequence, and
/// GcdAmbiguityError from the divisor step.
GammaPrimeBreakdown gamma_prime_via_hankel(const MatrixPolynomial& f, Side side = Side::kRight,
                                           double tol = kDefaultLinalgTol);

}  // namespace hurwitz
