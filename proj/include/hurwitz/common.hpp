#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace hurwitz {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Failure categories surfaced by the library. The CLI maps every code to a
/// stable exit status, so new codes go at the end.
enum class ErrorCode {
  kNotSquare,
  kNotHermitian,
  kNotMonic,
  kOddDegree,
  kWrongParity,
  kDegreeTooLow,
  kDegenerateDeterminant,
  kSingularLeadingBlock,
  kSingularLeadingEvenBlock,
  kInsufficientBlocks,
  kNonHermitianSequence,
  kDimensionMismatch,
  kExpansionBreakdown,
  kSingularTailParameter,
  kCommonMultipleViolated,
  kQuadrupleIdentityViolated,
  kToleranceAmbiguity,
  kNotUnimodular,
  kSchemaError,
  kNonSquareBlock,
  kLeadingBlockZero,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Largest entry modulus, 0 for an empty matrix.
double max_abs(const CMatrix& m);

/// Largest / smallest singular value ratio test used for every
/// "is this leading block invertible" decision.
bool is_numerically_singular(const CMatrix& m, double rel_tol, double scale = 0.0);

}  // namespace hurwitz
