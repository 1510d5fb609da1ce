#include "hurwitz/common.hpp"

#include <algorithm>

namespace hurwitz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotMonic: return "NotMonic";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kWrongParity: return "WrongParity";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kDegenerateDeterminant: return "DegenerateDeterminant";
    case ErrorCode::kSingularLeadingBlock: return "SingularLeadingBlock";
    case ErrorCode::kSingularLeadingEvenBlock: return "SingularLeadingEvenBlock";
    case ErrorCode::kInsufficientBlocks: return "InsufficientBlocks";
    case ErrorCode::kNonHermitianSequence: return "NonHermitianSequence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kExpansionBreakdown: return "ExpansionBreakdown";
    case ErrorCode::kSingularTailParameter: return "SingularTailParameter";
    case ErrorCode::kCommonMultipleViolated: return "CommonMultipleViolated";
    case ErrorCode::kQuadrupleIdentityViolated: return "QuadrupleIdentityViolated";
    case ErrorCode::kToleranceAmbiguity: return "ToleranceAmbiguity";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kNonSquareBlock: return "NonSquareBlock";
    case ErrorCode::kLeadingBlockZero: return "LeadingBlockZero";
  }
  return "Unknown";
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_numerically_singular(const CMatrix& m, double rel_tol, double scale) {
  if (m.size() == 0) return false;
  const Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double largest = std::max(sv(0), scale);
  if (largest == 0.0) return true;
  return sv(sv.size() - 1) <= rel_tol * largest;
}

}  // namespace hurwitz
