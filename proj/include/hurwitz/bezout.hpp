#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/hermitian.hpp"
#include "hurwitz/matrix_polynomial.hpp"

namespace hurwitz {

/// Quadruple (Mt, Lt, M, L) with Mt(z) Lt(z) = M(z) L(z).
struct BezoutQuadruple {
  MatrixPolynomial Mt;
  MatrixPolynomial Lt;
  MatrixPolynomial M;
  MatrixPolynomial L;
};

/// Anderson-Jury Bezoutian: the n1 p x n2 p block matrix B with
///   (z - u) sum_{i,j} z^i B_ij u^j = Mt(z) Lt(u) - M(z) L(u),
/// n1 = max(deg M, deg Mt), n2 = max(deg L, deg Lt). Built by the
/// telescoping recurrence B_{i,j} = B_{i+1,j-1} + P_{i+1,j} over the
/// bivariate coefficient grid P, then checked against the defining
/// identity. Throws kCommonMultipleViolated.
CMatrix bezoutian(const BezoutQuadruple& q);

/// Largest relative residual of the defining identity over `samples`
/// seeded random point pairs.
double bezoutian_identity_residual(const BezoutQuadruple& q, const CMatrix& b, int samples = 10,
                                   std::uint64_t seed = 0x5eed);

/// Relative residual ||B - W_L H W_R|| / max(||B||, ||W_L H W_R||) for the
/// quadruple read as (Mt, Lt, M, L) = (D_L, N_R, N_L, D_R), where
/// D_L^{-1} N_L = N_R D_R^{-1} = sum_k z^{-(k+1)} series[k]. W_L, W_R are the
/// upper-left anti-triangular Hankel matrices of the non-leading-shifted
/// denominator coefficients and H is the m_L x m_R block Hankel of the
/// series. Throws kDimensionMismatch.
double bezout_hankel_congruence_residual(const BezoutQuadruple& q, std::span<const CMatrix> series);

/// Quadruple realising N_R D_R^{-1} from both sides when its expansion
/// coefficients are Hermitian: (D_R^v, N_R, N_R^v, D_R).
BezoutQuadruple hermitian_fraction_quadruple(const MatrixPolynomial& numerator,
                                             const MatrixPolynomial& denominator);

/// Rectangular grid of scalar polynomials.
class PolynomialMatrix {
 public:
  PolynomialMatrix(int rows, int cols);

  static PolynomialMatrix identity(int n);
  static PolynomialMatrix stack(const MatrixPolynomial& top, const MatrixPolynomial& bottom);
  static PolynomialMatrix from_matrix_polynomial(const MatrixPolynomial& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ScalarPolynomial& operator()(int r, int c) { return cells_[index(r, c)]; }
  const ScalarPolynomial& operator()(int r, int c) const { return cells_[index(r, c)]; }

  CMatrix eval(Complex z) const;
  int max_degree() const;
  /// Square sub-block as a matrix polynomial.
  MatrixPolynomial block(int row0, int col0, int size) const;

  friend PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * cols_ + c); }

  int rows_;
  int cols_;
  std::vector<ScalarPolynomial> cells_;
};

inline constexpr double kGcdTolerance = 1e-9;

struct GcdResult {
  MatrixPolynomial divisor;            // F_1, upper block of U [F; Ft]
  PolynomialMatrix transform;          // U, unimodular, U [F; Ft] = [F_1; 0]
  PolynomialMatrix inverse_transform;  // V = U^{-1}, [F; Ft] = V [F_1; 0]
  bool near_threshold = false;         // a degree decision sat within 10x of tol
};

/// Raised when a degree decision is within a factor 10 of the tolerance.
/// Carries the reductions obtained with the tolerance lowered and raised
/// by a factor 100.
class GcdAmbiguityError : public Error {
 public:
  GcdAmbiguityError(const std::string& what, std::vector<MatrixPolynomial> candidates)
      : Error(ErrorCode::kToleranceAmbiguity, what), candidates_(std::move(candidates)) {}
  const std::vector<MatrixPolynomial>& candidates() const { return candidates_; }

 private:
  std::vector<MatrixPolynomial> candidates_;
};

/// Greatest right common divisor by unimodular row reduction of the stacked
/// 2p x p matrix [F; Ft]: per column, pivot on the lowest-degree nonzero
/// entry and eliminate with Euclidean division steps until everything below
/// the pivot vanishes. Coefficients at or below tol * (largest input
/// coefficient) count as zero. Throws GcdAmbiguityError.
GcdResult grcd(const MatrixPolynomial& f, const MatrixPolynomial& ft, double tol = kGcdTolerance);

/// Same reduction, never throwing on ambiguity (sets near_threshold).
GcdResult grcd_unchecked(const MatrixPolynomial& f, const MatrixPolynomial& ft, double tol = kGcdTolerance);

/// Greatest left common divisor, via grcd(F^v, Ft^v)^v.
MatrixPolynomial glcd(const MatrixPolynomial& f, const MatrixPolynomial& ft, double tol = kGcdTolerance);

/// Zero counts with respect to the real axis: upper half plane, lower half
/// plane, real axis.
struct GammaTriple {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const GammaTriple&, const GammaTriple&) = default;
};

/// Counts zeros of det F by the sign of their imaginary part; values
/// within rel_tol * (1 + |z|) of the axis count as real.
GammaTriple count_by_imaginary_part(std::span<const Complex> zeros, double rel_tol);

struct HermiteFujiwaraResult {
  GammaTriple gamma;
  InertiaTriple bezout_inertia;  // inertia of -i B_{L1^v, L^v}(L, L1)
  GammaTriple divisor_gamma;     // zeros of the GRCD L_0 of L and L1
  CMatrix bezoutian;
};

/// Zero counts of L with respect to R through the inertia of
/// -i B_{L1^v, L^v}(L, L1) corrected by the zeros of a GRCD of L and L1.
/// L1 defaults to L^v. Throws kQuadrupleIdentityViolated when
/// L^v L != L1^v L1.
HermiteFujiwaraResult hermite_fujiwara_inertia(const MatrixPolynomial& l,
                                               const std::optional<MatrixPolynomial>& l1 = std::nullopt,
                                               double tol = kDefaultLinalgTol);

/// Zero sets (with multiplicity) of grcd(F, Ft) and of grcd of U [F; Ft]
/// agree. Throws kNotUnimodular unless det U is a nonzero constant.
bool unimodular_invariance_check(const MatrixPolynomial& f, const MatrixPolynomial& ft,
                                 const PolynomialMatrix& u, double tol = kGcdTolerance);

/// Zeros of det F with multiplicity; empty for a constant determinant.
std::vector<Complex> determinant_zeros(const MatrixPolynomial& f);

/// Greedy multiset comparison, |a_i - b_i| <= rel_tol * (1 + |a_i|).
bool same_zero_multiset(std::vector<Complex> a, std::vector<Complex> b, double rel_tol);

}  // namespace hurwitz
