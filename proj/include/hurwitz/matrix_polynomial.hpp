#pragma once

#include <utility>
#include <vector>

#include "hurwitz/common.hpp"
#include "hurwitz/scalar_polynomial.hpp"

namespace hurwitz {

/// Relative threshold below which a leading coefficient block is treated as
/// zero when trimming (scaled by the largest coefficient magnitude).
inline constexpr double kTrimTolerance = 1e-12;

/// F(z) = A_0 z^n + A_1 z^{n-1} + ... + A_n with square p x p blocks.
///
/// Coefficients are stored leading block first. The stored list is taken
/// at face value (nominal degree = size - 1); use trimmed() to drop
/// numerically zero leading blocks. Arithmetic results come back trimmed.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(std::vector<CMatrix> coeffs);

  static MatrixPolynomial zero(int p);
  static MatrixPolynomial identity(int p);
  /// Builds from ascending-power blocks (blocks[k] multiplies z^k).
  static MatrixPolynomial from_ascending(std::vector<CMatrix> blocks);
  /// Lifts a scalar polynomial to p = 1.
  static MatrixPolynomial from_scalar(const ScalarPolynomial& poly);

  int block_size() const { return static_cast<int>(coeffs_.front().rows()); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// A_k (k = 0 is the leading block).
  const CMatrix& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<CMatrix>& coefficients() const { return coeffs_; }
  const CMatrix& leading() const { return coeffs_.front(); }
  /// Coefficient of z^power, zero block when out of range.
  CMatrix ascending(int power) const;

  bool is_monic(double tol = 1e-12) const;
  bool is_zero(double abs_tol = 0.0) const;
  double max_coefficient_norm() const;

  MatrixPolynomial trimmed(double rel_tol = kTrimTolerance) const;

  /// Horner evaluation.
  CMatrix operator()(Complex z) const;

  /// Entry (r, c) as a scalar polynomial.
  ScalarPolynomial entry(int r, int c) const;
  /// For p = 1: the polynomial as a scalar one.
  ScalarPolynomial to_scalar() const;

  friend MatrixPolynomial operator+(const MatrixPolynomial& a, const MatrixPolynomial& b);
  friend MatrixPolynomial operator-(const MatrixPolynomial& a, const MatrixPolynomial& b);
  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);
  friend MatrixPolynomial operator*(const CMatrix& c, const MatrixPolynomial& a);
  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const CMatrix& c);
  friend MatrixPolynomial operator*(Complex c, const MatrixPolynomial& a);

 private:
  std::vector<CMatrix> coeffs_;
};

enum class Parity { kEven, kOdd };

/// F(z) = F_e(z^2) + z F_o(z^2).
struct EvenOddPair {
  MatrixPolynomial even;
  MatrixPolynomial odd;
  Parity parity;
};

/// Splits per source degree parity: for n = 2m, F_e collects A_0, A_2, ...,
/// A_2m and F_o collects A_1, ..., A_{2m-1}; for n = 2m+1, F_e collects
/// A_1, A_3, ..., A_{2m+1} and F_o collects A_0, A_2, ..., A_2m. Degrees are
/// structural (no trimming), so a zero A_1 in the odd case keeps deg F_e = m.
EvenOddPair even_odd_split(const MatrixPolynomial& f);

/// Reassembles F(z) = F_e(z^2) + z F_o(z^2).
MatrixPolynomial compose_even_odd(const EvenOddPair& parts);

/// F^v(z) = sum A_k^* z^{n-k}.
MatrixPolynomial adjoint_reversal(const MatrixPolynomial& f);

/// G(z) = F(c z^power).
MatrixPolynomial substitute_monomial(const MatrixPolynomial& f, Complex c, int power);

/// z^k F(z).
MatrixPolynomial shift_up(const MatrixPolynomial& f, int k);

/// Left-normalises by the inverse of the leading block so the result is
/// monic with the same zeros. Throws kSingularLeadingBlock.
MatrixPolynomial monic_normalized(const MatrixPolynomial& f);

/// True iff det F(z_i) is above tol * (Hadamard scale) at one of n*p + 1
/// distinct sample points.
bool is_regular(const MatrixPolynomial& f, double tol = 1e-10);

/// det F(z) as a p = 1 polynomial, by evaluation at n*p + 1 scaled roots of
/// unity followed by interpolation (an inverse DFT). Leading coefficients
/// below kTrimTolerance * max are trimmed. Throws kDegenerateDeterminant when
/// every coefficient vanishes.
MatrixPolynomial det_poly(const MatrixPolynomial& f);

/// Companion matrix of F_e(-z) for monic F of degree 2m: identity blocks on
/// the block subdiagonal, last block column holding (-1)^{m-r+1} A_{2(m-r)}
/// in block row r. It satisfies H_{j+1,m-1} = H_{j,m-1} C for the even-case
/// Markov parameters. Throws kNotMonic, kOddDegree.
CMatrix companion_of_reflected_even(const MatrixPolynomial& f);

/// Quotient and remainder of N = Q D + R (right division, deg R < deg D).
/// The leading block of D must be invertible.
std::pair<MatrixPolynomial, MatrixPolynomial> right_divide(const MatrixPolynomial& n,
                                                           const MatrixPolynomial& d);
/// N = D Q + R (left division).
std::pair<MatrixPolynomial, MatrixPolynomial> left_divide(const MatrixPolynomial& n,
                                                          const MatrixPolynomial& d);

}  // namespace hurwitz
