#pragma once

#include <utility>
#include <vector>

#include "hurwitz/common.hpp"

namespace hurwitz {

/// Dense univariate polynomial over C, coefficients stored in ascending
/// powers (coeffs[k] multiplies z^k). An empty coefficient list is the zero
/// polynomial.
class ScalarPolynomial {
 public:
  ScalarPolynomial() = default;
  explicit ScalarPolynomial(std::vector<Complex> ascending)
      : coeffs_(std::move(ascending)) {}

  static ScalarPolynomial constant(Complex c) { return ScalarPolynomial({c}); }
  static ScalarPolynomial monomial(Complex c, int power);

  /// Nominal degree (size - 1); -1 for the empty list.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool empty() const { return coeffs_.empty(); }

  Complex coeff(int power) const {
    return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power]
                                                                  : Complex{};
  }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  Complex operator()(Complex z) const;

  double max_abs_coefficient() const;

  /// Drops leading coefficients with modulus <= abs_tol.
  ScalarPolynomial trimmed(double abs_tol) const;

  ScalarPolynomial conj() const;

  /// Zeros with multiplicity, via the eigenvalues of the companion matrix of
  /// the trimmed polynomial. Constant polynomials have no zeros.
  std::vector<Complex> roots(double rel_trim_tol = 1e-12) const;

  friend ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend ScalarPolynomial operator*(Complex c, const ScalarPolynomial& a);

 private:
  std::vector<Complex> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b. The leading
/// coefficient of b (after trimming at abs_tol) must be nonzero.
std::pair<ScalarPolynomial, ScalarPolynomial> divmod(const ScalarPolynomial& a,
                                                     const ScalarPolynomial& b,
                                                     double abs_tol = 0.0);

}  // namespace hurwitz
