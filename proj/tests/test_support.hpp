#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/cli.hpp"
#include "hurwitz/matrix_polynomial.hpp"

namespace hurwitz::testing {

inline constexpr Complex kI{0.0, 1.0};

inline CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  CMatrix out(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) out(i, j++) = x;
    ++i;
  }
  return out;
}

inline double rel_diff(const CMatrix& a, const CMatrix& b) {
  const double scale = std::max({a.norm(), b.norm(), 1e-300});
  return (a - b).norm() / scale;
}

inline double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

/// Scalar polynomial, leading coefficient first, lifted to p = 1.
inline MatrixPolynomial scalar(std::vector<Complex> leading_first) {
  std::vector<CMatrix> blocks;
  for (const auto& c : leading_first) blocks.push_back(CMatrix::Constant(1, 1, c));
  return MatrixPolynomial(std::move(blocks));
}

inline MatrixPolynomial load(const std::string& name) {
  return cli::parse_polynomial(std::string(HURWITZ_DATA_DIR) + "/" + name).poly;
}

class Points {
 public:
  explicit Points(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex in_annulus(double r0, double r1) {
    return std::polar(uniform(r0, r1), uniform(0.0, 2.0 * std::numbers::pi));
  }
  CMatrix matrix(int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
    }
    return m;
  }
  CMatrix hermitian(int p) {
    const CMatrix a = matrix(p, p);
    return 0.5 * (a + a.adjoint());
  }
  MatrixPolynomial polynomial(int p, int n, bool monic) {
    std::vector<CMatrix> blocks;
    for (int k = 0; k <= n; ++k) blocks.push_back(k == 0 && monic ? CMatrix::Identity(p, p) : matrix(p, p));
    return MatrixPolynomial(std::move(blocks));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// (1 / 2 pi i) times the contour integral of z^power g(z) over |z| = radius,
/// trapezoid rule. Coefficient of z^{-(power + 1)} in the Laurent expansion
/// of g outside the circle.
inline CMatrix contour_coefficient(const std::function<CMatrix(Complex)>& g, int power, double radius,
                                   int nodes = 1024) {
  CMatrix acc;
  for (int q = 0; q < nodes; ++q) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * q / nodes);
    const CMatrix term = std::pow(z, power + 1) * g(z);
    acc = q == 0 ? term : CMatrix(acc + term);
  }
  return acc / static_cast<double>(nodes);
}

/// Upper bound on the zero moduli of a polynomial with invertible leading
/// block, from the block companion norm.
inline double zero_radius(const MatrixPolynomial& f) {
  const CMatrix inv = f.leading().inverse();
  double bound = 0.0;
  for (int k = 1; k <= f.degree(); ++k) bound = std::max(bound, (inv * f.coeff(k)).norm());
  return 1.0 + bound;
}

}  // namespace hurwitz::testing
