#include "hurwitz/scalar_polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace hurwitz {

ScalarPolynomial ScalarPolynomial::monomial(Complex c, int power) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(power) + 1, Complex{});
  coeffs.back() = c;
  return ScalarPolynomial(std::move(coeffs));
}

Complex ScalarPolynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double ScalarPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ScalarPolynomial ScalarPolynomial::trimmed(double abs_tol) const {
  auto coeffs = coeffs_;
  while (!coeffs.empty() && std::abs(coeffs.back()) <= abs_tol) coeffs.pop_back();
  return ScalarPolynomial(std::move(coeffs));
}

ScalarPolynomial ScalarPolynomial::conj() const {
  auto coeffs = coeffs_;
  for (auto& c : coeffs) c = std::conj(c);
  return ScalarPolynomial(std::move(coeffs));
}

std::vector<Complex> ScalarPolynomial::roots(double rel_trim_tol) const {
  const auto t = trimmed(rel_trim_tol * max_abs_coefficient());
  const int n = t.degree();
  if (n <= 0) return {};
  CMatrix companion = CMatrix::Zero(n, n);
  const Complex lead = t.coeffs_.back();
  for (int i = 0; i < n; ++i) companion(0, i) = -t.coeffs_[n - 1 - i] / lead;
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  const Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  }
  return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  return a + Complex(-1.0) * b;
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator*(Complex c, const ScalarPolynomial& a) {
  auto coeffs = a.coeffs_;
  for (auto& x : coeffs) x *= c;
  return ScalarPolynomial(std::move(coeffs));
}

std::pair<ScalarPolynomial, ScalarPolynomial> divmod(const ScalarPolynomial& a,
                                                     const ScalarPolynomial& b,
                                                     double abs_tol) {
  const auto d = b.trimmed(abs_tol);
  if (d.empty()) throw std::invalid_argument("divmod: division by the zero polynomial");
  const int db = d.degree();
  auto rem = a.coefficients();
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {ScalarPolynomial{}, a};
  std::vector<Complex> quot(static_cast<std::size_t>(da - db) + 1);
  const Complex lead = d.coefficients().back();
  for (int k = da - db; k >= 0; --k) {
    const Complex q = rem[k + db] / lead;
    quot[k] = q;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * d.coefficients()[j];
    rem[k + db] = 0.0;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {ScalarPolynomial(std::move(quot)), ScalarPolynomial(std::move(rem))};
}

}  // namespace hurwitz
