#include "hurwitz/matrix_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/LU>

namespace hurwitz {

namespace {

std::vector<CMatrix> to_ascending(const MatrixPolynomial& f) {
  std::vector<CMatrix> out(f.coefficients().rbegin(), f.coefficients().rend());
  return out;
}

// Radius for the interpolation nodes: 1 + max_k (|A_k| / |A_0|)^{1/k}, a
// bound on the zero moduli of the form used by Fujiwara.
double node_radius(const MatrixPolynomial& f) {
  const double lead = f.leading().norm();
  double r = 0.0;
  for (int k = 1; k <= f.degree(); ++k) {
    const double ratio = f.coeff(k).norm() / (lead > 0.0 ? lead : 1.0);
    r = std::max(r, std::pow(ratio, 1.0 / k));
  }
  return 1.0 + r;
}

Complex node(int k, int count, double radius) {
  const double angle = 2.0 * std::numbers::pi * k / count;
  return std::polar(radius, angle);
}

CMatrix inverse_or_throw(const CMatrix& m, const char* what) {
  if (is_numerically_singular(m, 1e-12)) throw Error(ErrorCode::kSingularLeadingBlock, what);
  return m.inverse();
}

}  // namespace

MatrixPolynomial::MatrixPolynomial(std::vector<CMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty coefficient list");
  const auto p = coeffs_.front().rows();
  for (const auto& c : coeffs_) {
    if (c.rows() != c.cols()) throw Error(ErrorCode::kNonSquareBlock, "coefficient block is not square");
    if (c.rows() != p) throw Error(ErrorCode::kDimensionMismatch, "coefficient blocks differ in size");
    if (!c.allFinite()) throw Error(ErrorCode::kSchemaError, "non-finite coefficient");
  }
}

MatrixPolynomial MatrixPolynomial::zero(int p) { return MatrixPolynomial({CMatrix::Zero(p, p)}); }

MatrixPolynomial MatrixPolynomial::identity(int p) {
  return MatrixPolynomial({CMatrix::Identity(p, p)});
}

MatrixPolynomial MatrixPolynomial::from_ascending(std::vector<CMatrix> blocks) {
  std::reverse(blocks.begin(), blocks.end());
  return MatrixPolynomial(std::move(blocks));
}

MatrixPolynomial MatrixPolynomial::from_scalar(const ScalarPolynomial& poly) {
  std::vector<CMatrix> blocks;
  for (const auto& c : poly.coefficients()) blocks.push_back(CMatrix::Constant(1, 1, c));
  if (blocks.empty()) blocks.push_back(CMatrix::Zero(1, 1));
  return from_ascending(std::move(blocks));
}

CMatrix MatrixPolynomial::ascending(int power) const {
  const int k = degree() - power;
  if (power < 0 || k < 0) return CMatrix::Zero(block_size(), block_size());
  return coeffs_[static_cast<std::size_t>(k)];
}

bool MatrixPolynomial::is_monic(double tol) const {
  const auto p = block_size();
  return (leading() - CMatrix::Identity(p, p)).cwiseAbs().maxCoeff() <= tol;
}

bool MatrixPolynomial::is_zero(double abs_tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const CMatrix& c) { return max_abs(c) <= abs_tol; });
}

double MatrixPolynomial::max_coefficient_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, c.norm());
  return m;
}

MatrixPolynomial MatrixPolynomial::trimmed(double rel_tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, max_abs(c));
  const double threshold = rel_tol * scale;
  std::size_t first = 0;
  while (first + 1 < coeffs_.size() && max_abs(coeffs_[first]) <= threshold) ++first;
  if (first + 1 == coeffs_.size() && max_abs(coeffs_[first]) <= threshold) {
    return zero(block_size());
  }
  return MatrixPolynomial({coeffs_.begin() + static_cast<std::ptrdiff_t>(first), coeffs_.end()});
}

CMatrix MatrixPolynomial::operator()(Complex z) const {
  CMatrix acc = coeffs_.front();
  for (std::size_t k = 1; k < coeffs_.size(); ++k) acc = acc * z + coeffs_[k];
  return acc;
}

ScalarPolynomial MatrixPolynomial::entry(int r, int c) const {
  std::vector<Complex> asc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) asc.push_back((*it)(r, c));
  return ScalarPolynomial(std::move(asc));
}

ScalarPolynomial MatrixPolynomial::to_scalar() const {
  if (block_size() != 1) throw Error(ErrorCode::kDimensionMismatch, "to_scalar requires p = 1");
  return entry(0, 0);
}

MatrixPolynomial operator+(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.block_size() != b.block_size()) throw Error(ErrorCode::kDimensionMismatch, "sum: block sizes");
  const int n = std::max(a.degree(), b.degree());
  std::vector<CMatrix> asc;
  for (int k = 0; k <= n; ++k) asc.push_back(a.ascending(k) + b.ascending(k));
  return MatrixPolynomial::from_ascending(std::move(asc)).trimmed();
}

MatrixPolynomial operator-(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  return a + Complex(-1.0) * b;
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.block_size() != b.block_size()) throw Error(ErrorCode::kDimensionMismatch, "product: block sizes");
  const int p = a.block_size();
  const int n = a.degree() + b.degree();
  std::vector<CMatrix> asc(static_cast<std::size_t>(n) + 1, CMatrix::Zero(p, p));
  const auto aa = to_ascending(a);
  const auto bb = to_ascending(b);
  for (std::size_t i = 0; i < aa.size(); ++i) {
    for (std::size_t j = 0; j < bb.size(); ++j) asc[i + j] += aa[i] * bb[j];
  }
  return MatrixPolynomial::from_ascending(std::move(asc)).trimmed();
}

MatrixPolynomial operator*(const CMatrix& c, const MatrixPolynomial& a) {
  std::vector<CMatrix> coeffs;
  for (const auto& x : a.coefficients()) coeffs.push_back(c * x);
  return MatrixPolynomial(std::move(coeffs)).trimmed();
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const CMatrix& c) {
  std::vector<CMatrix> coeffs;
  for (const auto& x : a.coefficients()) coeffs.push_back(x * c);
  return MatrixPolynomial(std::move(coeffs)).trimmed();
}

MatrixPolynomial operator*(Complex c, const MatrixPolynomial& a) {
  std::vector<CMatrix> coeffs;
  for (const auto& x : a.coefficients()) coeffs.push_back(c * x);
  return MatrixPolynomial(std::move(coeffs)).trimmed();
}

EvenOddPair even_odd_split(const MatrixPolynomial& f) {
  const int n = f.degree();
  const int p = f.block_size();
  std::vector<CMatrix> even;
  std::vector<CMatrix> odd;
  // Descending order: A_k multiplies z^{n-k}; its power is even iff n-k is.
  for (int k = 0; k <= n; ++k) ((n - k) % 2 == 0 ? even : odd).push_back(f.coeff(k));
  if (odd.empty()) odd.push_back(CMatrix::Zero(p, p));
  return {MatrixPolynomial(std::move(even)), MatrixPolynomial(std::move(odd)),
          n % 2 == 0 ? Parity::kEven : Parity::kOdd};
}

MatrixPolynomial compose_even_odd(const EvenOddPair& parts) {
  const int p = parts.even.block_size();
  const int n = std::max(2 * parts.even.degree(), 2 * parts.odd.degree() + 1);
  std::vector<CMatrix> asc(static_cast<std::size_t>(n) + 1, CMatrix::Zero(p, p));
  for (int k = 0; k <= parts.even.degree(); ++k) asc[2 * k] += parts.even.ascending(k);
  for (int k = 0; k <= parts.odd.degree(); ++k) asc[2 * k + 1] += parts.odd.ascending(k);
  return MatrixPolynomial::from_ascending(std::move(asc)).trimmed();
}

MatrixPolynomial adjoint_reversal(const MatrixPolynomial& f) {
  std::vector<CMatrix> coeffs;
  for (const auto& c : f.coefficients()) coeffs.push_back(c.adjoint());
  return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial substitute_monomial(const MatrixPolynomial& f, Complex c, int power) {
  const int p = f.block_size();
  std::vector<CMatrix> asc(static_cast<std::size_t>(f.degree() * power) + 1, CMatrix::Zero(p, p));
  Complex factor = 1.0;
  for (int k = 0; k <= f.degree(); ++k) {
    asc[static_cast<std::size_t>(k * power)] = factor * f.ascending(k);
    factor *= c;
  }
  return MatrixPolynomial::from_ascending(std::move(asc));
}

MatrixPolynomial shift_up(const MatrixPolynomial& f, int k) {
  auto coeffs = f.coefficients();
  for (int i = 0; i < k; ++i) coeffs.push_back(CMatrix::Zero(f.block_size(), f.block_size()));
  return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial monic_normalized(const MatrixPolynomial& f) {
  const CMatrix inv = inverse_or_throw(f.leading(), "monic_normalized: leading block");
  std::vector<CMatrix> coeffs;
  for (const auto& c : f.coefficients()) coeffs.push_back(inv * c);
  coeffs.front() = CMatrix::Identity(f.block_size(), f.block_size());
  return MatrixPolynomial(std::move(coeffs));
}

bool is_regular(const MatrixPolynomial& f, double tol) {
  const int p = f.block_size();
  const int count = f.degree() * p + 1;
  const double radius = node_radius(f);
  for (int k = 0; k < count; ++k) {
    // Offset the nodes off the real axis so structured test inputs do not
    // land on their own zeros.
    const Complex z = node(k, count, radius) * std::polar(1.0, 0.3);
    double bound = 0.0;
    for (int j = 0; j <= f.degree(); ++j) bound += f.coeff(j).norm() * std::pow(radius, f.degree() - j);
    const double scale = std::pow(bound, p);
    if (std::abs(f(z).determinant()) > tol * scale) return true;
  }
  return false;
}

MatrixPolynomial det_poly(const MatrixPolynomial& f) {
  const int p = f.block_size();
  const int count = f.degree() * p + 1;
  const double outer = node_radius(f);
  std::vector<Complex> values(static_cast<std::size_t>(count));
  std::vector<Complex> asc(static_cast<std::size_t>(count));
  std::vector<double> noise(static_cast<std::size_t>(count), std::numeric_limits<double>::infinity());
  double value_scale = 0.0;
  double radius = outer;
  // Coefficient j carries error ~ eps * max|det| / r^j, so each one is taken
  // from whichever circle makes that smallest.
  for (int level = 0; level < 8; ++level, radius *= 0.5) {
    double level_max = 0.0;
    for (int k = 0; k < count; ++k) {
      values[static_cast<std::size_t>(k)] = Eigen::PartialPivLU<CMatrix>(f(node(k, count, radius))).determinant();
      level_max = std::max(level_max, std::abs(values[static_cast<std::size_t>(k)]));
    }
    if (level == 0) value_scale = level_max;
    for (int j = 0; j < count; ++j) {
      const double estimate = level_max / std::pow(radius, j);
      if (estimate >= noise[static_cast<std::size_t>(j)]) continue;
      noise[static_cast<std::size_t>(j)] = estimate;
      Complex acc{};
      for (int k = 0; k < count; ++k) acc += values[static_cast<std::size_t>(k)] * std::conj(node(j * k % count, count, 1.0));
      asc[static_cast<std::size_t>(j)] = acc / (static_cast<double>(count) * std::pow(radius, j));
    }
  }
  radius = outer;
  ScalarPolynomial det(std::move(asc));
  const double scale = det.max_abs_coefficient();
  if (scale == 0.0) throw Error(ErrorCode::kDegenerateDeterminant, "det F(z) vanishes identically");
  det = det.trimmed(kTrimTolerance * scale);
  // Interpolation noise lives at eps * max|det(z_k)| / r^j; if that is all
  // that is left, the determinant is identically zero.
  double bound = 0.0;
  for (int j = 0; j <= f.degree(); ++j) bound += f.coeff(j).norm() * std::pow(radius, f.degree() - j);
  if (value_scale <= 1e-11 * std::pow(bound, p)) {
    throw Error(ErrorCode::kDegenerateDeterminant, "det F(z) vanishes identically");
  }
  return MatrixPolynomial::from_scalar(det);
}

CMatrix companion_of_reflected_even(const MatrixPolynomial& f) {
  if (f.degree() % 2 != 0) throw Error(ErrorCode::kOddDegree, "companion_of_reflected_even needs even degree");
  if (!f.is_monic()) throw Error(ErrorCode::kNotMonic, "companion_of_reflected_even needs monic F");
  const int p = f.block_size();
  const int m = f.degree() / 2;
  CMatrix c = CMatrix::Zero(m * p, m * p);
  for (int r = 1; r < m; ++r) c.block(r * p, (r - 1) * p, p, p).setIdentity();
  for (int r = 0; r < m; ++r) {
    const double sign = (m - r + 1) % 2 == 0 ? 1.0 : -1.0;
    c.block(r * p, (m - 1) * p, p, p) = sign * f.coeff(2 * (m - r));
  }
  return c;
}

std::pair<MatrixPolynomial, MatrixPolynomial> right_divide(const MatrixPolynomial& n,
                                                           const MatrixPolynomial& d) {
  const int p = n.block_size();
  const int a = n.degree();
  const int b = d.degree();
  if (a < b) return {MatrixPolynomial::zero(p), n};
  const CMatrix lead_inv = inverse_or_throw(d.leading(), "right_divide: leading block of divisor");
  auto rem = to_ascending(n);
  const auto dd = to_ascending(d);
  std::vector<CMatrix> quot(static_cast<std::size_t>(a - b) + 1);
  for (int k = a - b; k >= 0; --k) {
    const CMatrix q = rem[static_cast<std::size_t>(k + b)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= b; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dd[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(b, 1)));
  if (b == 0) rem[0].setZero();
  return {MatrixPolynomial::from_ascending(std::move(quot)),
          MatrixPolynomial::from_ascending(std::move(rem))};
}

std::pair<MatrixPolynomial, MatrixPolynomial> left_divide(const MatrixPolynomial& n,
                                                          const MatrixPolynomial& d) {
  const auto [q, r] = right_divide(adjoint_reversal(n), adjoint_reversal(d));
  return {adjoint_reversal(q), adjoint_reversal(r)};
}

}  // namespace hurwitz
