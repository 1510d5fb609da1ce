#include "hurwitz/bezout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hurwitz {

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex sample_point(std::mt19937_64& rng) {
  const double r = 0.5 + uniform01(rng);
  const double theta = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(r, theta);
}

int effective_degree(const MatrixPolynomial& f) { return f.trimmed().degree(); }

CMatrix eval_bivariate(const CMatrix& b, int p, int n1, int n2, Complex z, Complex u) {
  CMatrix acc = CMatrix::Zero(p, p);
  Complex zi = 1.0;
  for (int i = 0; i < n1; ++i) {
    Complex uj = 1.0;
    for (int j = 0; j < n2; ++j) {
      acc += zi * uj * b.block(i * p, j * p, p, p);
      uj *= u;
    }
    zi *= z;
  }
  return acc;
}

ScalarPolynomial trim_small(const ScalarPolynomial& poly, double threshold, bool& near) {
  const auto& c = poly.coefficients();
  std::size_t keep = c.size();
  while (keep > 0 && std::abs(c[keep - 1]) <= threshold) {
    if (std::abs(c[keep - 1]) > 0.1 * threshold) near = true;
    --keep;
  }
  if (keep > 0 && std::abs(c[keep - 1]) <= 10.0 * threshold) near = true;
  return ScalarPolynomial(std::vector<Complex>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(keep)));
}

ScalarPolynomial tidy(const ScalarPolynomial& poly) {
  return poly.trimmed(1e-14 * poly.max_abs_coefficient());
}

double max_coefficient(const PolynomialMatrix& m) {
  double out = 0.0;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out = std::max(out, m(r, c).max_abs_coefficient());
  }
  return out;
}

void swap_rows(PolynomialMatrix& m, int a, int b) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(PolynomialMatrix& m, int a, int b) {
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

CMatrix bezoutian(const BezoutQuadruple& q) {
  const int p = q.M.block_size();
  for (const auto* f : {&q.Mt, &q.Lt, &q.L}) {
    if (f->block_size() != p) throw Error(ErrorCode::kDimensionMismatch, "bezoutian: block sizes differ");
  }
  const int n1 = std::max(effective_degree(q.M), effective_degree(q.Mt));
  const int n2 = std::max(effective_degree(q.L), effective_degree(q.Lt));
  CMatrix b = CMatrix::Zero(n1 * p, n2 * p);
  if (n1 > 0 && n2 > 0) {
    auto grid = [&](int a, int c) -> CMatrix {
      return q.Mt.ascending(a) * q.Lt.ascending(c) - q.M.ascending(a) * q.L.ascending(c);
    };
    for (int i = n1 - 1; i >= 0; --i) {
      for (int j = 0; j < n2; ++j) {
        CMatrix v = grid(i + 1, j);
        if (i + 1 < n1 && j > 0) v += b.block((i + 1) * p, (j - 1) * p, p, p);
        b.block(i * p, j * p, p, p) = v;
      }
    }
  }
  const double residual = bezoutian_identity_residual(q, b);
  if (!(residual <= 1e-8)) {
    throw Error(ErrorCode::kCommonMultipleViolated,
                "Mt Lt != M L (Bezoutian identity residual " + std::to_string(residual) + ")");
  }
  return b;
}

double bezoutian_identity_residual(const BezoutQuadruple& q, const CMatrix& b, int samples,
                                   std::uint64_t seed) {
  const int p = q.M.block_size();
  const int n1 = static_cast<int>(b.rows()) / std::max(p, 1);
  const int n2 = static_cast<int>(b.cols()) / std::max(p, 1);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex z = sample_point(rng);
    const Complex u = sample_point(rng);
    const CMatrix rhs = q.Mt(z) * q.Lt(u) - q.M(z) * q.L(u);
    const CMatrix lhs = (z - u) * eval_bivariate(b, p, n1, n2, z, u);
    const double scale = q.Mt(z).norm() * q.Lt(u).norm() + q.M(z).norm() * q.L(u).norm();
    const double err = (lhs - rhs).norm();
    worst = std::max(worst, scale > 0.0 ? err / scale : err);
  }
  return worst;
}

double bezout_hankel_congruence_residual(const BezoutQuadruple& q, std::span<const CMatrix> series) {
  const MatrixPolynomial& dl = q.Mt;
  const MatrixPolynomial& dr = q.L;
  const int p = dl.block_size();
  const int ml = effective_degree(dl);
  const int mr = effective_degree(dr);
  if (static_cast<int>(series.size()) < ml + mr - 1) {
    throw Error(ErrorCode::kDimensionMismatch, "congruence check needs " + std::to_string(ml + mr - 1) +
                                                   " series coefficients");
  }
  const CMatrix b = bezoutian(q);
  if (b.rows() != ml * p || b.cols() != mr * p) {
    throw Error(ErrorCode::kDimensionMismatch, "numerators must have lower degree than their denominators");
  }
  auto anti_hankel = [p](const MatrixPolynomial& d, int m) {
    CMatrix w = CMatrix::Zero(m * p, m * p);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; i + j < m; ++j) w.block(i * p, j * p, p, p) = d.ascending(i + j + 1);
    }
    return w;
  };
  CMatrix h(ml * p, mr * p);
  for (int i = 0; i < ml; ++i) {
    for (int j = 0; j < mr; ++j) h.block(i * p, j * p, p, p) = series[static_cast<std::size_t>(i + j)];
  }
  const CMatrix rhs = anti_hankel(dl, ml) * h * anti_hankel(dr, mr);
  const double denom = std::max(b.norm(), rhs.norm());
  return denom > 0.0 ? (b - rhs).norm() / denom : 0.0;
}

BezoutQuadruple hermitian_fraction_quadruple(const MatrixPolynomial& numerator,
                                             const MatrixPolynomial& denominator) {
  return {adjoint_reversal(denominator), numerator, adjoint_reversal(numerator), denominator};
}

PolynomialMatrix::PolynomialMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols)) {}

PolynomialMatrix PolynomialMatrix::identity(int n) {
  PolynomialMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = ScalarPolynomial::constant(1.0);
  return out;
}

PolynomialMatrix PolynomialMatrix::from_matrix_polynomial(const MatrixPolynomial& f) {
  const int p = f.block_size();
  PolynomialMatrix out(p, p);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) out(r, c) = f.entry(r, c).trimmed(0.0);
  }
  return out;
}

PolynomialMatrix PolynomialMatrix::stack(const MatrixPolynomial& top, const MatrixPolynomial& bottom) {
  const int p = top.block_size();
  if (bottom.block_size() != p) throw Error(ErrorCode::kDimensionMismatch, "stack: block sizes differ");
  PolynomialMatrix out(2 * p, p);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      out(r, c) = top.entry(r, c).trimmed(0.0);
      out(p + r, c) = bottom.entry(r, c).trimmed(0.0);
    }
  }
  return out;
}

CMatrix PolynomialMatrix::eval(Complex z) const {
  CMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c)(z);
  }
  return out;
}

int PolynomialMatrix::max_degree() const {
  int d = -1;
  for (const auto& cell : cells_) d = std::max(d, cell.degree());
  return d;
}

MatrixPolynomial PolynomialMatrix::block(int row0, int col0, int size) const {
  if (row0 < 0 || col0 < 0 || row0 + size > rows_ || col0 + size > cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "PolynomialMatrix::block out of range");
  }
  int deg = 0;
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) deg = std::max(deg, (*this)(row0 + r, col0 + c).degree());
  }
  std::vector<CMatrix> asc(static_cast<std::size_t>(deg) + 1, CMatrix::Zero(size, size));
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const auto& cell = (*this)(row0 + r, col0 + c);
      for (int k = 0; k <= cell.degree(); ++k) asc[static_cast<std::size_t>(k)](r, c) = cell.coeff(k);
    }
  }
  return MatrixPolynomial::from_ascending(std::move(asc));
}

PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "PolynomialMatrix product");
  PolynomialMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < b.cols_; ++c) {
      ScalarPolynomial acc;
      for (int k = 0; k < a.cols_; ++k) acc = acc + a(r, k) * b(k, c);
      out(r, c) = tidy(acc);
    }
  }
  return out;
}

GcdResult grcd_unchecked(const MatrixPolynomial& f, const MatrixPolynomial& ft, double tol) {
  const int p = f.block_size();
  PolynomialMatrix w = PolynomialMatrix::stack(f, ft);
  PolynomialMatrix u = PolynomialMatrix::identity(2 * p);
  PolynomialMatrix v = PolynomialMatrix::identity(2 * p);
  const double input_scale = max_coefficient(w);
  bool near = false;
  if (input_scale == 0.0) return {MatrixPolynomial::zero(p), u, v, false};

  for (int r = 0; r < 2 * p; ++r) {
    for (int c = 0; c < p; ++c) w(r, c) = trim_small(w(r, c), tol * input_scale, near);
  }

  int pivot_row = 0;
  for (int col = 0; col < p && pivot_row < 2 * p; ++col) {
    for (;;) {
      int best = -1;
      for (int r = pivot_row; r < 2 * p; ++r) {
        if (w(r, col).empty()) continue;
        if (best < 0 || w(r, col).degree() < w(best, col).degree() ||
            (w(r, col).degree() == w(best, col).degree() &&
             std::abs(w(r, col).coefficients().back()) > std::abs(w(best, col).coefficients().back()))) {
          best = r;
        }
      }
      if (best < 0) break;
      if (best != pivot_row) {
        swap_rows(w, best, pivot_row);
        swap_rows(u, best, pivot_row);
        swap_cols(v, best, pivot_row);
      }
      bool clean = true;
      for (int r = pivot_row + 1; r < 2 * p; ++r) {
        if (w(r, col).empty()) continue;
        const ScalarPolynomial q = divmod(w(r, col), w(pivot_row, col)).first;
        // cancellation is judged against the operands of this row update
        double operand_scale = 0.0;
        std::vector<ScalarPolynomial> shifted;
        for (int c = 0; c < p; ++c) {
          shifted.push_back(q * w(pivot_row, c));
          operand_scale = std::max({operand_scale, w(r, c).max_abs_coefficient(), shifted.back().max_abs_coefficient()});
        }
        const double threshold = tol * operand_scale;
        for (int c = 0; c < p; ++c) {
          w(r, c) = trim_small(w(r, c) - shifted[static_cast<std::size_t>(c)], threshold, near);
        }
        for (int c = 0; c < 2 * p; ++c) u(r, c) = tidy(u(r, c) - q * u(pivot_row, c));
        for (int k = 0; k < 2 * p; ++k) v(k, pivot_row) = tidy(v(k, pivot_row) + v(k, r) * q);
        double row_scale = 0.0;
        for (int c = 0; c < p; ++c) row_scale = std::max(row_scale, w(r, c).max_abs_coefficient());
        if (row_scale > 0.0) {
          for (int c = 0; c < p; ++c) w(r, c) = Complex(1.0 / row_scale) * w(r, c);
          for (int c = 0; c < 2 * p; ++c) u(r, c) = Complex(1.0 / row_scale) * u(r, c);
          for (int k = 0; k < 2 * p; ++k) v(k, r) = Complex(row_scale) * v(k, r);
        }
        if (!w(r, col).empty()) clean = false;
      }
      if (clean) {
        ++pivot_row;
        break;
      }
    }
  }
  return {w.block(0, 0, p), std::move(u), std::move(v), near};
}

GcdResult grcd(const MatrixPolynomial& f, const MatrixPolynomial& ft, double tol) {
  auto result = grcd_unchecked(f, ft, tol);
  if (result.near_threshold) {
    std::vector<MatrixPolynomial> candidates{grcd_unchecked(f, ft, tol * 100.0).divisor,
                                             grcd_unchecked(f, ft, tol / 100.0).divisor};
    throw GcdAmbiguityError("a degree decision in the GRCD reduction is within 10x of tol", std::move(candidates));
  }
  return result;
}

MatrixPolynomial glcd(const MatrixPolynomial& f, const MatrixPolynomial& ft, double tol) {
  return adjoint_reversal(grcd(adjoint_reversal(f), adjoint_reversal(ft), tol).divisor);
}

GammaTriple count_by_imaginary_part(std::span<const Complex> zeros, double rel_tol) {
  GammaTriple out;
  for (const auto& z : zeros) {
    const double band = rel_tol * (1.0 + std::abs(z));
    if (z.imag() > band) {
      ++out.plus;
    } else if (z.imag() < -band) {
      ++out.minus;
    } else {
      ++out.zero;
    }
  }
  return out;
}

std::vector<Complex> determinant_zeros(const MatrixPolynomial& f) {
  return det_poly(f).to_scalar().roots();
}

bool same_zero_multiset(std::vector<Complex> a, std::vector<Complex> b, double rel_tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    std::size_t pick = b.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(x - b[j]) < best) {
        best = std::abs(x - b[j]);
        pick = j;
      }
    }
    if (pick == b.size() || best > rel_tol * (1.0 + std::abs(x))) return false;
    used[pick] = true;
  }
  return true;
}

HermiteFujiwaraResult hermite_fujiwara_inertia(const MatrixPolynomial& l, const std::optional<MatrixPolynomial>& l1,
                                               double tol) {
  const MatrixPolynomial partner = l1 ? *l1 : adjoint_reversal(l);
  const BezoutQuadruple q{adjoint_reversal(partner), partner, adjoint_reversal(l), l};
  {
    std::mt19937_64 rng(0xf00d);
    for (int s = 0; s < 8; ++s) {
      const Complex z = sample_point(rng);
      const CMatrix a = q.Mt(z) * q.Lt(z);
      const CMatrix b = q.M(z) * q.L(z);
      if ((a - b).norm() > 1e-8 * std::max({a.norm(), b.norm(), 1e-300})) {
        throw Error(ErrorCode::kQuadrupleIdentityViolated, "L1^v L1 != L^v L");
      }
    }
  }
  HermiteFujiwaraResult out;
  out.bezoutian = bezoutian(q);
  const CMatrix scaled = Complex(0.0, -1.0) * out.bezoutian;
  out.bezout_inertia = inertia(scaled, tol);
  const auto divisor = grcd(l, partner).divisor;
  const auto zeros = determinant_zeros(divisor);
  out.divisor_gamma = count_by_imaginary_part(zeros, 1e-6);
  out.gamma.plus = out.bezout_inertia.pi + out.divisor_gamma.plus;
  out.gamma.minus = out.bezout_inertia.nu + out.divisor_gamma.minus;
  out.gamma.zero = out.bezout_inertia.delta - out.divisor_gamma.plus - out.divisor_gamma.minus;
  return out;
}

bool unimodular_invariance_check(const MatrixPolynomial& f, const MatrixPolynomial& ft, const PolynomialMatrix& u,
                                 double tol) {
  const int p = f.block_size();
  if (u.rows() != 2 * p || u.cols() != 2 * p) {
    throw Error(ErrorCode::kDimensionMismatch, "unimodular transform must be 2p x 2p");
  }
  int bound = 0;
  for (int r = 0; r < u.rows(); ++r) {
    int row_deg = 0;
    for (int c = 0; c < u.cols(); ++c) row_deg = std::max(row_deg, u(r, c).degree());
    bound += row_deg;
  }
  Complex first{};
  double value_scale = 0.0;
  for (int k = 0; k <= bound; ++k) {
    const Complex z = std::polar(1.0, 0.3 + 2.0 * std::numbers::pi * k / (bound + 1));
    const CMatrix uz = u.eval(z);
    const Complex d = uz.determinant();
    double hadamard = 1.0;
    for (Eigen::Index r = 0; r < uz.rows(); ++r) hadamard *= std::max(uz.row(r).norm(), 1e-300);
    value_scale = std::max(value_scale, hadamard);
    if (k == 0) {
      first = d;
    } else if (std::abs(d - first) > 1e-8 * value_scale) {
      throw Error(ErrorCode::kNotUnimodular, "det U is not constant");
    }
  }
  if (std::abs(first) <= 1e-12 * value_scale) throw Error(ErrorCode::kNotUnimodular, "det U vanishes");

  const PolynomialMatrix e = u * PolynomialMatrix::stack(f, ft);
  const auto before = determinant_zeros(grcd(f, ft, tol).divisor);
  const auto after = determinant_zeros(grcd(e.block(0, 0, p), e.block(p, 0, p), tol).divisor);
  return same_zero_multiset(before, after, 1e-6);
}

}  // namespace hurwitz
