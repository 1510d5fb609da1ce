#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "hurwitz/stieltjes_cf.hpp"

namespace hurwitz {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int index(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  CMatrix matrix(int p) {
    CMatrix m(p, p);
    for (int r = 0; r < p; ++r) {
      for (int c = 0; c < p; ++c) {
        const double re = uniform(-1.0, 1.0);
        m(r, c) = Complex(re, uniform(-1.0, 1.0));
      }
    }
    return m;
  }

  CMatrix unitary(int p) {
    const Eigen::HouseholderQR<CMatrix> qr(matrix(p));
    return qr.householderQ() * CMatrix::Identity(p, p);
  }

  CMatrix hermitian(const std::vector<double>& spectrum) {
    const int p = static_cast<int>(spectrum.size());
    const CMatrix u = unitary(p);
    CMatrix d = CMatrix::Zero(p, p);
    for (int i = 0; i < p; ++i) d(i, i) = spectrum[static_cast<std::size_t>(i)];
    const CMatrix h = u * d * u.adjoint();
    return 0.5 * (h + h.adjoint());
  }

  std::vector<double> spectrum(int p, double lo, double hi) {
    std::vector<double> out(static_cast<std::size_t>(p));
    for (auto& x : out) x = uniform(lo, hi);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

void check_bounds(int p, int n, const char* who) {
  if (p < 1 || p > 4 || n < 1 || n > 8) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(who) + ": need 1 <= p <= 4 and 1 <= n <= 8");
  }
}

}  // namespace

CMatrix linearize(const MatrixPolynomial& f) {
  if (!f.is_monic()) throw Error(ErrorCode::kNotMonic, "linearize needs a monic polynomial");
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::kDegreeTooLow, "linearize needs degree >= 1");
  const int p = f.block_size();
  CMatrix c = CMatrix::Zero(n * p, n * p);
  for (int k = 1; k <= n; ++k) c.block(0, (k - 1) * p, p, p) = -f.coeff(k);
  for (int k = 1; k < n; ++k) c.block(k * p, (k - 1) * p, p, p).setIdentity();
  return c;
}

std::vector<Complex> zeros(const MatrixPolynomial& f) {
  const Eigen::ComplexEigenSolver<CMatrix> solver(linearize(f), false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

OracleReport oracle_analyze(const MatrixPolynomial& f, double axis_tol) {
  OracleReport out;
  out.zeros = zeros(f);
  double radius = 0.0;
  out.max_real_part = -std::numeric_limits<double>::infinity();
  for (const auto& z : out.zeros) {
    radius = std::max(radius, std::abs(z));
    out.max_real_part = std::max(out.max_real_part, z.real());
  }
  out.band = axis_tol * (1.0 + radius);
  for (const auto& z : out.zeros) {
    if (z.real() > out.band) {
      ++out.gamma.plus;
    } else if (z.real() < -out.band) {
      ++out.gamma.minus;
    } else {
      ++out.gamma.zero;
    }
  }
  out.marginal = out.gamma.zero > 0;
  return out;
}

GammaPrimeTriple gamma_prime_oracle(const MatrixPolynomial& f, double axis_tol) {
  return oracle_analyze(f, axis_tol).gamma;
}

HurwitzOracle is_hurwitz_oracle(const MatrixPolynomial& f, double axis_tol) {
  const auto report = oracle_analyze(f, axis_tol);
  return {report.gamma.minus == report.gamma.total(), report.marginal, report.max_real_part};
}

GammaTriple gamma_real_axis(const MatrixPolynomial& f, double rel_tol) {
  const auto z = determinant_zeros(f);
  return count_by_imaginary_part(z, rel_tol);
}

double axis_clearance(const MatrixPolynomial& f) {
  const auto z = zeros(f);
  double radius = 0.0;
  double closest = std::numeric_limits<double>::infinity();
  for (const auto& x : z) {
    radius = std::max(radius, std::abs(x));
    closest = std::min(closest, std::abs(x.real()));
  }
  return closest / (1.0 + radius);
}

MatrixPolynomial generate_stable(int p, int n, std::uint64_t seed) {
  check_bounds(p, n, "generate_stable");
  Sampler rng(seed);
  const CMatrix id = CMatrix::Identity(p, p);
  MatrixPolynomial f = MatrixPolynomial::identity(p);
  for (int k = 0; k < n; ++k) {
    const CMatrix h = rng.hermitian(rng.spectrum(p, 0.5, 2.5));
    const CMatrix skew = rng.hermitian(rng.spectrum(p, -1.0, 1.0));
    const CMatrix t = id + 0.3 * rng.matrix(p) / std::sqrt(static_cast<double>(p));
    const CMatrix shift = t * (h + Complex(0.0, 1.0) * skew) * t.inverse();
    f = f * MatrixPolynomial({id, shift});
  }
  return f;
}

MatrixPolynomial generate_from_cf(int p, int n, std::uint64_t seed, ParameterSigns signs) {
  check_bounds(p, n, "generate_from_cf");
  Sampler rng(seed);
  for (;;) {
    StieltjesCF cf{p, n % 2 == 0 ? CfPattern::kEven : CfPattern::kOdd, {}};
    const int flip_level = signs == ParameterSigns::kIndefinite ? rng.index(n) : -1;
    for (int k = 0; k < n; ++k) {
      auto spectrum = rng.spectrum(p, 0.3, 2.0);
      if (k == flip_level) spectrum[static_cast<std::size_t>(rng.index(p))] *= -1.0;
      cf.params.push_back(rng.hermitian(spectrum));
    }
    auto f = cf_polynomial(cf);
    if (axis_clearance(f) >= 1e-6) return f;
  }
}

MatrixPolynomial generate_unstable_perturbation(const MatrixPolynomial& f, std::uint64_t seed) {
  Sampler rng(seed);
  const int p = f.block_size();
  double scale = 0.25 * (1.0 + f.max_coefficient_norm());
  for (;;) {
    std::vector<CMatrix> coeffs = f.coefficients();
    for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] += scale * rng.matrix(p);
    MatrixPolynomial g(std::move(coeffs));
    const auto report = oracle_analyze(g);
    if (report.gamma.plus > 0 && axis_clearance(g) >= 1e-6) return g;
    scale *= 1.25;
  }
}

}  // namespace hurwitz
