#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/bezout.hpp"
#include "hurwitz/matrix_polynomial.hpp"

namespace hurwitz {

/// Zero counts with respect to the imaginary axis: open right half-plane,
/// open left half-plane, on the axis.
struct GammaPrimeTriple {
  int plus = 0;
  int minus = 0;
  int zero = 0;

  int total() const { return plus + minus + zero; }
  friend bool operator==(const GammaPrimeTriple&, const GammaPrimeTriple&) = default;
};

inline constexpr double kDefaultAxisTol = 1e-8;

/// Monic block companion: first block row [-A_1 ... -A_n], identities on
/// the block subdiagonal. Throws kNotMonic, kDegreeTooLow.
CMatrix linearize(const MatrixPolynomial& f);

/// Zeros of det F with multiplicity (companion eigenvalues).
std::vector<Complex> zeros(const MatrixPolynomial& f);

struct OracleReport {
  std::vector<Complex> zeros;
  GammaPrimeTriple gamma;
  double band = 0.0;          // |Re z| <= band counts as on the axis
  double max_real_part = 0.0;  // spectral abscissa
  bool marginal = false;      // some zero fell inside the band
};

/// band = axis_tol * (1 + max |z|).
OracleReport oracle_analyze(const MatrixPolynomial& f, double axis_tol = kDefaultAxisTol);

GammaPrimeTriple gamma_prime_oracle(const MatrixPolynomial& f, double axis_tol = kDefaultAxisTol);

struct HurwitzOracle {
  bool hurwitz = false;
  bool marginal = false;
  double max_real_part = 0.0;
};

/// hurwitz iff every zero lies left of -band; `marginal` flags zeros in the band.
HurwitzOracle is_hurwitz_oracle(const MatrixPolynomial& f, double axis_tol = kDefaultAxisTol);

/// Zero counts of any regular F with respect to the real axis, via det_poly
/// and scalar root finding. Zeros with |Im z| <= rel_tol (1 + |z|) count as
/// real.
GammaTriple gamma_real_axis(const MatrixPolynomial& f, double rel_tol = 1e-6);

/// Smallest |Re z| over the zeros relative to (1 + max |z|); used to keep
/// generated instances away from the axis.
double axis_clearance(const MatrixPolynomial& f);

// Instance generators. All randomness comes from std::mt19937_64 seeded
// with `seed`; uniforms are formed from the top 53 bits so the streams are
// identical on every platform.

/// prod_k (z I + T_k (H_k + i K_k) T_k^{-1}) with H_k Hermitian, spectrum
/// in [0.5, 2.5], K_k Hermitian with spectrum in [-1, 1] and T_k = I + 0.3 R
/// for a random complex R. Every zero has real part <= -0.5.
/// Bounds: 1 <= p <= 4, 1 <= n <= 8.
MatrixPolynomial generate_stable(int p, int n, std::uint64_t seed);

enum class ParameterSigns { kPositiveDefinite, kIndefinite };

/// Samples Hermitian c_1..c_n as U diag(lambda) U^* with lambda in
/// [0.3, 2] (kIndefinite flips one eigenvalue of one random c_k) and
/// synthesises the monic F through the Stieltjes continued fraction.
/// Instances whose zeros come within 1e-6 (1 + max |z|) of the imaginary
/// axis are redrawn. Bounds: 1 <= p <= 4, 1 <= n <= 8.
MatrixPolynomial generate_from_cf(int p, int n, std::uint64_t seed,
                                  ParameterSigns signs = ParameterSigns::kPositiveDefinite);

/// F + scale * E for a random complex E in each non-leading coefficient,
/// redrawn until F has a zero in the open right half-plane that is at least
/// 1e-6 (1 + max |z|) away from the axis.
MatrixPolynomial generate_unstable_perturbation(const MatrixPolynomial& f, std::uint64_t seed);

}  // namespace hurwitz
