#pragma once

#include "hurwitz/common.hpp"

namespace hurwitz {

inline constexpr double kDefaultLinalgTol = 1e-9;
/// Relative singular-value threshold for "leading block is invertible".
inline constexpr double kSingularityTol = 1e-10;

/// Eigenvalue sign counts of a Hermitian matrix.
struct InertiaTriple {
  int pi = 0;     // positive
  int nu = 0;     // negative
  int delta = 0;  // zero within threshold

  int dimension() const { return pi + nu + delta; }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

/// ||M - M*||_max <= tol (1 + ||M||_max). Throws kNotSquare.
bool is_hermitian(const CMatrix& m, double tol = kDefaultLinalgTol);

/// Counts eigenvalues above tau, below -tau and in [-tau, tau], with
/// tau = tol * ||M||_2. Throws kNotSquare, kNotHermitian.
InertiaTriple inertia(const CMatrix& m, double tol = kDefaultLinalgTol);

/// Hermitian with inertia (dim, 0, 0), decided by a diagonally pivoted
/// LDL* factorisation whose pivots must exceed tol * ||M||_2. The empty
/// matrix counts as positive definite. Throws kNotSquare.
bool is_positive_definite(const CMatrix& m, double tol = kDefaultLinalgTol);

/// Quasideterminant with index (l, l) of an lp x lp block matrix, i.e. the
/// Schur complement of the leading (l-1)p principal block:
///   M_ll - [M_l1 ... M_l,l-1] M_(l;l)^{-1} [M_1l; ...; M_l-1,l].
/// For l = 1 this is M itself. Throws kDimensionMismatch and
/// kSingularLeadingBlock.
CMatrix quasideterminant(const CMatrix& m, int block_size, int block_order,
                         double singular_tol = kSingularityTol);

}  // namespace hurwitz
