#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/markov.hpp"

namespace hurwitz {

/// Strictly increasing block indices.
using IndexSet = std::vector<int>;

/// lp x lp submatrix of the infinite block Hankel matrix, block (a, b) =
/// s_{rows[a] + cols[b]}. Throws kDimensionMismatch, kInsufficientBlocks.
CMatrix hankel_submatrix(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols);

/// Determinant of hankel_submatrix.
Complex hankel_minor(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols);

/// Quasideterminant (index (l, l)) of hankel_submatrix.
/// Throws kSingularLeadingBlock.
CMatrix hankel_quasiminor(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols,
                          double singular_tol = kSingularityTol);

/// Product of the row norms, an upper bound for |det|.
double hadamard_bound(const CMatrix& m);

/// |det m| times its componentwise sensitivity sum |m_ij (m^-1)_ji|. A minor is
/// near zero against this scale when relative entry noise can cancel it.
double minor_scale(const CMatrix& m);

inline constexpr double kMinorClassTol = 1e-13;
inline constexpr double kVanishingTol = 1e-6;

enum class MinorClass { kPositiveReal, kNegativeReal, kNearZero, kComplex };

std::string_view to_string(MinorClass c);

/// near zero: |v| <= tol * scale; complex: |Im| >= max(1e-8 * |v|, tol * scale);
/// otherwise the sign of Re decides. The default tol sits a few hundred ulps
/// above roundoff.
MinorClass classify_minor(Complex value, double scale, double tol = kMinorClassTol);

/// The sequence the minor statements refer to: even kind for n = 2m, first
/// type for n = 2m + 1, with 2 * window + extra + 1 blocks.
MarkovSequence minors_sequence(const MatrixPolynomial& f, Side side, int blocks);

struct QuasiminorRecord {
  int order = 0;
  int row_offset = 0;
  int col_offset = 0;
  std::optional<CMatrix> value;  // empty when the leading block is singular
  bool positive_definite = false;
};

struct QuasiminorSuiteReport {
  int m = 0;
  int window = 0;
  std::vector<QuasiminorRecord> records;
  std::optional<bool> s_minus1_positive_definite;  // odd degree only
  bool all_positive_definite = true;
  std::optional<QuasiminorRecord> first_failure;
};

/// Every contiguous quasiminor of order 1..m with row and column offsets in
/// 0..window (default 2m), in (order, row offset, column offset) order.
/// Throws kNotMonic, kDegreeTooLow, kNonHermitianSequence.
QuasiminorSuiteReport contiguous_quasiminor_suite(const MatrixPolynomial& f, Side side = Side::kRight,
                                                  int window = -1, double tol = kDefaultLinalgTol);

struct VanishingReport {
  double max_abs_minor = 0.0;
  double max_relative_minor = 0.0;  // |minor| / hadamard bound
  int evaluated = 0;
};

/// Minors of order m + 1 and m + 2: every contiguous one inside the window
/// plus `budget` random index sets per order. Indices range over
/// 0..window with window = (count - 1) / 2 by default.
VanishingReport vanishing_check(const MarkovSequence& s, int m, int budget = 50, int window = -1,
                                std::uint64_t seed = 0x7a11);

struct MinorRecord {
  IndexSet rows;
  IndexSet cols;
  Complex value;
  double scale = 0.0;
  MinorClass cls = MinorClass::kPositiveReal;
};

/// Non-contiguous minors of order 2..max_order with indices in 0..window
/// (default (count - 1) / 2) that are not positive real, in lexicographic
/// (order, rows, cols) order.
std::vector<MinorRecord> scan_noncontiguous(const MarkovSequence& s, int max_order, int window = -1);

}  // namespace hurwitz
