#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hurwitz/hermitian.hpp"
#include "hurwitz/matrix_polynomial.hpp"

namespace hurwitz {

/// Which Laurent expansion the blocks come from.
///  - kEven:      F_o F_e^{-1} = sum (-1)^k z^{-(k+1)} s_k            (n = 2m)
///  - kOddFirst:  F_o F_e^{-1} = s_{-1} + sum (-1)^k z^{-(k+1)} s_k   (n = 2m+1)
///  - kOddSecond: F_e F_o^{-1} = sum (-1)^k z^{-k} s_k                (n = 2m+1)
/// The left-sided variants swap the order of the factors.
enum class MarkovKind { kEven, kOddFirst, kOddSecond };
enum class Side { kLeft, kRight };

std::string_view to_string(MarkovKind kind);
std::string_view to_string(Side side);

struct MarkovSequence {
  int p = 0;
  MarkovKind kind = MarkovKind::kEven;
  Side side = Side::kRight;
  std::optional<CMatrix> s_minus1;  // present iff kind == kOddFirst
  std::vector<CMatrix> blocks;      // s_0 ... s_{K-1}
  int source_degree = 0;

  int count() const { return static_cast<int>(blocks.size()); }
  /// s_index, index -1 allowed for the first-type sequence.
  const CMatrix& at(int index) const;
};

/// Default block count: enough for every criterion and minor scan up to
/// order m + 1 without recomputation.
inline int default_block_count(int degree) { return 2 * degree + 2; }

/// Right Markov parameters of a monic even-degree F through the forced
/// recurrence (-1)^i s_i = O_i - sum_{j<i} (-1)^j s_j E_{i-j}.
/// Throws kNotMonic, kWrongParity.
MarkovSequence markov_right(const MatrixPolynomial& f, int count);

/// First type (odd degree): s_{-1} = E_0^{-1}, then
/// (-1)^i s_i E_0 = O_{i+1} - s_{-1} E_{i+1} - sum_{j<i} (-1)^j s_j E_{i-j}.
/// Throws kNotMonic, kWrongParity, kSingularLeadingEvenBlock.
MarkovSequence markov_right_first_type(const MatrixPolynomial& f, int count);

/// Second type (odd degree): (-1)^i s_i = E_i - sum_{j<i} (-1)^j s_j O_{i-j}.
/// Throws kNotMonic, kWrongParity.
MarkovSequence markov_right_second_type(const MatrixPolynomial& f, int count);

/// Left parameters: conjugate transposes of the right parameters of F^v.
MarkovSequence markov_left(const MatrixPolynomial& f, int count, MarkovKind kind);

/// Dispatches on side and kind.
MarkovSequence markov_sequence(const MatrixPolynomial& f, MarkovKind kind, Side side, int count);

/// The canonical kind for a degree: kEven or kOddSecond.
MarkovKind canonical_kind(int degree);

struct BlockHankelView {
  int j = 0;
  int k = 0;
  CMatrix matrix;  // (k+1)p x (k+1)p, block (a, b) = s_{j+a+b}
};

/// H_{j,k}. k = -1 yields the empty matrix. Throws kInsufficientBlocks.
BlockHankelView block_hankel(const MarkovSequence& s, int j, int k);

struct HermitianCheck {
  bool hermitian = true;
  std::optional<int> first_offending_index;
};

/// Checks the truncation the criteria depend on: indices 0..n-1 for kEven
/// and kOddSecond (n - 1 = 2m in the odd case), -1..2m-1 for kOddFirst.
/// Throws kInsufficientBlocks when the sequence is shorter than that.
HermitianCheck hermitian_truncation_check(const MarkovSequence& s, double tol = kDefaultLinalgTol);

/// Reconstructs the odd coefficients from the even ones and s_0..s_{m-1}
/// (right side, even kind) through the block upper-triangular Toeplitz
/// product. `even_coeffs` lists A_0, A_2, ..., A_2m. The result lists
/// A_{2m-1}, A_{2m-3}, ..., A_1. Throws kDimensionMismatch.
std::vector<CMatrix> odd_coeffs_from_markov(const MarkovSequence& s,
                                            std::span<const CMatrix> even_coeffs);

/// The plain expansion coefficients t_k = (-1)^k s_k.
std::vector<CMatrix> alternating(std::span<const CMatrix> blocks);

}  // namespace hurwitz
