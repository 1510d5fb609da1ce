#include "hurwitz/markov.hpp"

#include <algorithm>

namespace hurwitz {

namespace {

constexpr double sign_of(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

void require_monic(const MatrixPolynomial& f, const char* who) {
  if (!f.is_monic()) throw Error(ErrorCode::kNotMonic, who);
}

// Descending coefficient k of a polynomial, zero past its degree.
CMatrix coeff_or_zero(const MatrixPolynomial& f, int k) {
  if (k < 0 || k > f.degree()) return CMatrix::Zero(f.block_size(), f.block_size());
  return f.coeff(k);
}

std::vector<CMatrix> signed_from_plain(std::vector<CMatrix> plain) {
  for (std::size_t k = 0; k < plain.size(); ++k) plain[k] *= sign_of(static_cast<int>(k));
  return plain;
}

}  // namespace

std::string_view to_string(MarkovKind kind) {
  switch (kind) {
    case MarkovKind::kEven: return "even";
    case MarkovKind::kOddFirst: return "odd-first";
    case MarkovKind::kOddSecond: return "odd-second";
  }
  return "?";
}

std::string_view to_string(Side side) { return side == Side::kLeft ? "left" : "right"; }

const CMatrix& MarkovSequence::at(int index) const {
  if (index == -1) {
    if (!s_minus1) throw Error(ErrorCode::kInsufficientBlocks, "sequence has no s_{-1}");
    return *s_minus1;
  }
  if (index < 0 || index >= count()) {
    throw Error(ErrorCode::kInsufficientBlocks, "Markov block index " + std::to_string(index) +
                                                    " outside 0.." + std::to_string(count() - 1));
  }
  return blocks[static_cast<std::size_t>(index)];
}

MarkovSequence markov_right(const MatrixPolynomial& f, int count) {
  require_monic(f, "markov_right");
  if (f.degree() % 2 != 0) throw Error(ErrorCode::kWrongParity, "markov_right needs even degree");
  const auto parts = even_odd_split(f);
  const int m = f.degree() / 2;
  const int p = f.block_size();
  std::vector<CMatrix> plain;
  plain.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    CMatrix t = i < m ? coeff_or_zero(parts.odd, i) : CMatrix::Zero(p, p);
    for (int j = std::max(0, i - m); j < i; ++j) t -= plain[static_cast<std::size_t>(j)] * parts.even.coeff(i - j);
    plain.push_back(std::move(t));
  }
  return {p, MarkovKind::kEven, Side::kRight, std::nullopt, signed_from_plain(std::move(plain)), f.degree()};
}

MarkovSequence markov_right_first_type(const MatrixPolynomial& f, int count) {
  require_monic(f, "markov_right_first_type");
  if (f.degree() % 2 != 1) throw Error(ErrorCode::kWrongParity, "first-type parameters need odd degree");
  const auto parts = even_odd_split(f);
  const int m = parts.even.degree();
  const CMatrix& e0 = parts.even.leading();
  if (is_numerically_singular(e0, kSingularityTol)) {
    throw Error(ErrorCode::kSingularLeadingEvenBlock, "leading block of F_e is singular");
  }
  const CMatrix e0_inv = e0.inverse();
  CMatrix s_minus1 = e0_inv;
  std::vector<CMatrix> plain;
  plain.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    CMatrix rhs = coeff_or_zero(parts.odd, i + 1) - s_minus1 * coeff_or_zero(parts.even, i + 1);
    for (int j = std::max(0, i - m); j < i; ++j) rhs -= plain[static_cast<std::size_t>(j)] * parts.even.coeff(i - j);
    plain.push_back(rhs * e0_inv);
  }
  return {f.block_size(), MarkovKind::kOddFirst, Side::kRight, std::move(s_minus1),
          signed_from_plain(std::move(plain)), f.degree()};
}

MarkovSequence markov_right_second_type(const MatrixPolynomial& f, int count) {
  require_monic(f, "markov_right_second_type");
  if (f.degree() % 2 != 1) throw Error(ErrorCode::kWrongParity, "second-type parameters need odd degree");
  const auto parts = even_odd_split(f);
  const int m = parts.odd.degree();
  std::vector<CMatrix> plain;
  plain.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    CMatrix t = coeff_or_zero(parts.even, i);
    for (int j = std::max(0, i - m); j < i; ++j) t -= plain[static_cast<std::size_t>(j)] * parts.odd.coeff(i - j);
    plain.push_back(std::move(t));
  }
  return {f.block_size(), MarkovKind::kOddSecond, Side::kRight, std::nullopt,
          signed_from_plain(std::move(plain)), f.degree()};
}

MarkovSequence markov_left(const MatrixPolynomial& f, int count, MarkovKind kind) {
  auto s = markov_sequence(adjoint_reversal(f), kind, Side::kRight, count);
  for (auto& b : s.blocks) b = b.adjoint().eval();
  if (s.s_minus1) s.s_minus1 = s.s_minus1->adjoint().eval();
  s.side = Side::kLeft;
  return s;
}

MarkovSequence markov_sequence(const MatrixPolynomial& f, MarkovKind kind, Side side, int count) {
  if (side == Side::kLeft) return markov_left(f, count, kind);
  switch (kind) {
    case MarkovKind::kEven: return markov_right(f, count);
    case MarkovKind::kOddFirst: return markov_right_first_type(f, count);
    case MarkovKind::kOddSecond: return markov_right_second_type(f, count);
  }
  throw Error(ErrorCode::kWrongParity, "unknown Markov kind");
}

MarkovKind canonical_kind(int degree) {
  return degree % 2 == 0 ? MarkovKind::kEven : MarkovKind::kOddSecond;
}

BlockHankelView block_hankel(const MarkovSequence& s, int j, int k) {
  const int p = s.p;
  if (k < 0) return {j, k, CMatrix(0, 0)};
  if (j < 0 || j + 2 * k >= s.count()) {
    throw Error(ErrorCode::kInsufficientBlocks, "H_{" + std::to_string(j) + "," + std::to_string(k) +
                                                    "} needs s_" + std::to_string(j + 2 * k));
  }
  CMatrix h((k + 1) * p, (k + 1) * p);
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) h.block(a * p, b * p, p, p) = s.blocks[static_cast<std::size_t>(j + a + b)];
  }
  return {j, k, std::move(h)};
}

HermitianCheck hermitian_truncation_check(const MarkovSequence& s, double tol) {
  const int n = s.source_degree;
  int first = 0;
  int last = n - 1;
  if (s.kind == MarkovKind::kOddFirst) {
    first = -1;
    last = n - 2;  // 2m - 1
  }
  if (last >= s.count()) {
    throw Error(ErrorCode::kInsufficientBlocks, "Hermitian truncation needs s_" + std::to_string(last));
  }
  for (int i = first; i <= last; ++i) {
    if (!is_hermitian(s.at(i), tol)) return {false, i};
  }
  return {};
}

std::vector<CMatrix> odd_coeffs_from_markov(const MarkovSequence& s, std::span<const CMatrix> even_coeffs) {
  if (s.kind != MarkovKind::kEven || s.side != Side::kRight) {
    throw Error(ErrorCode::kDimensionMismatch, "odd_coeffs_from_markov needs right even-kind parameters");
  }
  const int m = static_cast<int>(even_coeffs.size()) - 1;
  if (m < 0 || s.count() < m) throw Error(ErrorCode::kDimensionMismatch, "need s_0..s_{m-1} and A_0..A_2m");
  for (const auto& e : even_coeffs) {
    if (e.rows() != s.p || e.cols() != s.p) throw Error(ErrorCode::kDimensionMismatch, "block size mismatch");
  }
  // Row r (A_{2m-1-2r}) = sum_{c >= r} (-1)^{c-r} s_{c-r} A_{2m-2-2c}.
  std::vector<CMatrix> out;
  for (int r = 0; r < m; ++r) {
    CMatrix acc = CMatrix::Zero(s.p, s.p);
    for (int c = r; c < m; ++c) {
      acc += sign_of(c - r) * s.blocks[static_cast<std::size_t>(c - r)] *
             even_coeffs[static_cast<std::size_t>(m - 1 - c)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<CMatrix> alternating(std::span<const CMatrix> blocks) {
  return signed_from_plain({blocks.begin(), blocks.end()});
}

}  // namespace hurwitz
