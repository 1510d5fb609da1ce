#include "hurwitz/hankel_minors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/LU>

namespace hurwitz {

namespace {

void validate(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols) {
  if (rows.empty() || rows.size() != cols.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "index sets must be non-empty and of equal size");
  }
  for (const auto* set : {&rows, &cols}) {
    if (set->front() < 0) throw Error(ErrorCode::kDimensionMismatch, "negative block index");
    for (std::size_t i = 1; i < set->size(); ++i) {
      if ((*set)[i] <= (*set)[i - 1]) throw Error(ErrorCode::kDimensionMismatch, "index set not increasing");
    }
  }
  if (rows.back() + cols.back() >= s.count()) {
    throw Error(ErrorCode::kInsufficientBlocks, "minor needs s_" + std::to_string(rows.back() + cols.back()));
  }
}

bool contiguous(const IndexSet& set) { return set.back() - set.front() + 1 == static_cast<int>(set.size()); }

IndexSet range_set(int start, int size) {
  IndexSet out(static_cast<std::size_t>(size));
  std::iota(out.begin(), out.end(), start);
  return out;
}

// Calls visit(set) for every increasing subset of {0..top} of the given size.
template <class Visit>
void for_each_subset(int top, int size, Visit&& visit) {
  if (size > top + 1) return;
  IndexSet set = range_set(0, size);
  for (;;) {
    visit(set);
    int i = size - 1;
    while (i >= 0 && set[static_cast<std::size_t>(i)] == top - (size - 1 - i)) --i;
    if (i < 0) return;
    ++set[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
  }
}

int default_window(const MarkovSequence& s, int window) { return window >= 0 ? window : (s.count() - 1) / 2; }

}  // namespace

CMatrix hankel_submatrix(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols) {
  validate(s, rows, cols);
  const int p = s.p;
  const int l = static_cast<int>(rows.size());
  CMatrix out(l * p, l * p);
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      out.block(a * p, b * p, p, p) = s.blocks[static_cast<std::size_t>(rows[a] + cols[b])];
    }
  }
  return out;
}

Complex hankel_minor(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols) {
  return hankel_submatrix(s, rows, cols).fullPivLu().determinant();
}

CMatrix hankel_quasiminor(const MarkovSequence& s, const IndexSet& rows, const IndexSet& cols,
                          double singular_tol) {
  return quasideterminant(hankel_submatrix(s, rows, cols), s.p, static_cast<int>(rows.size()), singular_tol);
}

double hadamard_bound(const CMatrix& m) {
  double out = 1.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) out *= m.row(r).norm();
  return out;
}

double minor_scale(const CMatrix& m) {
  // |det| times sum |m_ij (m^-1)_ji|, the first-order change of det under
  // relative perturbations of the entries
  const Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible()) return hadamard_bound(m);
  const CMatrix inv = lu.inverse();
  const double sensitivity = m.cwiseAbs().cwiseProduct(inv.transpose().cwiseAbs()).sum();
  return std::abs(lu.determinant()) * sensitivity;
}

std::string_view to_string(MinorClass c) {
  switch (c) {
    case MinorClass::kPositiveReal: return "positive_real";
    case MinorClass::kNegativeReal: return "negative_real";
    case MinorClass::kNearZero: return "near_zero";
    case MinorClass::kComplex: return "complex";
  }
  return "?";
}

MinorClass classify_minor(Complex value, double scale, double tol) {
  if (std::abs(value) <= tol * scale) return MinorClass::kNearZero;
  if (std::abs(value.imag()) >= std::max(1e-8 * std::abs(value), tol * scale)) return MinorClass::kComplex;
  return value.real() > 0.0 ? MinorClass::kPositiveReal : MinorClass::kNegativeReal;
}

MarkovSequence minors_sequence(const MatrixPolynomial& f, Side side, int blocks) {
  const MarkovKind kind = f.degree() % 2 == 0 ? MarkovKind::kEven : MarkovKind::kOddFirst;
  return markov_sequence(f, kind, side, blocks);
}

QuasiminorSuiteReport contiguous_quasiminor_suite(const MatrixPolynomial& f, Side side, int window,
                                                  double tol) {
  if (!f.is_monic()) throw Error(ErrorCode::kNotMonic, "contiguous_quasiminor_suite");
  if (f.degree() < 1) throw Error(ErrorCode::kDegreeTooLow, "contiguous_quasiminor_suite");
  QuasiminorSuiteReport out;
  out.m = f.degree() / 2;
  out.window = window >= 0 ? window : 2 * out.m;
  const auto s = minors_sequence(f, side, 2 * out.window + 2 * out.m + 1);
  const auto herm = hermitian_truncation_check(s, tol);
  if (!herm.hermitian) {
    throw Error(ErrorCode::kNonHermitianSequence,
                "s_" + std::to_string(*herm.first_offending_index) + " is not Hermitian");
  }
  if (s.s_minus1) {
    out.s_minus1_positive_definite = is_positive_definite(*s.s_minus1, tol);
    out.all_positive_definite = *out.s_minus1_positive_definite;
  }
  for (int l = 1; l <= out.m; ++l) {
    for (int j = 0; j <= out.window; ++j) {
      for (int k = 0; k <= out.window; ++k) {
        QuasiminorRecord rec{l, j, k, std::nullopt, false};
        try {
          rec.value = hankel_quasiminor(s, range_set(j, l), range_set(k, l));
          rec.positive_definite = is_positive_definite(*rec.value, tol);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kSingularLeadingBlock) throw;
        }
        if (!rec.positive_definite) {
          if (!out.first_failure) out.first_failure = rec;
          out.all_positive_definite = false;
        }
        out.records.push_back(std::move(rec));
      }
    }
  }
  return out;
}

VanishingReport vanishing_check(const MarkovSequence& s, int m, int budget, int window, std::uint64_t seed) {
  const int top = std::min(default_window(s, window), (s.count() - 1) / 2);
  VanishingReport out;
  auto record = [&](const IndexSet& rows, const IndexSet& cols) {
    const CMatrix sub = hankel_submatrix(s, rows, cols);
    const double value = std::abs(sub.fullPivLu().determinant());
    const double scale = hadamard_bound(sub);
    out.max_abs_minor = std::max(out.max_abs_minor, value);
    out.max_relative_minor = std::max(out.max_relative_minor, scale > 0.0 ? value / scale : 0.0);
    ++out.evaluated;
  };
  std::mt19937_64 rng(seed);
  auto random_set = [&](int size) {
    IndexSet pool = range_set(0, top + 1);
    for (int i = 0; i < size; ++i) {
      const auto pick = i + static_cast<int>(rng() % static_cast<std::uint64_t>(top + 1 - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick)]);
    }
    pool.resize(static_cast<std::size_t>(size));
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  for (int l = m + 1; l <= m + 2; ++l) {
    if (l > top + 1) break;
    for (int j = 0; j + l - 1 <= top; ++j) {
      for (int k = 0; k + l - 1 <= top; ++k) record(range_set(j, l), range_set(k, l));
    }
    for (int b = 0; b < budget; ++b) record(random_set(l), random_set(l));
  }
  return out;
}

std::vector<MinorRecord> scan_noncontiguous(const MarkovSequence& s, int max_order, int window) {
  const int top = std::min(default_window(s, window), (s.count() - 1) / 2);
  std::vector<MinorRecord> out;
  for (int l = 2; l <= max_order; ++l) {
    std::vector<IndexSet> sets;
    for_each_subset(top, l, [&](const IndexSet& set) { sets.push_back(set); });
    for (const auto& rows : sets) {
      for (const auto& cols : sets) {
        if (contiguous(rows) && contiguous(cols)) continue;
        const CMatrix sub = hankel_submatrix(s, rows, cols);
        const Complex value = sub.fullPivLu().determinant();
        const double scale = minor_scale(sub);
        const MinorClass cls = classify_minor(value, scale);
        if (cls != MinorClass::kPositiveReal) out.push_back({rows, cols, value, scale, cls});
      }
    }
  }
  return out;
}

}  // namespace hurwitz
