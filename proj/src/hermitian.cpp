#include "hurwitz/hermitian.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace hurwitz {

namespace {

void require_square(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, who);
}

double spectral_norm_hermitian(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  const CMatrix sym = 0.5 * (m + m.adjoint());
  return sym.selfadjointView<Eigen::Lower>().operatorNorm();
}

}  // namespace

bool is_hermitian(const CMatrix& m, double tol) {
  require_square(m, "is_hermitian");
  if (m.size() == 0) return true;
  return max_abs(m - m.adjoint()) <= tol * (1.0 + max_abs(m));
}

InertiaTriple inertia(const CMatrix& m, double tol) {
  require_square(m, "inertia");
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::kNotHermitian, "inertia needs a Hermitian matrix");
  InertiaTriple out;
  if (m.size() == 0) return out;
  const CMatrix sym = 0.5 * (m + m.adjoint());
  const Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double tau = tol * ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tau) {
      ++out.pi;
    } else if (ev(i) < -tau) {
      ++out.nu;
    } else {
      ++out.delta;
    }
  }
  return out;
}

bool is_positive_definite(const CMatrix& m, double tol) {
  require_square(m, "is_positive_definite");
  if (m.size() == 0) return true;
  if (!is_hermitian(m, tol)) return false;
  const double tau = tol * spectral_norm_hermitian(m);
  CMatrix work = 0.5 * (m + m.adjoint());
  const Eigen::Index n = work.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    double best = work(k, k).real();
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (work(i, i).real() > best) {
        best = work(i, i).real();
        pivot = i;
      }
    }
    if (!(best > tau)) return false;
    if (pivot != k) {
      work.row(k).swap(work.row(pivot));
      work.col(k).swap(work.col(pivot));
    }
    const Complex d = work(k, k);
    const Eigen::Index rest = n - k - 1;
    if (rest == 0) break;
    const CVector col = work.col(k).tail(rest);
    work.bottomRightCorner(rest, rest) -= col * col.adjoint() / d;
  }
  return true;
}

CMatrix quasideterminant(const CMatrix& m, int block_size, int block_order, double singular_tol) {
  const Eigen::Index p = block_size;
  const Eigen::Index l = block_order;
  if (l < 1 || m.rows() != l * p || m.cols() != l * p) {
    throw Error(ErrorCode::kDimensionMismatch, "quasideterminant: matrix is not lp x lp");
  }
  if (l == 1) return m;
  const Eigen::Index lead = (l - 1) * p;
  const CMatrix head = m.topLeftCorner(lead, lead);
  if (is_numerically_singular(head, singular_tol)) {
    throw Error(ErrorCode::kSingularLeadingBlock, "quasideterminant: leading principal block is singular");
  }
  const CMatrix solved = head.fullPivLu().solve(m.topRightCorner(lead, p));
  return m.bottomRightCorner(p, p) - m.bottomLeftCorner(p, lead) * solved;
}

}  // namespace hurwitz
