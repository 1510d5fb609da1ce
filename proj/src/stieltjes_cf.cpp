#include "hurwitz/stieltjes_cf.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

namespace hurwitz {

namespace {

// Level k (1-based) multiplies its parameter by z.
bool z_level(CfPattern pattern, int k) {
  return pattern == CfPattern::kEven ? k % 2 == 1 : k % 2 == 0;
}

void require_criterion_input(const MatrixPolynomial& f, const char* who) {
  if (!f.is_monic()) throw Error(ErrorCode::kNotMonic, who);
  if (f.degree() < 1) throw Error(ErrorCode::kDegreeTooLow, who);
}

}  // namespace

std::string_view to_string(CfPattern pattern) {
  switch (pattern) {
    case CfPattern::kEven: return "even";
    case CfPattern::kOdd: return "odd";
    case CfPattern::kOddC: return "odd_c";
  }
  return "?";
}

StieltjesCF cf_expand(const MatrixPolynomial& f) {
  require_criterion_input(f, "cf_expand");
  const int n = f.degree();
  const int p = f.block_size();
  const auto parts = even_odd_split(f);
  const CfPattern pattern = n % 2 == 0 ? CfPattern::kEven : CfPattern::kOdd;

  MatrixPolynomial prev = pattern == CfPattern::kEven ? parts.even : parts.odd;
  MatrixPolynomial cur = pattern == CfPattern::kEven ? parts.odd : parts.even;
  int prev_deg = prev.degree();
  int cur_deg = cur.degree();

  StieltjesCF out{p, pattern, {}};
  for (int k = 1; k <= n; ++k) {
    const CMatrix lead_prev = prev.ascending(prev_deg);
    const CMatrix lead_cur = cur.ascending(cur_deg);
    if (cur_deg < 0 || is_numerically_singular(lead_cur, kSingularityTol, cur.max_coefficient_norm())) {
      throw Error(ErrorCode::kExpansionBreakdown,
                  "leading block at level " + std::to_string(k) + " is singular");
    }
    const CMatrix c = lead_prev * lead_cur.inverse();
    out.params.push_back(c);
    if (k == n) break;
    const bool weighted = z_level(pattern, k);
    MatrixPolynomial next = weighted ? prev - shift_up(c * cur, 1) : prev - c * cur;
    const int next_deg = weighted ? cur_deg : cur_deg - 1;
    prev = std::move(cur);
    prev_deg = cur_deg;
    cur = std::move(next);
    cur_deg = next_deg;
  }
  return out;
}

EvenOddPair cf_synthesize(const StieltjesCF& cf) {
  const int n = static_cast<int>(cf.params.size());
  const int p = cf.p;
  if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "cf_synthesize needs at least one parameter");
  for (const auto& c : cf.params) {
    if (c.rows() != p || c.cols() != p) throw Error(ErrorCode::kDimensionMismatch, "parameter is not p x p");
  }
  if (is_numerically_singular(cf.params.back(), kSingularityTol)) {
    throw Error(ErrorCode::kSingularTailParameter, "c_n is singular");
  }
  MatrixPolynomial next = MatrixPolynomial::zero(p);
  MatrixPolynomial cur = MatrixPolynomial::identity(p);
  for (int k = n; k >= 1; --k) {
    const CMatrix& c = cf.params[static_cast<std::size_t>(k - 1)];
    MatrixPolynomial prev = (z_level(cf.pattern, k) ? shift_up(c * cur, 1) : c * cur) + next;
    next = std::move(cur);
    cur = std::move(prev);
  }
  // cur = P_0, next = P_1.
  const int m = n / 2;
  if (cur.degree() != m || is_numerically_singular(cur.leading(), kSingularityTol, cur.max_coefficient_norm())) {
    throw Error(ErrorCode::kSingularLeadingBlock, "fraction does not determine a monic polynomial");
  }
  const CMatrix g = cur.leading().inverse();
  std::vector<CMatrix> top = (cur * g).coefficients();
  top.front() = CMatrix::Identity(p, p);
  MatrixPolynomial monic_part(std::move(top));
  MatrixPolynomial other = next * g;
  if (cf.pattern == CfPattern::kEven) return {std::move(monic_part), std::move(other), Parity::kEven};
  return {std::move(other), std::move(monic_part), Parity::kOdd};
}

MatrixPolynomial cf_polynomial(const StieltjesCF& cf) {
  auto f = compose_even_odd(cf_synthesize(cf));
  std::vector<CMatrix> coeffs = f.coefficients();
  coeffs.front() = CMatrix::Identity(cf.p, cf.p);
  return MatrixPolynomial(std::move(coeffs));
}

double quotient_mismatch(const EvenOddPair& a, const EvenOddPair& b, int samples) {
  std::mt19937_64 rng(0xcf);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex z = std::polar(10.0 + 10.0 * uniform(), 2.0 * std::numbers::pi * uniform());
    const CMatrix qa = a.odd(z) * a.even(z).inverse();
    const CMatrix qb = b.odd(z) * b.even(z).inverse();
    const double scale = std::max({qa.norm(), qb.norm(), 1e-300});
    worst = std::max(worst, (qa - qb).norm() / scale);
  }
  return worst;
}

CriterionVerdict hurwitz_via_cf(const MatrixPolynomial& f, double tol) {
  const auto start = std::chrono::steady_clock::now();
  require_criterion_input(f, "hurwitz_via_cf");
  CriterionVerdict out;
  out.id = "continued_fraction";
  auto finish = [&]() {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  };

  const int n = f.degree();
  const auto s = markov_sequence(f, canonical_kind(n), Side::kRight, n);
  const auto herm = hermitian_truncation_check(s, tol);
  if (!herm.hermitian) {
    out.verdict = Verdict::kInapplicable;
    out.cause = "non_hermitian_truncation";
    out.reason = "Markov parameter s_" + std::to_string(*herm.first_offending_index) + " is not Hermitian";
    return finish();
  }
  StieltjesCF cf;
  try {
    cf = cf_expand(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExpansionBreakdown) throw;
    out.verdict = Verdict::kUnstable;
    out.reason = std::string("no Stieltjes continued fraction: ") + e.what();
    return finish();
  }
  bool all_pd = true;
  int first_bad = 0;
  for (std::size_t k = 0; k < cf.params.size(); ++k) {
    const bool pd = is_positive_definite(cf.params[k], tol);
    if (!pd && all_pd) first_bad = static_cast<int>(k) + 1;
    all_pd = all_pd && pd;
    out.certificates.push_back({"c_" + std::to_string(k + 1), cf.params[k], pd, std::nullopt});
  }
  out.verdict = all_pd ? Verdict::kStable : Verdict::kUnstable;
  out.reason = all_pd ? "every c_k is Hermitian positive definite"
                      : "c_" + std::to_string(first_bad) + " is not Hermitian positive definite";
  return finish();
}

}  // namespace hurwitz
