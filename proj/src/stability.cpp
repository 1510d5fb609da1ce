#include "hurwitz/stability.hpp"

#include <chrono>

namespace hurwitz {

namespace {

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void require_criterion_input(const MatrixPolynomial& f, const char* who) {
  if (!f.is_monic()) throw Error(ErrorCode::kNotMonic, who);
  if (f.degree() < 1) throw Error(ErrorCode::kDegreeTooLow, who);
}

std::string hankel_name(int j, int k) {
  return "H_{" + std::to_string(j) + "," + std::to_string(k) + "}";
}

Certificate pd_certificate(std::string name, const CMatrix& m, double tol) {
  return {std::move(name), m, is_positive_definite(m, tol), std::nullopt};
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kStable: return "stable";
    case Verdict::kUnstable: return "unstable";
    case Verdict::kInapplicable: return "inapplicable";
  }
  return "?";
}

StieltjesResult stieltjes_positive_definite(const MarkovSequence& s, int l, double tol) {
  if (l >= s.count()) {
    throw Error(ErrorCode::kInsufficientBlocks, "Stieltjes test needs s_0..s_" + std::to_string(l));
  }
  for (int i = 0; i <= l; ++i) {
    if (!is_hermitian(s.blocks[static_cast<std::size_t>(i)], tol)) {
      throw Error(ErrorCode::kNonHermitianSequence, "s_" + std::to_string(i) + " is not Hermitian");
    }
  }
  const int k0 = floor_half(l);
  const int k1 = floor_half(l - 1);
  StieltjesResult out;
  out.certificates.push_back(pd_certificate(hankel_name(0, k0), block_hankel(s, 0, k0).matrix, tol));
  out.certificates.push_back(pd_certificate(hankel_name(1, k1), block_hankel(s, 1, k1).matrix, tol));
  out.positive_definite = *out.certificates[0].positive_definite && *out.certificates[1].positive_definite;
  return out;
}

CriterionVerdict hurwitz_via_markov(const MatrixPolynomial& f, Side side, double tol) {
  const auto start = std::chrono::steady_clock::now();
  require_criterion_input(f, "hurwitz_via_markov");
  CriterionVerdict out;
  out.id = side == Side::kRight ? "markov_right" : "markov_left";
  auto finish = [&]() {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  };
  auto inapplicable = [&](const MarkovSequence& s, const HermitianCheck& h) {
    out.verdict = Verdict::kInapplicable;
    out.cause = "non_hermitian_truncation";
    out.reason = std::string(to_string(s.kind)) + " Markov parameter s_" +
                 std::to_string(*h.first_offending_index) + " is not Hermitian";
    return finish();
  };

  const int n = f.degree();
  const int m = n / 2;
  if (n % 2 == 0) {
    const auto s = markov_sequence(f, MarkovKind::kEven, side, n);
    const auto herm = hermitian_truncation_check(s, tol);
    if (!herm.hermitian) return inapplicable(s, herm);
    auto st = stieltjes_positive_definite(s, n - 1, tol);
    out.certificates = std::move(st.certificates);
    out.verdict = st.positive_definite ? Verdict::kStable : Verdict::kUnstable;
    out.reason = st.positive_definite ? "Stieltjes positive definite" : "a block Hankel matrix is not positive definite";
    return finish();
  }

  const auto s2 = markov_sequence(f, MarkovKind::kOddSecond, side, n);
  const auto herm2 = hermitian_truncation_check(s2, tol);
  if (!herm2.hermitian) return inapplicable(s2, herm2);
  auto st2 = stieltjes_positive_definite(s2, 2 * m, tol);
  out.certificates = std::move(st2.certificates);
  out.verdict = st2.positive_definite ? Verdict::kStable : Verdict::kUnstable;
  out.reason = st2.positive_definite ? "second-type parameters are Stieltjes positive definite"
                                     : "a second-type block Hankel matrix is not positive definite";

  try {
    const auto s1 = markov_sequence(f, MarkovKind::kOddFirst, side, n - 1);
    const auto herm1 = hermitian_truncation_check(s1, tol);
    if (!herm1.hermitian) {
      out.reason += "; first-type cross-check skipped (s_" + std::to_string(*herm1.first_offending_index) +
                    " not Hermitian)";
      return finish();
    }
    auto st1 = stieltjes_positive_definite(s1, 2 * m - 1, tol);
    const bool tail_pd = is_positive_definite(*s1.s_minus1, tol);
    for (auto& c : st1.certificates) {
      c.name = "first_type " + c.name;
      out.certificates.push_back(std::move(c));
    }
    out.certificates.push_back({"first_type s_{-1}", *s1.s_minus1, tail_pd, std::nullopt});
    const bool first_stable = tail_pd && st1.positive_definite;
    if (first_stable != st2.positive_definite) {
      out.verdict = Verdict::kInapplicable;
      out.cause = "first_second_type_disagreement";
      out.reason = "first-type and second-type forms disagree";
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularLeadingEvenBlock) throw;
    out.reason += "; first-type cross-check skipped (leading block of F_e singular)";
  }
  return finish();
}

GammaPrimeBreakdown gamma_prime_via_hankel(const MatrixPolynomial& f, Side side, double tol) {
  require_criterion_input(f, "gamma_prime_via_hankel");
  const int n = f.degree();
  const int m = n / 2;
  const auto s = markov_sequence(f, canonical_kind(n), side, n);
  const auto herm = hermitian_truncation_check(s, tol);
  if (!herm.hermitian) {
    throw Error(ErrorCode::kNonHermitianSequence,
                "s_" + std::to_string(*herm.first_offending_index) + " is not Hermitian");
  }
  GammaPrimeBreakdown out;
  out.first = inertia(block_hankel(s, 0, n % 2 == 0 ? m - 1 : m).matrix, tol);
  out.second = inertia(block_hankel(s, 1, m - 1).matrix, tol);
  out.gamma.minus = out.first.pi + out.second.pi;
  out.gamma.plus = out.first.nu + out.second.nu;
  out.gamma.zero = out.first.delta + out.second.delta;
  if (out.gamma.zero == 0) return out;

  const auto parts = even_odd_split(f);
  const auto reflected_even = substitute_monomial(parts.even, -1.0, 2);
  const auto reflected_odd = shift_up(substitute_monomial(parts.odd, -1.0, 2), 1);
  out.divisor = side == Side::kRight ? grcd(reflected_even, reflected_odd).divisor
                                     : glcd(reflected_even, reflected_odd);
  out.divisor_computed = true;
  out.divisor_gamma = gamma_real_axis(*out.divisor);
  out.gamma.minus += out.divisor_gamma.plus;
  out.gamma.plus += out.divisor_gamma.minus;
  out.gamma.zero -= out.divisor_gamma.plus + out.divisor_gamma.minus;
  return out;
}

}  // namespace hurwitz
