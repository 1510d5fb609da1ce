#include "hurwitz/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hurwitz/hankel_minors.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/stieltjes_cf.hpp"

namespace hurwitz::cli {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

// [digits][.digits][/digits]; returns false when nothing numeric was read.
bool read_magnitude(std::string_view text, std::size_t& pos, double& out) {
  const std::size_t start = pos;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
  if (pos == start) return false;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc() || end != text.data() + pos) throw std::invalid_argument("bad number");
  if (pos < text.size() && text[pos] == '/') {
    const std::size_t dstart = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) throw std::invalid_argument("missing denominator");
    long long denominator = 0;
    const auto res = std::from_chars(text.data() + dstart, text.data() + pos, denominator);
    if (res.ec != std::errc()) throw std::invalid_argument("bad denominator");
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    value /= static_cast<double>(denominator);
  }
  out = value;
  return true;
}

json certificate_to_json(const Certificate& c) {
  json out{{"name", c.name}, {"matrix", matrix_to_json(c.matrix)}};
  if (c.positive_definite) out["positive_definite"] = *c.positive_definite;
  if (c.inertia) out["inertia"] = {c.inertia->pi, c.inertia->nu, c.inertia->delta};
  return out;
}

json verdict_to_json(const CriterionVerdict& v) {
  json certs = json::array();
  for (const auto& c : v.certificates) certs.push_back(certificate_to_json(c));
  json out{{"id", v.id},
           {"verdict", std::string(to_string(v.verdict))},
           {"reason", v.reason},
           {"certificates", std::move(certs)},
           {"timings", {{"seconds", v.seconds}}}};
  if (!v.cause.empty()) out["cause"] = v.cause;
  return out;
}

json gamma_to_json(const GammaPrimeTriple& g) { return {{"plus", g.plus}, {"minus", g.minus}, {"zero", g.zero}}; }

json oracle_to_json(const MatrixPolynomial& f, double axis_tol) {
  const auto report = oracle_analyze(f, axis_tol);
  json zs = json::array();
  for (const auto& z : report.zeros) zs.push_back(complex_to_json(z));
  return {{"zeros", std::move(zs)},
          {"gamma_prime", gamma_to_json(report.gamma)},
          {"hurwitz", report.gamma.minus == report.gamma.total()},
          {"marginal", report.marginal},
          {"band", report.band},
          {"max_real_part", report.max_real_part}};
}

json error_to_json(const Error& e) { return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CriterionVerdict inapplicable(std::string id, std::string cause, std::string reason, Clock::time_point start) {
  CriterionVerdict v;
  v.id = std::move(id);
  v.verdict = Verdict::kInapplicable;
  v.cause = std::move(cause);
  v.reason = std::move(reason);
  v.seconds = seconds_since(start);
  return v;
}

struct GammaCriterion {
  CriterionVerdict verdict;
  std::optional<GammaPrimeBreakdown> breakdown;
};

GammaCriterion gamma_criterion(const MatrixPolynomial& f, double tol) {
  const auto start = Clock::now();
  const std::string id = "hankel_inertia";
  try {
    auto b = gamma_prime_via_hankel(f, Side::kRight, tol);
    CriterionVerdict v;
    v.id = id;
    const int np = f.degree() * f.block_size();
    v.verdict = b.gamma.minus == np ? Verdict::kStable : Verdict::kUnstable;
    std::ostringstream reason;
    reason << "zero counts (right, left, axis) = (" << b.gamma.plus << ", " << b.gamma.minus << ", " << b.gamma.zero
           << ")";
    if (b.divisor_computed) reason << " including the common divisor correction";
    v.reason = reason.str();
    v.certificates.push_back({"first Hankel inertia", CMatrix(0, 0), std::nullopt, b.first});
    v.certificates.push_back({"second Hankel inertia", CMatrix(0, 0), std::nullopt, b.second});
    v.seconds = seconds_since(start);
    return {std::move(v), std::move(b)};
  } catch (const GcdAmbiguityError& e) {
    return {inapplicable(id, "gcd_tolerance_ambiguity", e.what(), start), std::nullopt};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonHermitianSequence) throw;
    return {inapplicable(id, "non_hermitian_truncation", e.what(), start), std::nullopt};
  }
}

CriterionVerdict minors_criterion(const MatrixPolynomial& f, double tol) {
  const auto start = Clock::now();
  const std::string id = "hankel_minors";
  try {
    // Offsets j, k <= 1 cover H_{0,l-1}, H_{1,l-1}, H_{2,l-1}; larger offsets
    // follow from the shift identity and are badly conditioned numerically.
    const auto suite = contiguous_quasiminor_suite(f, Side::kRight, 1, tol);
    const int m = suite.m;
    const auto s = minors_sequence(f, Side::kRight, 4 * m + 5);
    const auto vanish = vanishing_check(s, m, 20);
    CriterionVerdict v;
    v.id = id;
    const bool vanishes = vanish.max_relative_minor <= kVanishingTol;
    v.verdict = suite.all_positive_definite && vanishes ? Verdict::kStable : Verdict::kUnstable;
    std::ostringstream reason;
    reason << suite.records.size() << " contiguous quasiminors, ";
    if (suite.first_failure) {
      reason << "first non-positive-definite at order " << suite.first_failure->order << " offsets ("
             << suite.first_failure->row_offset << ", " << suite.first_failure->col_offset << ")";
    } else {
      reason << "all positive definite";
    }
    if (suite.s_minus1_positive_definite) {
      reason << "; s_{-1} " << (*suite.s_minus1_positive_definite ? "positive definite" : "not positive definite");
    }
    reason << "; largest relative minor of order > m: " << vanish.max_relative_minor;
    v.reason = reason.str();
    v.seconds = seconds_since(start);
    return v;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNonHermitianSequence) {
      return inapplicable(id, "non_hermitian_truncation", e.what(), start);
    }
    if (e.code() == ErrorCode::kSingularLeadingEvenBlock) {
      return inapplicable(id, "singular_leading_block", e.what(), start);
    }
    throw;
  }
}

// Combined status of the applicable criteria: "stable", "unstable",
// "inapplicable" (none applicable) or "ambiguous" (they disagree).
std::string combined_status(const json& criteria) {
  std::string status = "inapplicable";
  for (const auto& c : criteria) {
    const std::string v = c.at("verdict");
    if (v == "inapplicable") continue;
    if (status == "inapplicable") {
      status = v;
    } else if (status != v) {
      return "ambiguous";
    }
  }
  return status;
}

json run_analyze(const MatrixPolynomial& f, const Options& o, json& report) {
  json criteria = json::array();
  criteria.push_back(verdict_to_json(hurwitz_via_markov(f, Side::kRight, o.tol)));
  criteria.push_back(verdict_to_json(hurwitz_via_markov(f, Side::kLeft, o.tol)));
  criteria.push_back(verdict_to_json(hurwitz_via_cf(f, o.tol)));
  auto gamma = gamma_criterion(f, o.tol);
  json gamma_json = verdict_to_json(gamma.verdict);
  if (gamma.breakdown) gamma_json["gamma_prime"] = gamma_to_json(gamma.breakdown->gamma);
  criteria.push_back(std::move(gamma_json));
  criteria.push_back(verdict_to_json(minors_criterion(f, o.tol)));

  report["criteria"] = criteria;
  report["oracle"] = oracle_to_json(f, o.axis_tol);
  const std::string status = combined_status(criteria);
  report["status"] = status;
  const bool oracle_stable = report["oracle"]["hurwitz"];
  const bool agree = (status == "stable" && oracle_stable) || (status == "unstable" && !oracle_stable);
  report["agreement"] = agree;
  if (!agree) {
    std::string note;
    if (status == "inapplicable") {
      note = "no criterion applies: the Markov parameter truncation is not Hermitian";
    } else if (status == "ambiguous") {
      note = "applicable criteria disagree with each other";
    } else {
      note = "criteria and oracle disagree";
    }
    note += std::string("; oracle says ") + (oracle_stable ? "stable" : "not stable");
    report["agreement_note"] = note;
  }
  return report;
}

json run_markov(const MatrixPolynomial& f, const Options& o, json& report) {
  const int n = f.degree();
  const MarkovKind kind = o.kind.value_or(canonical_kind(n));
  const int count = o.count >= 0 ? o.count : default_block_count(n);
  const auto s = markov_sequence(f, kind, o.side, count);
  report["kind"] = std::string(to_string(kind));
  report["side"] = std::string(to_string(o.side));
  if (s.s_minus1) report["s_minus1"] = matrix_to_json(*s.s_minus1);
  json blocks = json::array();
  for (const auto& b : s.blocks) blocks.push_back(matrix_to_json(b));
  report["blocks"] = std::move(blocks);
  if (s.count() >= (kind == MarkovKind::kOddFirst ? n - 1 : n)) {
    const auto h = hermitian_truncation_check(s, o.tol);
    report["hermitian_truncation"] = h.hermitian;
    if (h.first_offending_index) report["first_non_hermitian_index"] = *h.first_offending_index;
  }
  return report;
}

json run_cf(const MatrixPolynomial& f, const Options& o, json& report) {
  try {
    const auto cf = cf_expand(f);
    report["pattern"] = std::string(to_string(cf.pattern));
    json params = json::array();
    for (const auto& c : cf.params) params.push_back(matrix_to_json(c));
    report["params"] = std::move(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExpansionBreakdown) throw;
    report["expansion_error"] = error_to_json(e);
  }
  const auto v = hurwitz_via_cf(f, o.tol);
  report["criteria"] = json::array({verdict_to_json(v)});
  report["status"] = std::string(to_string(v.verdict));
  return report;
}

json run_inertia(const MatrixPolynomial& f, const Options& o, json& report) {
  json hankel;
  std::string status = "inapplicable";
  try {
    const auto b = gamma_prime_via_hankel(f, o.side, o.tol);
    hankel["gamma_prime"] = gamma_to_json(b.gamma);
    hankel["first_inertia"] = {b.first.pi, b.first.nu, b.first.delta};
    hankel["second_inertia"] = {b.second.pi, b.second.nu, b.second.delta};
    hankel["divisor_computed"] = b.divisor_computed;
    if (b.divisor_computed) {
      hankel["divisor_gamma"] = {{"upper", b.divisor_gamma.plus},
                                 {"lower", b.divisor_gamma.minus},
                                 {"real", b.divisor_gamma.zero}};
    }
    status = b.gamma.minus == f.degree() * f.block_size() ? "stable" : "unstable";
  } catch (const GcdAmbiguityError& e) {
    hankel["error"] = error_to_json(e);
    status = "ambiguous";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonHermitianSequence) throw;
    hankel["error"] = error_to_json(e);
  }
  report["hankel"] = hankel;
  report["oracle"] = oracle_to_json(f, o.axis_tol);
  report["status"] = status;
  report["agreement"] = hankel.contains("gamma_prime") && hankel["gamma_prime"] == report["oracle"]["gamma_prime"];
  return report;
}

json minor_record_to_json(const MinorRecord& r) {
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"value", complex_to_json(r.value)},
          {"scale", r.scale},
          {"class", std::string(to_string(r.cls))}};
}

json run_minors(const MatrixPolynomial& f, const Options& o, json& report) {
  const int m = f.degree() / 2;
  report["side"] = std::string(to_string(o.side));
  report["m"] = m;
  switch (o.scan) {
    case Scan::kContiguous: {
      report["scan"] = "contiguous";
      const auto suite = contiguous_quasiminor_suite(f, o.side, o.window, o.tol);
      const int max_order = o.max_order >= 0 ? std::min(o.max_order, m) : m;
      json records = json::array();
      for (const auto& r : suite.records) {
        if (r.order > max_order) continue;
        json rec{{"order", r.order},
                 {"row_offset", r.row_offset},
                 {"col_offset", r.col_offset},
                 {"positive_definite", r.positive_definite}};
        if (r.value) rec["value"] = matrix_to_json(*r.value);
        records.push_back(std::move(rec));
      }
      report["window"] = suite.window;
      report["records"] = std::move(records);
      report["all_positive_definite"] = suite.all_positive_definite;
      if (suite.s_minus1_positive_definite) report["s_minus1_positive_definite"] = *suite.s_minus1_positive_definite;
      break;
    }
    case Scan::kNoncontiguous: {
      report["scan"] = "noncontiguous";
      const int window = o.window >= 0 ? o.window : m + 1;
      const int max_order = o.max_order >= 0 ? o.max_order : m;
      const auto s = minors_sequence(f, o.side, 2 * window + 1);
      const auto herm = hermitian_truncation_check(s, o.tol);
      report["hermitian_truncation"] = herm.hermitian;
      json found = json::array();
      for (const auto& r : scan_noncontiguous(s, max_order, window)) found.push_back(minor_record_to_json(r));
      report["window"] = window;
      report["minors"] = std::move(found);
      break;
    }
    case Scan::kVanishing: {
      report["scan"] = "vanishing";
      const int window = o.window >= 0 ? o.window : 2 * m + 2;
      const auto s = minors_sequence(f, o.side, 2 * window + 1);
      const auto v = vanishing_check(s, m, 50, window);
      report["window"] = window;
      report["max_abs_minor"] = v.max_abs_minor;
      report["max_relative_minor"] = v.max_relative_minor;
      report["evaluated"] = v.evaluated;
      report["vanishes"] = v.max_relative_minor <= kVanishingTol;
      break;
    }
  }
  return report;
}

json run_oracle(const MatrixPolynomial& f, const Options& o, json& report) {
  report["oracle"] = oracle_to_json(f, o.axis_tol);
  const bool marginal = report["oracle"]["marginal"];
  const bool hurwitz = report["oracle"]["hurwitz"];
  report["status"] = marginal ? "ambiguous" : (hurwitz ? "stable" : "unstable");
  return report;
}

std::string format_complex(const json& z) {
  std::ostringstream out;
  out.precision(10);
  const double re = z.at(0);
  const double im = z.at(1);
  out << re;
  if (im != 0.0) out << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return out.str();
}

void render_matrix(std::ostringstream& out, const json& m, const std::string& indent) {
  for (const auto& row : m) {
    out << indent << "[";
    bool first = true;
    for (const auto& e : row) {
      out << (first ? "" : ", ") << format_complex(e);
      first = false;
    }
    out << "]\n";
  }
}

}  // namespace

Complex parse_complex_string(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!is_space(c)) compact.push_back(c);
  }
  const std::string_view s = compact;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  std::size_t pos = 0;
  std::optional<double> re;
  std::optional<double> im;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected + or - between terms");
    }
    double magnitude = 1.0;
    const bool has_number = read_magnitude(s, pos, magnitude);
    const bool imaginary = pos < s.size() && s[pos] == 'i';
    if (imaginary) ++pos;
    if (!has_number && !imaginary) throw std::invalid_argument("expected a number");
    auto& slot = imaginary ? im : re;
    if (slot) throw std::invalid_argument("repeated real or imaginary part");
    slot = sign * magnitude;
  }
  return {re.value_or(0.0), im.value_or(0.0)};
}

ParsedInput parse_polynomial_json(const json& doc) {
  if (!doc.is_object()) throw InputError(ErrorCode::kSchemaError, "", "expected an object");
  for (const char* key : {"p", "degree", "coefficients"}) {
    if (!doc.contains(key)) throw InputError(ErrorCode::kSchemaError, "", std::string("missing key \"") + key + "\"");
  }
  if (!doc["p"].is_number_integer() || doc["p"].get<long long>() < 1) {
    throw InputError(ErrorCode::kSchemaError, "/p", "expected a positive integer");
  }
  if (!doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 0) {
    throw InputError(ErrorCode::kSchemaError, "/degree", "expected a non-negative integer");
  }
  const int p = doc["p"].get<int>();
  const int degree = doc["degree"].get<int>();
  const json& coeffs = doc["coefficients"];
  if (!coeffs.is_array()) throw InputError(ErrorCode::kSchemaError, "/coefficients", "expected an array");
  if (static_cast<int>(coeffs.size()) != degree + 1) {
    throw InputError(ErrorCode::kSchemaError, "/coefficients",
                     "expected degree + 1 = " + std::to_string(degree + 1) + " blocks, got " +
                         std::to_string(coeffs.size()));
  }
  std::vector<CMatrix> blocks;
  for (int k = 0; k <= degree; ++k) {
    const std::string block_ptr = "/coefficients/" + std::to_string(k);
    const json& a = coeffs[static_cast<std::size_t>(k)];
    if (!a.is_array()) throw InputError(ErrorCode::kSchemaError, block_ptr, "expected a list of rows");
    if (static_cast<int>(a.size()) != p) {
      throw InputError(ErrorCode::kNonSquareBlock, block_ptr, "expected " + std::to_string(p) + " rows");
    }
    CMatrix block(p, p);
    for (int r = 0; r < p; ++r) {
      const std::string row_ptr = block_ptr + "/" + std::to_string(r);
      const json& row = a[static_cast<std::size_t>(r)];
      if (!row.is_array()) throw InputError(ErrorCode::kSchemaError, row_ptr, "expected a list of entries");
      if (static_cast<int>(row.size()) != p) {
        throw InputError(ErrorCode::kNonSquareBlock, row_ptr, "expected " + std::to_string(p) + " entries");
      }
      for (int c = 0; c < p; ++c) {
        const std::string ptr = row_ptr + "/" + std::to_string(c);
        const json& e = row[static_cast<std::size_t>(c)];
        if (e.is_string()) {
          try {
            block(r, c) = parse_complex_string(e.get<std::string>());
          } catch (const std::invalid_argument& err) {
            throw InputError(ErrorCode::kSchemaError, ptr, std::string("bad complex literal: ") + err.what());
          }
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
          block(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
          throw InputError(ErrorCode::kSchemaError, ptr, "expected [re, im] or a string");
        }
        if (!std::isfinite(block(r, c).real()) || !std::isfinite(block(r, c).imag())) {
          throw InputError(ErrorCode::kSchemaError, ptr, "entry is not finite");
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  if (blocks.front().isZero(0.0)) {
    throw InputError(ErrorCode::kLeadingBlockZero, "/coefficients/0", "leading block is zero");
  }
  MatrixPolynomial poly(std::move(blocks));
  const bool monic = poly.is_monic();
  return {std::move(poly), monic, doc};
}

ParsedInput parse_polynomial(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(ErrorCode::kSchemaError, "", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(ErrorCode::kSchemaError, "", std::string("invalid JSON: ") + e.what());
  }
  return parse_polynomial_json(doc);
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json emit_polynomial(const MatrixPolynomial& f) {
  json coeffs = json::array();
  for (const auto& a : f.coefficients()) coeffs.push_back(matrix_to_json(a));
  return {{"p", f.block_size()}, {"degree", f.degree()}, {"coefficients", std::move(coeffs)}};
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kAnalyze: return "analyze";
    case Command::kMarkov: return "markov";
    case Command::kCf: return "cf";
    case Command::kInertia: return "inertia";
    case Command::kMinors: return "minors";
    case Command::kOracle: return "oracle";
  }
  return "?";
}

std::optional<Command> command_from_string(std::string_view name) {
  for (auto c : {Command::kAnalyze, Command::kMarkov, Command::kCf, Command::kInertia, Command::kMinors,
                 Command::kOracle}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

json run(const ParsedInput& input, const Options& options) {
  json report{{"command", std::string(to_string(options.command))},
              {"input", input.echo},
              {"monic", input.monic},
              {"tolerances", {{"tol", options.tol}, {"axis_tol", options.axis_tol}}}};
  try {
    switch (options.command) {
      case Command::kAnalyze: return run_analyze(input.poly, options, report);
      case Command::kMarkov: return run_markov(input.poly, options, report);
      case Command::kCf: return run_cf(input.poly, options, report);
      case Command::kInertia: return run_inertia(input.poly, options, report);
      case Command::kMinors: return run_minors(input.poly, options, report);
      case Command::kOracle: return run_oracle(input.poly, options, report);
    }
  } catch (const Error& e) {
    report["error"] = error_to_json(e);
  }
  return report;
}

json input_error_report(Command command, const Error& error) {
  json err = error_to_json(error);
  if (const auto* ie = dynamic_cast<const InputError*>(&error)) err["pointer"] = ie->pointer();
  return {{"command", std::string(to_string(command))}, {"error", std::move(err)}};
}

int exit_code(const json& report) {
  if (report.contains("error")) return 3;
  const std::string command = report.value("command", "");
  if (command == "markov" || command == "minors") return 0;
  const std::string status = report.value("status", "inapplicable");
  if (status == "stable") return 0;
  if (status == "unstable") return 1;
  return 2;
}

std::string emit_report(const json& report) { return report.dump(2); }

json parse_report(const std::string& text) { return json::parse(text); }

std::string render_text(const json& report) {
  std::ostringstream out;
  out.precision(10);
  const std::string command = report.value("command", "");
  out << "command: " << command << "\n";
  if (report.contains("error")) {
    out << "error: " << report["error"].value("message", "") << "\n";
    return out.str();
  }
  if (report.contains("input")) {
    out << "input: p = " << report["input"].value("p", 0) << ", degree = " << report["input"].value("degree", 0)
        << (report.value("monic", false) ? ", monic" : ", not monic") << "\n";
  }
  if (report.contains("criteria")) {
    for (const auto& c : report["criteria"]) {
      out << "criterion " << c.value("id", "") << ": " << c.value("verdict", "");
      if (c.contains("cause")) out << " [" << c["cause"].get<std::string>() << "]";
      out << "  (" << c.value("reason", "") << ")\n";
    }
  }
  if (report.contains("params")) {
    out << "continued fraction (" << report.value("pattern", "") << "):\n";
    int k = 1;
    for (const auto& c : report["params"]) {
      out << "  c_" << k++ << ":\n";
      render_matrix(out, c, "    ");
    }
  }
  if (report.contains("expansion_error")) out << "expansion: " << report["expansion_error"].value("message", "") << "\n";
  if (report.contains("blocks")) {
    out << "Markov parameters (" << report.value("kind", "") << ", " << report.value("side", "") << "):\n";
    if (report.contains("s_minus1")) {
      out << "  s_-1:\n";
      render_matrix(out, report["s_minus1"], "    ");
    }
    int k = 0;
    for (const auto& b : report["blocks"]) {
      out << "  s_" << k++ << ":\n";
      render_matrix(out, b, "    ");
    }
    if (report.contains("hermitian_truncation")) {
      out << "Hermitian truncation: " << (report["hermitian_truncation"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  if (report.contains("hankel")) {
    const auto& h = report["hankel"];
    if (h.contains("gamma_prime")) {
      const auto& g = h["gamma_prime"];
      out << "Hankel inertia counts (right, left, axis): (" << g["plus"] << ", " << g["minus"] << ", " << g["zero"]
          << ")\n";
    } else if (h.contains("error")) {
      out << "Hankel inertia: " << h["error"].value("message", "") << "\n";
    }
  }
  if (report.contains("scan")) {
    out << "scan: " << report["scan"].get<std::string>() << ", window " << report.value("window", 0) << "\n";
    if (report.contains("records")) {
      for (const auto& r : report["records"]) {
        out << "  order " << r["order"] << " offsets (" << r["row_offset"] << ", " << r["col_offset"]
            << "): " << (r["positive_definite"].get<bool>() ? "positive definite" : "NOT positive definite") << "\n";
      }
    }
    if (report.contains("minors")) {
      for (const auto& r : report["minors"]) {
        out << "  rows " << r["rows"].dump() << " cols " << r["cols"].dump() << ": " << format_complex(r["value"])
            << " (" << r["class"].get<std::string>() << ")\n";
      }
    }
    if (report.contains("max_relative_minor")) {
      out << "  largest |minor| " << report["max_abs_minor"].get<double>() << ", relative "
          << report["max_relative_minor"].get<double>() << " over " << report["evaluated"] << " minors\n";
    }
  }
  if (report.contains("oracle")) {
    const auto& o = report["oracle"];
    const auto& g = o["gamma_prime"];
    out << "oracle: " << (o["hurwitz"].get<bool>() ? "Hurwitz stable" : "not Hurwitz stable") << ", counts (right, left, axis) = ("
        << g["plus"] << ", " << g["minus"] << ", " << g["zero"] << ")" << (o["marginal"].get<bool>() ? ", marginal" : "")
        << "\n";
    out << "zeros:\n";
    for (const auto& z : o["zeros"]) out << "  " << format_complex(z) << "\n";
  }
  if (report.contains("status")) out << "status: " << report["status"].get<std::string>() << "\n";
  if (report.contains("agreement")) {
    out << "agreement with oracle: " << (report["agreement"].get<bool>() ? "yes" : "no");
    if (report.contains("agreement_note")) out << " (" << report["agreement_note"].get<std::string>() << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace hurwitz::cli
