#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hurwitz/markov.hpp"
#include "hurwitz/matrix_polynomial.hpp"

namespace hurwitz::cli {

using json = nlohmann::json;

/// Input rejection carrying the JSON pointer of the offending value.
class InputError : public Error {
 public:
  InputError(ErrorCode code, std::string pointer, const std::string& what)
      : Error(code, (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct ParsedInput {
  MatrixPolynomial poly;
  bool monic = false;
  json echo;  // the document as read
};

/// "a", "a/b", "a/b+c/di", "c/di", "i", "-i", decimals allowed.
/// Throws std::invalid_argument.
Complex parse_complex_string(std::string_view text);

/// Validates {"p", "degree", "coefficients": [A_0 ... A_n]}. Entries are
/// [re, im] or strings accepted by parse_complex_string.
/// Throws InputError (kSchemaError, kNonSquareBlock, kLeadingBlockZero).
ParsedInput parse_polynomial_json(const json& doc);

/// Reads and validates a file. Throws InputError.
ParsedInput parse_polynomial(const std::filesystem::path& path);

/// The input schema with [re, im] number pairs.
json emit_polynomial(const MatrixPolynomial& f);

json matrix_to_json(const CMatrix& m);
json complex_to_json(Complex z);

enum class Command { kAnalyze, kMarkov, kCf, kInertia, kMinors, kOracle };

std::string_view to_string(Command c);
std::optional<Command> command_from_string(std::string_view name);

enum class Scan { kContiguous, kNoncontiguous, kVanishing };

struct Options {
  Command command = Command::kAnalyze;
  double tol = 1e-9;
  double axis_tol = 1e-8;
  std::optional<MarkovKind> kind;
  Side side = Side::kRight;
  int count = -1;      // markov: number of blocks, default 2n + 2
  int max_order = -1;  // minors: default m (m + 2 for vanishing)
  Scan scan = Scan::kContiguous;
  int window = -1;
};

/// Runs a command and returns the report object. Library errors are
/// reported inside the object ("error": {code, message}).
json run(const ParsedInput& input, const Options& options);

/// Report for an input that failed to parse.
json input_error_report(Command command, const Error& error);

/// 0 stable, 1 unstable, 2 inapplicable or ambiguous, 3 input error;
/// `markov` and `minors` reports exit 0 unless they carry an error.
int exit_code(const json& report);

std::string emit_report(const json& report);
json parse_report(const std::string& text);

/// Human-readable projection of a report.
std::string render_text(const json& report);

}  // namespace hurwitz::cli
