// Command-line front end: hurwitz <command> <input.json> [options]

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hurwitz/cli.hpp"

namespace {

using hurwitz::cli::Command;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability analysis of matrix polynomials"};
  app.require_subcommand(1);

  hurwitz::cli::Options options;
  std::string input_path;
  std::string format = "json";
  std::string kind = "auto";
  std::string side = "right";
  std::string scan = "contiguous";

  app.add_option("--tol", options.tol, "linear algebra tolerance")->capture_default_str();
  app.add_option("--axis-tol", options.axis_tol, "imaginary axis band for the oracle")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "polynomial JSON file")->required();
    sub->fallthrough();
  };

  std::map<CLI::App*, Command> commands;
  auto* analyze = app.add_subcommand("analyze", "all criteria, oracle and agreement");
  auto* markov = app.add_subcommand("markov", "Markov parameters");
  auto* cf = app.add_subcommand("cf", "Stieltjes continued fraction");
  auto* inertia = app.add_subcommand("inertia", "zero counts from Hankel inertia next to the oracle");
  auto* minors = app.add_subcommand("minors", "block Hankel minors and quasiminors");
  auto* oracle = app.add_subcommand("oracle", "zeros by companion linearization");
  commands = {{analyze, Command::kAnalyze}, {markov, Command::kMarkov}, {cf, Command::kCf},
              {inertia, Command::kInertia}, {minors, Command::kMinors}, {oracle, Command::kOracle}};
  for (const auto& [sub, cmd] : commands) add_input(sub);

  markov->add_option("--kind", kind)->check(CLI::IsMember({"auto", "even", "odd-first", "odd-second"}));
  markov->add_option("--count", options.count, "number of blocks (default 2n + 2)");
  for (auto* sub : {markov, inertia, minors}) {
    sub->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  }
  minors->add_option("--max-order", options.max_order);
  minors->add_option("--scan", scan)
      ->check(CLI::IsMember({"contiguous", "noncontiguous", "vanishing"}))
      ->capture_default_str();
  minors->add_option("--window", options.window);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) options.command = cmd;
  }
  options.side = side == "left" ? hurwitz::Side::kLeft : hurwitz::Side::kRight;
  if (kind == "even") options.kind = hurwitz::MarkovKind::kEven;
  if (kind == "odd-first") options.kind = hurwitz::MarkovKind::kOddFirst;
  if (kind == "odd-second") options.kind = hurwitz::MarkovKind::kOddSecond;
  if (scan == "noncontiguous") options.scan = hurwitz::cli::Scan::kNoncontiguous;
  if (scan == "vanishing") options.scan = hurwitz::cli::Scan::kVanishing;

  nlohmann::json report;
  try {
    const auto input = hurwitz::cli::parse_polynomial(input_path);
    report = hurwitz::cli::run(input, options);
  } catch (const hurwitz::Error& e) {
    report = hurwitz::cli::input_error_report(options.command, e);
  }
  if (report.contains("error")) std::cerr << "error: " << report["error"].value("message", "") << "\n";
  std::cout << (format == "text" ? hurwitz::cli::render_text(report) : hurwitz::cli::emit_report(report) + "\n");
  return hurwitz::cli::exit_code(report);
}
