// pcx: pairwise-comparisons inconsistency analysis from the command line.
//
// Exit codes: 0 success, 1 domain violation (bad matrix data, wrong group,
// degenerate parameters), 2 input or option parse error, 3 algebraic law
// failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pcx/errors.hpp"
#include "pcx/instances.hpp"
#include "pcx/io.hpp"
#include "pcx/pcmatrix.hpp"

namespace {

constexpr const char* version_string = "0.1.0";

std::uint64_t parse_seed_text(const std::string& text, const std::string& origin) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end != text.c_str() + text.size() || text.empty()) {
    throw pcx::parse_error(origin + ": not an unsigned integer: '" + text + "'");
  }
  return value;
}

/// Default seed, overridable by the PCX_SEED environment variable, in turn
/// overridden by an explicit --seed option.
std::uint64_t ambient_seed() {
  if (const char* env = std::getenv("PCX_SEED")) {
    return parse_seed_text(env, "PCX_SEED");
  }
  return pcx::default_seed;
}

std::optional<pcx::Group> group_override(const std::string& name) {
  if (name.empty()) return std::nullopt;
  return pcx::io::group_by_name(name);
}

pcx::io::MatrixFormat parse_format(const std::string& name) {
  if (name == "json") return pcx::io::MatrixFormat::json;
  if (name == "text") return pcx::io::MatrixFormat::csv;  // unused marker
  throw pcx::parse_error("unknown format '" + name + "'; expected 'json' or 'text'");
}

struct ValidateArgs {
  std::string file;
  std::string group;
  std::string repair;
  std::string format = "text";
};

int run_validate(const ValidateArgs& args) {
  pcx::io::Repair repair = pcx::io::Repair::none;
  if (!args.repair.empty()) {
    if (args.repair != "reciprocal-upper") {
      throw pcx::parse_error("unknown repair strategy '" + args.repair +
                             "'; expected 'reciprocal-upper'");
    }
    repair = pcx::io::Repair::reciprocal_upper;
  }
  parse_format(args.format);  // reject unknown formats up front
  pcx::io::LoadedMatrix loaded =
      pcx::io::read_matrix_file(args.file, group_override(args.group), repair);
  const std::vector<pcx::PCViolation> violations = pcx::validate_pc(loaded.matrix);
  std::cout << (args.format == "json" ? pcx::io::violations_json(violations)
                                      : pcx::io::violations_text(violations));
  return violations.empty() ? 0 : 1;
}

struct AnalyzeArgs {
  std::string file;
  std::string indicator;
  std::string group;
  std::string format = "json";
  std::size_t top = 10;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_analyze(const AnalyzeArgs& args) {
  parse_format(args.format);
  const std::uint64_t seed = args.seed_given ? args.seed : ambient_seed();
  pcx::io::LoadedMatrix loaded = pcx::io::read_matrix_file(args.file, group_override(args.group));
  pcx::IndicatorMap t = pcx::parse_indicator(args.indicator);
  pcx::TriadReport report = pcx::inconsistency_indicator(t, loaded.matrix, args.top);
  std::cout << (args.format == "json"
                    ? pcx::io::triad_report_json(report, args.indicator, seed)
                    : pcx::io::triad_report_text(report, args.indicator, seed));
  return 0;
}

struct AxiomsArgs {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool negative_controls = false;
  std::string format = "text";
};

int run_axioms(const AxiomsArgs& args) {
  parse_format(args.format);
  if (args.samples < 1) throw pcx::parse_error("--samples must be at least 1");
  const std::uint64_t seed = args.seed_given ? args.seed : ambient_seed();
  const pcx::InstanceCatalog catalog;
  std::vector<pcx::LawReport> reports = catalog.law_suite(args.samples, seed);
  if (args.negative_controls) {
    for (auto& r : pcx::negative_control_reports(args.samples, seed)) {
      reports.push_back(std::move(r));
    }
  }
  std::cout << (args.format == "json" ? pcx::io::law_reports_json(reports)
                                      : pcx::io::law_reports_text(reports));
  for (const pcx::LawReport& r : reports) {
    if (!r.passed()) return 3;
  }
  return 0;
}

struct TransportArgs {
  std::string file;
  double base = 0.0;
  std::string direction;
  std::string group;
  std::string output;
};

int run_transport(const TransportArgs& args) {
  pcx::io::LoadedMatrix loaded = pcx::io::read_matrix_file(args.file, group_override(args.group));
  const bool multiplicative = loaded.matrix.group().same(pcx::Group::reals_multiplicative());

  std::string direction = args.direction;
  if (direction.empty()) {
    direction = multiplicative ? "to-additive" : "to-multiplicative";
  } else if (direction != "to-additive" && direction != "to-multiplicative") {
    throw pcx::parse_error("unknown direction '" + direction +
                           "'; expected 'to-additive' or 'to-multiplicative'");
  }

  pcx::PCMatrix result = direction == "to-additive"
                             ? pcx::to_additive_scale(loaded.matrix, args.base)
                             : pcx::to_multiplicative_scale(loaded.matrix, args.base);

  const std::string text = pcx::io::matrix_to_string(result, loaded.format);
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    if (!out) throw pcx::parse_error("cannot open '" + args.output + "' for writing");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inconsistency analysis of pairwise-comparisons matrices"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Check the pairwise-comparisons structure of a matrix file");
  validate->add_option("file", validate_args.file, "CSV or JSON matrix file")->required();
  validate->add_option("--group", validate_args.group,
                       "Entry group for CSV input: multiplicative (default) or additive");
  validate->add_option("--repair", validate_args.repair,
                       "Rebuild diagonal and lower triangle first (reciprocal-upper)");
  validate->add_option("--format", validate_args.format, "Report format: text (default) or json");

  AnalyzeArgs analyze_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Compute the inconsistency indicator of a matrix");
  analyze->add_option("file", analyze_args.file, "CSV or JSON matrix file")->required();
  analyze->add_option("--indicator", analyze_args.indicator,
                      "Indicator selector: ki | sa:<base> | three-level[:<a>,<b>,<c>] | "
                      "product:<sel>,<sel> | symmetrized:<sel>")
      ->required();
  analyze->add_option("--group", analyze_args.group,
                      "Entry group for CSV input: multiplicative (default) or additive");
  analyze->add_option("--top", analyze_args.top, "How many worst triples to report (default 10)");
  analyze->add_option("--format", analyze_args.format, "Report format: json (default) or text");
  CLI::Option* analyze_seed = analyze->add_option("--seed", analyze_args.seed,
                                                  "Seed recorded in the report (default 42, or "
                                                  "PCX_SEED)");

  AxiomsArgs axioms_args;
  CLI::App* axioms =
      app.add_subcommand("axioms", "Run the algebraic law suite over the built-in registry");
  axioms->add_option("--samples", axioms_args.samples,
                     "Random tuples per law (default 1000); finite domains run exhaustively");
  CLI::Option* axioms_seed =
      axioms->add_option("--seed", axioms_args.seed, "Sampling seed (default 42, or PCX_SEED)");
  axioms->add_flag("--negative-controls", axioms_args.negative_controls,
                   "Also run deliberately broken fixtures; they must fail, so the exit code "
                   "becomes 3");
  axioms->add_option("--format", axioms_args.format, "Report format: text (default) or json");

  TransportArgs transport_args;
  CLI::App* transport = app.add_subcommand(
      "transport", "Rewrite a matrix between multiplicative and additive scales");
  transport->add_option("file", transport_args.file, "CSV or JSON matrix file")->required();
  transport->add_option("--base", transport_args.base, "Logarithm/power base (> 0, not 1)")
      ->required();
  transport->add_option("--direction", transport_args.direction,
                        "to-additive or to-multiplicative (default: inferred from the input "
                        "group)");
  transport->add_option("--group", transport_args.group,
                        "Entry group for CSV input: multiplicative (default) or additive");
  transport->add_option("--output", transport_args.output, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  analyze_args.seed_given = analyze_seed->count() > 0;
  axioms_args.seed_given = axioms_seed->count() > 0;

  try {
    if (validate->parsed()) return run_validate(validate_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (axioms->parsed()) return run_axioms(axioms_args);
    if (transport->parsed()) return run_transport(transport_args);
    std::cerr << "pcx: no command\n";
    return 2;
  } catch (const pcx::parse_error& e) {
    std::cerr << "pcx: " << e.what() << "\n";
    return 2;
  } catch (const pcx::law_violation& e) {
    std::cerr << "pcx: " << e.what() << "\n";
    return 3;
  } catch (const pcx::error& e) {
    std::cerr << "pcx: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "pcx: internal error: " << e.what() << "\n";
    return 1;
  }
}
