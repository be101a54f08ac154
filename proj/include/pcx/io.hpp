#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcx/laws.hpp"
#include "pcx/pcmatrix.hpp"

namespace pcx::io {

enum class MatrixFormat { csv, json };
enum class Repair { none, reciprocal_upper };

/// "multiplicative" or "additive"; anything else is a parse_error.
Group group_by_name(std::string_view name);

/// Inverse of group_by_name; precondition_error for other groups.
std::string group_name(const Group& g);

struct LoadedMatrix {
  PCMatrix matrix;
  MatrixFormat format;
};

/**
 * Reads a matrix from CSV (n lines of n comma-separated decimal numbers)
 * or JSON ({"group", "n", "entries", "labels"?}); the format is sniffed
 * from the first non-space character.  CSV entries are taken from
 * `group_override`, defaulting to the multiplicative reals; for JSON an
 * override must agree with the file's own group field.  With
 * Repair::reciprocal_upper the diagonal and lower triangle are rebuilt
 * from the upper triangle after reading.
 */
LoadedMatrix read_matrix(std::istream& in, std::optional<Group> group_override = {},
                         Repair repair = Repair::none);
LoadedMatrix read_matrix_file(const std::string& path,
                              std::optional<Group> group_override = {},
                              Repair repair = Repair::none);

/// Writes CSV or JSON with 17 significant digits, enough for doubles to
/// round-trip bit-exactly.
std::string matrix_to_string(const PCMatrix& m, MatrixFormat format);
void write_matrix(std::ostream& out, const PCMatrix& m, MatrixFormat format);

std::string triad_report_json(const TriadReport& report, std::string_view selector,
                              std::uint64_t seed);
std::string triad_report_text(const TriadReport& report, std::string_view selector,
                              std::uint64_t seed);

std::string violations_text(const std::vector<PCViolation>& violations);
std::string violations_json(const std::vector<PCViolation>& violations);

std::string law_reports_text(const std::vector<LawReport>& reports);
std::string law_reports_json(const std::vector<LawReport>& reports);

}  // namespace pcx::io
