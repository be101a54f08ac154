#include "pcx/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pcx/errors.hpp"

namespace pcx::io {

namespace {

// Serialization precision: 17 significant digits round-trip any double.
std::string wire_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Display precision for human-facing text output.
std::string show_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_wire_number(std::string_view token, std::size_t line_no) {
  const std::string text(trimmed(token));
  if (text.empty()) {
    throw parse_error("line " + std::to_string(line_no) + ": empty cell");
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw parse_error("line " + std::to_string(line_no) + ": not a number: '" + text + "'");
  }
  return value;
}

PCMatrix read_csv(std::istream& in, const Group& group) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell =
          std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
      row.push_back(parse_wire_number(cell, line_no));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("no rows in input");
  const std::size_t n = rows.size();
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw parse_error("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " cells; expected " + std::to_string(n) + " for a square matrix");
    }
    for (double v : rows[i]) entries.push_back(group.element(v));
  }
  return PCMatrix(group, n, std::move(entries));
}

PCMatrix read_json(std::istream& in, const std::optional<Group>& group_override) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("expected a JSON object at top level");

  std::string group_field = "multiplicative";
  if (doc.contains("group")) {
    if (!doc["group"].is_string()) throw parse_error("'group' must be a string");
    group_field = doc["group"].get<std::string>();
  }
  Group group = group_by_name(group_field);
  if (group_override && !group_override->same(group)) {
    throw parse_error("requested group '" + group_name(*group_override) +
                      "' conflicts with the file's group '" + group_field + "'");
  }

  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw parse_error("missing integer field 'n'");
  }
  const std::int64_t n_raw = doc["n"].get<std::int64_t>();
  if (n_raw < 1) throw parse_error("'n' must be at least 1");
  const std::size_t n = static_cast<std::size_t>(n_raw);

  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw parse_error("missing array field 'entries'");
  }
  const auto& raw = doc["entries"];
  if (raw.size() != n * n) {
    throw parse_error("'entries' has " + std::to_string(raw.size()) + " values; expected " +
                      std::to_string(n * n));
  }
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (const auto& cell : raw) {
    if (!cell.is_number()) throw parse_error("'entries' must contain only numbers");
    entries.push_back(group.element(cell.get<double>()));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || doc["labels"].size() != n) {
      throw parse_error("'labels' must be an array of " + std::to_string(n) + " strings");
    }
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) throw parse_error("'labels' must contain only strings");
      labels.push_back(label.get<std::string>());
    }
  }
  return PCMatrix(group, n, std::move(entries), std::move(labels));
}

}  // namespace

Group group_by_name(std::string_view name) {
  if (name == "multiplicative") return Group::reals_multiplicative();
  if (name == "additive") return Group::reals_additive();
  throw parse_error("unknown group '" + std::string(name) +
                    "'; expected 'multiplicative' or 'additive'");
}

std::string group_name(const Group& g) {
  if (g.same(Group::reals_multiplicative())) return "multiplicative";
  if (g.same(Group::reals_additive())) return "additive";
  throw precondition_error("group '" + std::string(g.name()) +
                           "' has no serialization name");
}

LoadedMatrix read_matrix(std::istream& in, std::optional<Group> group_override, Repair repair) {
  // Sniff the format from the first non-space character.
  int c = in.peek();
  while (c != EOF && std::isspace(c)) {
    in.get();
    c = in.peek();
  }
  if (c == EOF) throw parse_error("empty input");

  LoadedMatrix loaded =
      (c == '{') ? LoadedMatrix{read_json(in, group_override), MatrixFormat::json}
                 : LoadedMatrix{read_csv(in, group_override ? *group_override
                                                            : Group::reals_multiplicative()),
                                MatrixFormat::csv};
  if (repair == Repair::reciprocal_upper) {
    loaded.matrix = repair_reciprocal_upper(loaded.matrix);
  }
  return loaded;
}

LoadedMatrix read_matrix_file(const std::string& path, std::optional<Group> group_override,
                              Repair repair) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_matrix(in, std::move(group_override), repair);
}

std::string matrix_to_string(const PCMatrix& m, MatrixFormat format) {
  const Group& g = m.group();
  std::string out;
  if (format == MatrixFormat::csv) {
    for (std::size_t i = 0; i < m.order(); ++i) {
      for (std::size_t j = 0; j < m.order(); ++j) {
        if (j > 0) out += ',';
        out += wire_number(g.value(m.at(i, j)));
      }
      out += '\n';
    }
    return out;
  }
  out += "{\n  \"group\": ";
  append_json_string(out, group_name(g));
  out += ",\n  \"n\": " + std::to_string(m.order()) + ",\n  \"entries\": [";
  for (std::size_t k = 0; k < m.order() * m.order(); ++k) {
    if (k > 0) out += ", ";
    out += wire_number(g.value(m.entries()[k]));
  }
  out += "]";
  if (!m.labels().empty()) {
    out += ",\n  \"labels\": [";
    for (std::size_t i = 0; i < m.labels().size(); ++i) {
      if (i > 0) out += ", ";
      append_json_string(out, m.labels()[i]);
    }
    out += "]";
  }
  out += "\n}\n";
  return out;
}

void write_matrix(std::ostream& out, const PCMatrix& m, MatrixFormat format) {
  out << matrix_to_string(m, format);
}

std::string triad_report_json(const TriadReport& report, std::string_view selector,
                              std::uint64_t seed) {
  std::string out = "{\n  \"indicator_value\": ";
  out += wire_number(report.indicator_value.real());
  out += ",\n  \"consistent\": ";
  out += report.consistent ? "true" : "false";
  out += ",\n  \"worst\": [";
  for (std::size_t idx = 0; idx < report.worst.size(); ++idx) {
    const TriadValue& t = report.worst[idx];
    if (idx > 0) out += ",";
    out += "\n    {\"i\": " + std::to_string(t.i) + ", \"j\": " + std::to_string(t.j) +
           ", \"k\": " + std::to_string(t.k) + ", \"value\": " + wire_number(t.value.real()) + "}";
  }
  if (!report.worst.empty()) out += "\n  ";
  out += "],\n  \"n\": " + std::to_string(report.n) + ",\n  \"indicator\": ";
  append_json_string(out, selector);
  out += ",\n  \"seed\": " + std::to_string(seed) + "\n}\n";
  return out;
}

std::string triad_report_text(const TriadReport& report, std::string_view selector,
                              std::uint64_t seed) {
  std::string out;
  out += "indicator        " + std::string(selector) + "\n";
  out += "n                " + std::to_string(report.n) + "\n";
  out += "seed             " + std::to_string(seed) + "\n";
  out += "indicator value  " + show_number(report.indicator_value.real()) + "\n";
  out += "consistent       " + std::string(report.consistent ? "yes" : "no") + "\n";
  if (!report.worst.empty()) {
    out += "worst triads (i, j, k -> value):\n";
    for (const TriadValue& t : report.worst) {
      out += "  " + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " + std::to_string(t.k) +
             "  ->  " + show_number(t.value.real()) + "\n";
    }
  }
  return out;
}

std::string violations_text(const std::vector<PCViolation>& violations) {
  if (violations.empty()) return "ok: matrix is a pairwise-comparisons matrix\n";
  std::string out;
  for (const PCViolation& v : violations) out += v.message + "\n";
  return out;
}

std::string violations_json(const std::vector<PCViolation>& violations) {
  std::string out = "{\n  \"valid\": ";
  out += violations.empty() ? "true" : "false";
  out += ",\n  \"violations\": [";
  for (std::size_t idx = 0; idx < violations.size(); ++idx) {
    const PCViolation& v = violations[idx];
    if (idx > 0) out += ",";
    out += "\n    {\"kind\": ";
    append_json_string(out, v.kind == PCViolation::Kind::diagonal ? "diagonal" : "reciprocity");
    out += ", \"i\": " + std::to_string(v.i) + ", \"j\": " + std::to_string(v.j) +
           ", \"message\": ";
    append_json_string(out, v.message);
    out += "}";
  }
  if (!violations.empty()) out += "\n  ";
  out += "]\n}\n";
  return out;
}

std::string law_reports_text(const std::vector<LawReport>& reports) {
  std::string out;
  for (const LawReport& report : reports) {
    out += report.passed() ? "[PASS] " : "[FAIL] ";
    out += report.subject + "\n";
    for (const LawResult& law : report.laws) {
      out += "  ";
      out += law.passed() ? "pass" : "FAIL";
      out += "  " + law.law + "  (" + std::to_string(law.samples) +
             (law.exhaustive ? " tuples, exhaustive)" : " samples)");
      if (!law.passed()) {
        out += "  failures: " + std::to_string(law.failure_count);
      }
      out += "\n";
      if (!law.passed()) {
        for (const Witness& w : law.witnesses) {
          out += "        witness: " + w.text + "\n";
        }
      }
    }
  }
  return out;
}

std::string law_reports_json(const std::vector<LawReport>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const LawReport& report : reports) {
    nlohmann::json laws = nlohmann::json::array();
    for (const LawResult& law : report.laws) {
      nlohmann::json witnesses = nlohmann::json::array();
      for (const Witness& w : law.witnesses) witnesses.push_back(w.text);
      laws.push_back({{"law", law.law},
                      {"samples", law.samples},
                      {"exhaustive", law.exhaustive},
                      {"failures", law.failure_count},
                      {"passed", law.passed()},
                      {"witnesses", std::move(witnesses)}});
    }
    doc.push_back({{"subject", report.subject},
                   {"passed", report.passed()},
                   {"laws", std::move(laws)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace pcx::io
