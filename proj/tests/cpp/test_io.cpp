#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pcx/errors.hpp"
#include "pcx/instances.hpp"
#include "pcx/io.hpp"
#include "pcx/pcmatrix.hpp"

#include "helpers.hpp"

using namespace pcx;
using pcx::test::close;

namespace {

io::LoadedMatrix load(const std::string& text, std::optional<Group> group = {},
                      io::Repair repair = io::Repair::none) {
  std::istringstream in(text);
  return io::read_matrix(in, std::move(group), repair);
}

std::string data_file(const char* name) {
  return std::string(PCX_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("group names round-trip") {
  CHECK(io::group_by_name("multiplicative").same(Group::reals_multiplicative()));
  CHECK(io::group_by_name("additive").same(Group::reals_additive()));
  CHECK(io::group_name(Group::reals_additive()) == "additive");
  CHECK(io::group_name(Group::reals_multiplicative()) == "multiplicative");
  CHECK_THROWS_AS(io::group_by_name("octonions"), parse_error);
  CHECK_THROWS_AS(io::group_name(klein_four_group()), precondition_error);
}

TEST_CASE("reading csv: multiplicative by default, override honoured") {
  io::LoadedMatrix loaded = load("1,2\n0.5,1\n");
  CHECK(loaded.format == io::MatrixFormat::csv);
  CHECK(loaded.matrix.group().same(Group::reals_multiplicative()));
  CHECK(loaded.matrix.order() == 2);

  io::LoadedMatrix additive = load("0,1\n-1,0\n", Group::reals_additive());
  CHECK(additive.matrix.group().same(Group::reals_additive()));
  CHECK(Group::reals_additive().value(additive.matrix.at(1, 0)) == -1.0);

  // negative entries cannot enter the multiplicative group
  CHECK_THROWS_AS(load("0,1\n-1,0\n"), invalid_element);
}

TEST_CASE("reading csv: whitespace, blank lines, malformed rows") {
  io::LoadedMatrix loaded = load(" 1 , 2 \n\n 0.5 , 1 \n\n");
  CHECK(loaded.matrix.order() == 2);
  CHECK(Group::reals_multiplicative().value(loaded.matrix.at(0, 1)) == 2.0);

  CHECK_THROWS_AS(load(""), parse_error);
  CHECK_THROWS_AS(load("   \n  \n"), parse_error);
  CHECK_THROWS_AS(load("1,2\n0.5\n"), parse_error);       // ragged
  CHECK_THROWS_AS(load("1,2\n0.5,oops\n"), parse_error);  // not a number
  CHECK_THROWS_AS(load("1,2,4\n0.5,1,2\n"), parse_error); // not square
  CHECK_THROWS_AS(load("1,,2\n0.5,1,1\n"), parse_error);  // empty cell
}

TEST_CASE("reading json") {
  io::LoadedMatrix loaded = load(R"({
    "group": "additive", "n": 2, "entries": [0, 1, -1, 0], "labels": ["a", "b"]
  })");
  CHECK(loaded.format == io::MatrixFormat::json);
  CHECK(loaded.matrix.group().same(Group::reals_additive()));
  CHECK(loaded.matrix.labels() == std::vector<std::string>{"a", "b"});

  // group defaults to multiplicative when absent
  CHECK(load(R"({"n": 1, "entries": [1]})")
            .matrix.group()
            .same(Group::reals_multiplicative()));

  // an override must agree with the file
  CHECK_THROWS_AS(load(R"({"group": "additive", "n": 1, "entries": [0]})",
                       Group::reals_multiplicative()),
                  parse_error);
}

TEST_CASE("json shape errors") {
  CHECK_THROWS_AS(load("{ not json"), parse_error);
  CHECK_THROWS_AS(load("{}"), parse_error);
  CHECK_THROWS_AS(load(R"({"n": 2, "entries": [1, 1, 1]})"), parse_error);
  CHECK_THROWS_AS(load(R"({"n": 0, "entries": []})"), parse_error);
  CHECK_THROWS_AS(load(R"({"n": 1, "entries": ["x"]})"), parse_error);
  CHECK_THROWS_AS(load(R"({"group": 7, "n": 1, "entries": [1]})"), parse_error);
  CHECK_THROWS_AS(load(R"({"n": 2, "entries": [1,1,1,1], "labels": ["a"]})"),
                  parse_error);
  CHECK_THROWS_AS(load(R"({"n": 1, "entries": [1], "labels": [3]})"), parse_error);
}

TEST_CASE("repair while reading") {
  io::LoadedMatrix loaded =
      load("7,2\n9,7\n", std::nullopt, io::Repair::reciprocal_upper);
  CHECK(validate_pc(loaded.matrix).empty());
  CHECK(Group::reals_multiplicative().value(loaded.matrix.at(1, 0)) == 0.5);
}

TEST_CASE("csv writing round-trips bit-exactly") {
  Group mul = Group::reals_multiplicative();
  PCMatrix a = PCMatrix::from_rows(
      mul, {{1, 1.0 / 3.0, 0.12345678901234567}, {3, 1, 7.0 / 11.0},
            {1.0 / 0.12345678901234567, 11.0 / 7.0, 1}});
  std::string text = io::matrix_to_string(a, io::MatrixFormat::csv);
  io::LoadedMatrix back = load(text);
  REQUIRE(back.matrix.order() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(mul.value(back.matrix.at(i, j)) == mul.value(a.at(i, j)));
}

TEST_CASE("json writing round-trips bit-exactly and keeps labels") {
  Group add = Group::reals_additive();
  PCMatrix a(add, 2, {add.identity(), add.element(1.0 / 3.0),
                      add.element(-1.0 / 3.0), add.identity()},
             {"speed", "cost"});
  std::string text = io::matrix_to_string(a, io::MatrixFormat::json);
  io::LoadedMatrix back = load(text);
  CHECK(back.format == io::MatrixFormat::json);
  CHECK(back.matrix.group().same(add));
  CHECK(back.matrix.labels() == a.labels());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(add.value(back.matrix.at(i, j)) == add.value(a.at(i, j)));

  // emitted text is well-formed for any JSON reader
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["group"] == "additive");
  CHECK(doc["n"] == 2);
  CHECK(doc["entries"].size() == 4);
}

TEST_CASE("label escaping survives the json writer") {
  Group add = Group::reals_additive();
  PCMatrix a(add, 1, {add.identity()}, {"weird \"name\"\twith\nbreaks\\"});
  std::string text = io::matrix_to_string(a, io::MatrixFormat::json);
  io::LoadedMatrix back = load(text);
  CHECK(back.matrix.labels() == a.labels());
}

TEST_CASE("triad report serialization") {
  IndicatorMap ki = ki_indicator();
  PCMatrix a = PCMatrix::from_rows(Group::reals_multiplicative(),
                                   {{1, 2, 5}, {0.5, 1, 3}, {0.2, 1.0 / 3.0, 1}});
  TriadReport report = inconsistency_indicator(ki, a, 4);

  std::string text = io::triad_report_json(report, "ki", 42);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["indicator"] == "ki");
  CHECK(doc["seed"] == 42);
  CHECK(doc["n"] == 3);
  CHECK(doc["consistent"] == false);
  CHECK(close(doc["indicator_value"].get<double>(), 1.0 / 6.0));
  REQUIRE(doc["worst"].size() == 4);
  CHECK(doc["worst"][0]["value"].get<double>() ==
        ki.codomain().value(report.worst[0].value));

  std::string human = io::triad_report_text(report, "ki", 42);
  CHECK(human.find("indicator") != std::string::npos);
  CHECK(human.find("ki") != std::string::npos);
  CHECK(human.find("no") != std::string::npos);
}

TEST_CASE("serialized numbers carry seventeen significant digits") {
  IndicatorMap ki = ki_indicator();
  PCMatrix a = PCMatrix::from_rows(Group::reals_multiplicative(),
                                   {{1, 2, 5}, {0.5, 1, 3}, {0.2, 1.0 / 3.0, 1}});
  TriadReport report = inconsistency_indicator(ki, a, 1);
  std::string text = io::triad_report_json(report, "ki", 0);
  // 1/6 at full double precision, not a shortened decimal
  CHECK(text.find("0.16666666666666674") != std::string::npos);
}

TEST_CASE("violations serialization") {
  Group mul = Group::reals_multiplicative();
  PCMatrix broken = PCMatrix::from_rows(mul, {{1, 2}, {0.4, 1}});
  auto violations = validate_pc(broken);

  std::string text = io::violations_text(violations);
  CHECK(text.find("(1, 0)") != std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(io::violations_json(violations));
  CHECK(doc["valid"] == false);
  REQUIRE(doc["violations"].size() == 1);
  CHECK(doc["violations"][0]["kind"] == "reciprocity");

  nlohmann::json ok = nlohmann::json::parse(io::violations_json({}));
  CHECK(ok["valid"] == true);
  CHECK(ok["violations"].empty());
}

TEST_CASE("law report serialization") {
  std::vector<LawReport> reports = negative_control_reports(50);
  std::string text = io::law_reports_text(reports);
  CHECK(text.find("[FAIL]") != std::string::npos);
  CHECK(text.find("witness") != std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(io::law_reports_json(reports));
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["passed"] == false);
  CHECK(doc[0]["subject"].get<std::string>().find("negative-control") !=
        std::string::npos);
  bool sawWitness = false;
  for (const auto& law : doc[0]["laws"])
    if (!law["witnesses"].empty()) sawWitness = true;
  CHECK(sawWitness);
}

TEST_CASE("reading the shipped fixture files") {
  io::LoadedMatrix ki3 = io::read_matrix_file(data_file("ki3.csv"));
  CHECK(ki3.matrix.order() == 3);
  CHECK(validate_pc(ki3.matrix).empty());

  io::LoadedMatrix js = io::read_matrix_file(data_file("ki3.json"));
  CHECK(js.matrix.labels().size() == 3);
  CHECK(validate_pc(js.matrix).empty());

  CHECK_THROWS_AS(io::read_matrix_file(data_file("no-such-file.csv")), parse_error);
  CHECK_THROWS_AS(io::read_matrix_file(data_file("malformed.csv")), parse_error);
}

}  // TEST_SUITE
