#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "tripoint/json_io.hpp"

using namespace tripoint;

TEST_CASE("number_from accepts numbers and p/q strings") {
  CHECK(number_from(ojson(2.25), "t") == 2.25);
  CHECK(number_from(ojson(3), "t") == 3.0);
  CHECK(number_from(ojson("9/4"), "t") == 2.25);
  CHECK(number_from(ojson("-1/2"), "t") == -0.5);
  CHECK_THROWS_AS(number_from(ojson("seven"), "t"), std::invalid_argument);
  CHECK_THROWS_AS(number_from(ojson("7"), "t"), std::invalid_argument);
  CHECK_THROWS_AS(number_from(ojson(true), "t"), std::invalid_argument);
  CHECK_THROWS_AS(number_from(ojson(nullptr), "t"), std::invalid_argument);
}

TEST_CASE("number_entry echoes short fractions in both forms") {
  auto plain = number_entry(9.0);
  CHECK(plain.is_number());
  CHECK(plain.get<double>() == 9.0);

  auto both = number_entry(0.92);
  REQUIRE(both.is_object());
  CHECK(both["decimal"].get<double>() == 0.92);
  CHECK(both["rational"].get<std::string>() == "23/25");

  // Accumulated irrational sums stay plain numbers.
  CHECK(number_entry(5.468458285337349).is_number());
  CHECK(number_entry(std::numeric_limits<double>::infinity()).is_null());
}

TEST_CASE("format_number pairs the fraction with its decimal") {
  CHECK(format_number(0.92) == "23/25 (= 0.92)");
  CHECK(format_number(4.5) == "9/2 (= 4.5)");
  CHECK(format_number(9.0) == "9.0");
  // No short fraction: the shortest round-trip decimal stands alone.
  CHECK(format_number(5.468458285337349) == "5.468458285337349");
}

TEST_CASE("space_points_from_json reads labels and optional coords") {
  auto plain = space_points_from_json(ojson::parse(R"({
    "labels": ["a", "b", "c"]
  })"));
  CHECK(plain.size() == 3);
  CHECK_FALSE(plain.has_coords());

  auto with_coords = space_points_from_json(ojson::parse(R"({
    "labels": ["a", "b"],
    "coords": [["-9/4", 0], [0, 1.5]]
  })"));
  REQUIRE(with_coords.has_coords());
  CHECK(with_coords.coords()[0][0] == -2.25);
  CHECK(with_coords.coords()[1][1] == 1.5);

  CHECK_THROWS_AS(space_points_from_json(ojson::parse(R"({"coords": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      space_points_from_json(ojson::parse(R"({"labels": ["a", "a"]})")),
      std::invalid_argument);
}

TEST_CASE("table_from_json handles named tables, matrices and kinds") {
  auto space = space_points_from_json(ojson::parse(R"({
    "labels": ["a", "b"],
    "coords": [[0, 0], [3, 4]]
  })"));

  auto euclid = table_from_json(ojson("euclidean"), space, "d2");
  CHECK(euclid(0, 1) == doctest::Approx(5.0));
  CHECK(euclid.kind() == TableKind::metric);

  auto discrete = table_from_json(ojson("discrete"), space, "d1");
  CHECK(discrete(0, 1) == 1.0);

  auto matrix = table_from_json(ojson::parse(R"({
    "kind": "semimetric",
    "values": [[0, "9/4"], ["9/4", 0]]
  })"),
                                space, "d2");
  CHECK(matrix.kind() == TableKind::semimetric);
  CHECK(matrix(0, 1) == 2.25);

  // Named table inside the object form.
  auto named = table_from_json(ojson::parse(R"({"values": "discrete"})"),
                               space, "d1");
  CHECK(named(0, 1) == 1.0);

  auto bare = space_points_from_json(ojson::parse(R"({"labels": ["a", "b"]})"));
  CHECK_THROWS_AS(table_from_json(ojson("euclidean"), bare, "d1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(ojson("chebyshev"), space, "d1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(ojson::parse(R"({"values": [[0]]})"), space,
                                  "d1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(ojson::parse(R"({"kind": "odd",
                                                  "values": "discrete"})"),
                                  space, "d1"),
                  std::invalid_argument);
}

TEST_CASE("single_map_from_json needs a complete label-to-label object") {
  auto space =
      space_points_from_json(ojson::parse(R"({"labels": ["a", "b", "c"]})"));

  auto f = single_map_from_json(
      ojson::parse(R"({"a": "a", "b": "a", "c": "b"})"), space);
  CHECK(f(0) == 0);
  CHECK(f(2) == 1);

  CHECK_THROWS_AS(
      single_map_from_json(ojson::parse(R"({"a": "a", "b": "a"})"), space),
      std::invalid_argument);
  CHECK_THROWS_AS(
      single_map_from_json(
          ojson::parse(R"({"a": "a", "b": "a", "c": "z"})"), space),
      std::invalid_argument);
}

TEST_CASE("multi_map_from_json reads arrays of member labels") {
  auto space =
      space_points_from_json(ojson::parse(R"({"labels": ["a", "b", "c"]})"));

  auto f = multi_map_from_json(
      ojson::parse(R"({"a": ["a"], "b": ["a"], "c": ["a", "c"]})"), space);
  CHECK(f(2).contains(0));
  CHECK(f(2).contains(2));
  CHECK(f(0).size() == 1);

  CHECK_THROWS_AS(multi_map_from_json(
                      ojson::parse(R"({"a": ["a"], "b": ["a"]})"), space),
                  std::invalid_argument);
  CHECK_THROWS_AS(multi_map_from_json(
                      ojson::parse(R"({"a": [], "b": ["a"], "c": ["a"]})"),
                      space),
                  std::invalid_argument);
}

TEST_CASE("phi_from_json builds each family") {
  auto lin = phi_from_json(ojson::parse(R"({"family": "linear",
                                            "lambda": "23/25"})"));
  CHECK(lin.is_linear());
  CHECK(lin.linear_coefficient() == 0.92);

  auto lg = phi_from_json(ojson::parse(R"({"family": "log_half"})"));
  CHECK_FALSE(lg.is_linear());

  auto at = phi_from_json(ojson::parse(R"({"family": "arctan_piecewise",
                                           "lambda1": 0.3,
                                           "lambda2": 0.6})"));
  CHECK(at(1.0) == doctest::Approx(std::atan(0.3)));

  auto tab = phi_from_json(ojson::parse(R"({"family": "tabulated",
                                            "points": [[0, 0], [1, "1/2"]]})"));
  CHECK(tab(1.0) == 0.5);

  CHECK_THROWS_AS(phi_from_json(ojson::parse(R"({"family": "cubic"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi_from_json(ojson::parse(R"({"family": "linear"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      phi_from_json(ojson::parse(R"({"family": "tabulated",
                                     "points": [[0, 0, 0]]})")),
      std::invalid_argument);
}

TEST_CASE("scan_from_json assembles the interval problem") {
  auto scan = scan_from_json(ojson::parse(R"({
    "lo": 0, "hi": 1,
    "map": {"split": "1/2",
            "below": {"slope": "1/3", "offset": 0},
            "above": {"slope": "1/2", "offset": 0}},
    "d1": "euclidean",
    "d2": {"kind": "split_gap", "split": "1/2", "gap": 1},
    "d3": {"kind": "split_gap", "split": "1/2", "gap": 1}
  })"));
  CHECK(scan.lo == 0.0);
  CHECK(scan.hi == 1.0);
  CHECK(scan.map.split == 0.5);
  CHECK(scan.map.below_slope == doctest::Approx(1.0 / 3.0));
  CHECK(scan.d1.kind == LineMetric::Kind::euclidean);
  CHECK(scan.d2.kind == LineMetric::Kind::split_gap);
  CHECK(scan.d2.gap == 1.0);

  CHECK_THROWS_AS(scan_from_json(ojson::parse(R"({"lo": 0, "hi": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      scan_from_json(ojson::parse(R"({
        "lo": 0, "hi": 1,
        "map": {"split": 0.5, "below": {"slope": 0.3, "offset": 0},
                "above": {"slope": 0.5, "offset": 0}},
        "d1": "manhattan", "d2": "euclidean", "d3": "euclidean"
      })")),
      std::invalid_argument);
}

TEST_CASE("load_problem assembles a single-valued document") {
  auto input = load_problem(ojson::parse(R"({
    "space": {
      "labels": ["a", "b", "c"],
      "tables": {
        "d1": "discrete",
        "d2": {"values": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]},
        "d3": {"values": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]}
      }
    },
    "map": {"a": "a", "b": "a", "c": "b"},
    "phi": {"family": "linear", "lambda": 0.9},
    "lambda": "2/3",
    "class": "hhd"
  })"));

  REQUIRE(input.points.has_value());
  CHECK(input.points->size() == 3);
  CHECK(input.tables.size() == 3);
  CHECK(input.tables.at("d1")(0, 1) == 1.0);
  CHECK(input.tables.at("d2")(0, 2) == 2.0);
  REQUIRE(input.single_map.has_value());
  CHECK_FALSE(input.multi_map.has_value());
  REQUIRE(input.phi.has_value());
  CHECK(input.phi->is_linear());
  CHECK(input.lambda == doctest::Approx(2.0 / 3.0));
  CHECK(input.check_class == "hhd");
  CHECK_FALSE(input.scan.has_value());
}

TEST_CASE("load_problem dispatches multi-valued maps by image shape") {
  auto input = load_problem(ojson::parse(R"({
    "space": {"labels": ["a", "b"]},
    "map": {"a": ["a"], "b": ["a", "b"]}
  })"));
  CHECK(input.multi_map.has_value());
  CHECK_FALSE(input.single_map.has_value());

  CHECK_THROWS_AS(load_problem(ojson::parse(R"({"map": {"a": "a"}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_problem(ojson::parse(R"([1, 2])")),
                  std::invalid_argument);
}

TEST_CASE("load_problem_file reports unreadable and malformed input") {
  CHECK_THROWS_AS(load_problem_file("/nonexistent/problem.json"),
                  std::runtime_error);

  const auto path =
      std::filesystem::temp_directory_path() / "tripoint_bad_doc.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS(load_problem_file(path.string()));
  std::filesystem::remove(path);
}
