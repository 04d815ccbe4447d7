#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tripoint/comparison.hpp"
#include "tripoint/multi_valued.hpp"
#include "tripoint/single_valued.hpp"
#include "tripoint/spaces.hpp"

namespace tripoint {

// Reports keep their keys in insertion order so repeated runs emit
// byte-identical documents.
using ojson = nlohmann::ordered_json;

// Accepts a JSON number or a "p/q" string. Throws std::invalid_argument on
// anything else.
double number_from(const ojson& v, std::string_view context);

// Number for JSON output: plain when no short exact fraction exists,
// otherwise an object carrying both forms. Non-finite values become null.
ojson number_entry(double x);

// Number for human output: "23/25 (= 0.92)" when a short fraction exists.
std::string format_number(double x);

// One-dimensional scan problem: interval, two-branch map, three line
// metrics.
struct ScanProblem {
  double lo = 0;
  double hi = 1;
  SplitAffineMap map;
  LineMetric d1;
  LineMetric d2;
  LineMetric d3;
};

// A problem file: a finite space with up to three tables and a map, or a
// sampled scan description, plus whatever gauge or slope the check needs.
// Tasks pick the pieces they require and reject files missing them.
struct ProblemInput {
  std::optional<PointSpace> points;
  std::map<std::string, DistanceTable, std::less<>> tables;
  std::optional<SingleMap> single_map;
  std::optional<MultiMap> multi_map;
  std::optional<ComparisonFunction> phi;
  std::optional<double> lambda;
  std::optional<std::string> check_class;
  std::optional<ScanProblem> scan;
};

ProblemInput load_problem(const ojson& doc);
ProblemInput load_problem_file(const std::string& path);

PointSpace space_points_from_json(const ojson& space);
// `entry` is "euclidean", "discrete", or {"kind": ..., "values": [[...]]}.
DistanceTable table_from_json(const ojson& entry, const PointSpace& space,
                              std::string_view role);
SingleMap single_map_from_json(const ojson& map, const PointSpace& space);
MultiMap multi_map_from_json(const ojson& map, const PointSpace& space);
ComparisonFunction phi_from_json(const ojson& phi);
ScanProblem scan_from_json(const ojson& scan);

}  // namespace tripoint
