#include "tripoint/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tripoint/rational.hpp"

namespace tripoint {

namespace {

[[noreturn]] void fail(std::string_view context, std::string_view what) {
  std::ostringstream out;
  out << context << ": " << what;
  throw std::invalid_argument(out.str());
}

const ojson& require_field(const ojson& doc, const char* key,
                           std::string_view context) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    fail(context, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string require_string(const ojson& v, std::string_view context) {
  if (!v.is_string()) fail(context, "expected a string");
  return v.get<std::string>();
}

}  // namespace

double number_from(const ojson& v, std::string_view context) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    if (auto r = parse_rational(text)) return r->value();
    fail(context, "string is not a \"p/q\" rational: \"" + text + "\"");
  }
  fail(context, "expected a number or a \"p/q\" string");
}

ojson number_entry(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (auto r = to_short_rational(x); r && r->den != 1) {
    ojson both;
    both["decimal"] = x;
    both["rational"] = r->str();
    return both;
  }
  return x;
}

std::string format_number(double x) {
  const std::string decimal = ojson(x).dump();
  if (!std::isfinite(x)) return decimal;
  if (auto r = to_short_rational(x); r && r->den != 1) {
    return r->str() + " (= " + decimal + ")";
  }
  return decimal;
}

PointSpace space_points_from_json(const ojson& space) {
  const std::string_view ctx = "space";
  if (!space.is_object()) fail(ctx, "expected an object");
  const ojson& labels_doc = require_field(space, "labels", ctx);
  if (!labels_doc.is_array()) fail(ctx, "\"labels\" must be an array");
  std::vector<std::string> labels;
  labels.reserve(labels_doc.size());
  for (const auto& l : labels_doc) labels.push_back(require_string(l, ctx));

  const auto coords_it = space.find("coords");
  if (coords_it == space.end()) return PointSpace(std::move(labels));

  if (!coords_it->is_array()) fail(ctx, "\"coords\" must be an array");
  std::vector<std::vector<double>> coords;
  coords.reserve(coords_it->size());
  for (const auto& row : *coords_it) {
    if (!row.is_array()) fail(ctx, "each coordinate must be an array");
    std::vector<double> point;
    point.reserve(row.size());
    for (const auto& c : row) point.push_back(number_from(c, "space.coords"));
    coords.push_back(std::move(point));
  }
  return PointSpace(std::move(labels), std::move(coords));
}

DistanceTable table_from_json(const ojson& entry, const PointSpace& space,
                              std::string_view role) {
  std::string named;
  TableKind kind = TableKind::metric;
  const ojson* values = nullptr;

  if (entry.is_string()) {
    named = entry.get<std::string>();
  } else if (entry.is_object()) {
    if (const auto kind_it = entry.find("kind"); kind_it != entry.end()) {
      const auto kind_name = require_string(*kind_it, role);
      if (kind_name == "metric") {
        kind = TableKind::metric;
      } else if (kind_name == "semimetric") {
        kind = TableKind::semimetric;
      } else {
        fail(role, "unknown table kind \"" + kind_name + "\"");
      }
    }
    const ojson& v = require_field(entry, "values", role);
    if (v.is_string()) {
      named = v.get<std::string>();
    } else {
      values = &v;
    }
  } else {
    fail(role, "expected a table object or a named table");
  }

  if (!named.empty()) {
    if (named == "euclidean") {
      if (!space.has_coords()) {
        fail(role, "euclidean table needs space coordinates");
      }
      return euclidean_table(space);
    }
    if (named == "discrete") return discrete_table(space.size());
    fail(role, "unknown named table \"" + named + "\"");
  }

  if (!values->is_array()) fail(role, "\"values\" must be a matrix");
  std::vector<std::vector<double>> matrix;
  matrix.reserve(values->size());
  for (const auto& row_doc : *values) {
    if (!row_doc.is_array()) fail(role, "\"values\" must be a matrix");
    std::vector<double> row;
    row.reserve(row_doc.size());
    for (const auto& cell : row_doc) {
      row.push_back(number_from(cell, role));
    }
    matrix.push_back(std::move(row));
  }
  if (matrix.size() != space.size()) {
    fail(role, "table size does not match the point count");
  }
  return DistanceTable(std::move(matrix), kind);
}

SingleMap single_map_from_json(const ojson& map, const PointSpace& space) {
  const std::string_view ctx = "map";
  if (!map.is_object()) fail(ctx, "expected an object");
  std::vector<std::size_t> image(space.size(), 0);
  std::vector<char> seen(space.size(), 0);
  for (const auto& [label, target] : map.items()) {
    const std::size_t i = space.index_of(label);
    image[i] = space.index_of(require_string(target, ctx));
    seen[i] = 1;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!seen[i]) fail(ctx, "no image for point \"" + space.label(i) + "\"");
  }
  return SingleMap(std::move(image));
}

MultiMap multi_map_from_json(const ojson& map, const PointSpace& space) {
  const std::string_view ctx = "map";
  if (!map.is_object()) fail(ctx, "expected an object");
  std::vector<std::optional<IndexSubset>> images(space.size());
  for (const auto& [label, target] : map.items()) {
    const std::size_t i = space.index_of(label);
    if (!target.is_array()) fail(ctx, "each image must be an array of labels");
    std::vector<std::size_t> members;
    members.reserve(target.size());
    for (const auto& member : target) {
      members.push_back(space.index_of(require_string(member, ctx)));
    }
    images[i] = IndexSubset(std::move(members));
  }
  std::vector<IndexSubset> resolved;
  resolved.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!images[i]) fail(ctx, "no image for point \"" + space.label(i) + "\"");
    resolved.push_back(std::move(*images[i]));
  }
  return MultiMap(std::move(resolved));
}

ComparisonFunction phi_from_json(const ojson& phi) {
  const std::string_view ctx = "phi";
  if (!phi.is_object()) fail(ctx, "expected an object");
  const auto family = require_string(require_field(phi, "family", ctx), ctx);
  if (family == "linear") {
    return ComparisonFunction::linear(
        number_from(require_field(phi, "lambda", ctx), "phi.lambda"));
  }
  if (family == "log_half") return ComparisonFunction::log_half();
  if (family == "arctan_piecewise") {
    return ComparisonFunction::arctan_piecewise(
        number_from(require_field(phi, "lambda1", ctx), "phi.lambda1"),
        number_from(require_field(phi, "lambda2", ctx), "phi.lambda2"));
  }
  if (family == "tabulated") {
    const ojson& rows_doc = require_field(phi, "points", ctx);
    if (!rows_doc.is_array()) fail(ctx, "\"points\" must be an array of pairs");
    std::vector<std::array<double, 2>> rows;
    rows.reserve(rows_doc.size());
    for (const auto& pair : rows_doc) {
      if (!pair.is_array() || pair.size() != 2) {
        fail(ctx, "\"points\" must be an array of [t, phi_t] pairs");
      }
      rows.push_back({number_from(pair[0], "phi.points"),
                      number_from(pair[1], "phi.points")});
    }
    return ComparisonFunction::tabulated(std::move(rows));
  }
  fail(ctx, "unknown family \"" + family + "\"");
}

namespace {

LineMetric line_metric_from_json(const ojson& entry, std::string_view role) {
  if (entry.is_string()) {
    const auto name = entry.get<std::string>();
    if (name == "euclidean") return LineMetric::euclidean();
    fail(role, "unknown line metric \"" + name + "\"");
  }
  if (!entry.is_object()) fail(role, "expected a line metric");
  const auto kind = require_string(require_field(entry, "kind", role), role);
  if (kind == "euclidean") return LineMetric::euclidean();
  if (kind == "split_gap") {
    return LineMetric::split_gap(
        number_from(require_field(entry, "split", role), role),
        number_from(require_field(entry, "gap", role), role));
  }
  fail(role, "unknown line metric kind \"" + kind + "\"");
}

}  // namespace

ScanProblem scan_from_json(const ojson& scan) {
  const std::string_view ctx = "scan";
  if (!scan.is_object()) fail(ctx, "expected an object");
  ScanProblem problem;
  problem.lo = number_from(require_field(scan, "lo", ctx), "scan.lo");
  problem.hi = number_from(require_field(scan, "hi", ctx), "scan.hi");

  const ojson& map_doc = require_field(scan, "map", ctx);
  if (!map_doc.is_object()) fail(ctx, "\"map\" must be an object");
  problem.map.split =
      number_from(require_field(map_doc, "split", ctx), "scan.map.split");
  const ojson& below = require_field(map_doc, "below", ctx);
  const ojson& above = require_field(map_doc, "above", ctx);
  for (const auto* branch : {&below, &above}) {
    if (!branch->is_object()) fail(ctx, "map branches must be objects");
  }
  problem.map.below_slope =
      number_from(require_field(below, "slope", ctx), "scan.map.below");
  problem.map.below_offset =
      number_from(require_field(below, "offset", ctx), "scan.map.below");
  problem.map.above_slope =
      number_from(require_field(above, "slope", ctx), "scan.map.above");
  problem.map.above_offset =
      number_from(require_field(above, "offset", ctx), "scan.map.above");

  problem.d1 = line_metric_from_json(require_field(scan, "d1", ctx), "scan.d1");
  problem.d2 = line_metric_from_json(require_field(scan, "d2", ctx), "scan.d2");
  problem.d3 = line_metric_from_json(require_field(scan, "d3", ctx), "scan.d3");
  return problem;
}

ProblemInput load_problem(const ojson& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("problem: expected a JSON object");
  }
  ProblemInput input;

  if (const auto space_it = doc.find("space"); space_it != doc.end()) {
    input.points = space_points_from_json(*space_it);
    if (const auto tables_it = space_it->find("tables");
        tables_it != space_it->end()) {
      if (!tables_it->is_object()) {
        throw std::invalid_argument("space: \"tables\" must be an object");
      }
      for (const auto& [name, entry] : tables_it->items()) {
        input.tables.emplace(name,
                             table_from_json(entry, *input.points, name));
      }
    }
  }

  if (const auto map_it = doc.find("map"); map_it != doc.end()) {
    if (!input.points) {
      throw std::invalid_argument("map: needs a \"space\" to refer to");
    }
    if (!map_it->is_object() || map_it->empty()) {
      throw std::invalid_argument("map: expected a nonempty object");
    }
    // A map is single or multi valued by the shape of its first image;
    // the loaders reject mixed shapes.
    if (map_it->begin().value().is_array()) {
      input.multi_map = multi_map_from_json(*map_it, *input.points);
    } else {
      input.single_map = single_map_from_json(*map_it, *input.points);
    }
  }

  if (const auto phi_it = doc.find("phi"); phi_it != doc.end()) {
    input.phi = phi_from_json(*phi_it);
  }
  if (const auto lambda_it = doc.find("lambda"); lambda_it != doc.end()) {
    input.lambda = number_from(*lambda_it, "lambda");
  }
  if (const auto class_it = doc.find("class"); class_it != doc.end()) {
    input.check_class = require_string(*class_it, "class");
  }
  if (const auto scan_it = doc.find("scan"); scan_it != doc.end()) {
    input.scan = scan_from_json(*scan_it);
  }
  return input;
}

ProblemInput load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open problem file: " + path);
  }
  return load_problem(ojson::parse(in));
}

}  // namespace tripoint
