#include "tripoint/cli.hpp"

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "tripoint/comparison.hpp"
#include "tripoint/fixtures.hpp"
#include "tripoint/json_io.hpp"
#include "tripoint/multi_valued.hpp"
#include "tripoint/single_valued.hpp"
#include "tripoint/spaces.hpp"

namespace tripoint::cli {
namespace {

using Warnings = std::vector<std::string>;

std::string tuple_text(const PointSpace& space,
                       const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out << ", ";
    out << space.label(idx[i]);
  }
  out << ")";
  return out.str();
}

ojson label_array(const PointSpace& space,
                  const std::vector<std::size_t>& idx) {
  ojson arr = ojson::array();
  for (std::size_t i : idx) arr.push_back(space.label(i));
  return arr;
}

ojson number_or_null(const std::optional<double>& x) {
  return x ? number_entry(*x) : ojson(nullptr);
}

ojson number_array(const std::vector<double>& xs) {
  ojson arr = ojson::array();
  for (double x : xs) arr.push_back(number_entry(x));
  return arr;
}

void emit_warnings(ojson& doc, const Warnings& warnings) {
  doc["warnings"] = warnings;
}

void print_warnings(std::ostream& out, const Warnings& warnings) {
  for (const auto& w : warnings) out << "warning: " << w << "\n";
}

ojson contraction_json(const ContractionReport& report,
                       const PointSpace& space) {
  ojson doc;
  doc["holds"] = report.holds;
  doc["checked"] = report.checked;
  doc["max_ratio"] = number_or_null(report.max_ratio);
  doc["worst"] = label_array(space, report.worst);
  ojson violations = ojson::array();
  for (const auto& v : report.violations) {
    ojson entry;
    entry["where"] = label_array(space, v.where);
    entry["lhs"] = number_entry(v.lhs);
    entry["rhs_arg"] = number_entry(v.rhs_arg);
    entry["bound"] = number_entry(v.bound);
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  return doc;
}

void contraction_text(std::ostream& out, const ContractionReport& report,
                      const PointSpace& space) {
  out << "  checked: " << report.checked << "\n";
  out << "  holds: " << (report.holds ? "yes" : "no") << "\n";
  if (report.max_ratio) {
    out << "  max ratio: " << format_number(*report.max_ratio) << " at "
        << tuple_text(space, report.worst) << "\n";
  } else {
    out << "  worst tuple: " << tuple_text(space, report.worst) << "\n";
  }
  for (const auto& v : report.violations) {
    out << "  violation " << tuple_text(space, v.where) << ": lhs "
        << format_number(v.lhs) << " > bound " << format_number(v.bound)
        << " (rhs_arg " << format_number(v.rhs_arg) << ")\n";
  }
}

std::string_view orbit_stop_name(OrbitStop stop) {
  switch (stop) {
    case OrbitStop::fixed_point: return "fixed_point";
    case OrbitStop::tail_below_tolerance: return "tail_below_tolerance";
    case OrbitStop::iteration_cap: return "iteration_cap";
    case OrbitStop::cycle: return "cycle";
  }
  return "unknown";
}

std::string_view span_status_name(SeedSpanStatus status) {
  switch (status) {
    case SeedSpanStatus::ok: return "ok";
    case SeedSpanStatus::fixed_point_early: return "fixed_point_early";
    case SeedSpanStatus::returned_to_start: return "returned_to_start";
  }
  return "unknown";
}

std::string_view multi_stop_name(MultiOrbitStop stop) {
  switch (stop) {
    case MultiOrbitStop::fixed_point: return "fixed_point";
    case MultiOrbitStop::iteration_cap: return "iteration_cap";
    case MultiOrbitStop::cycle: return "cycle";
  }
  return "unknown";
}

// ---- problem assembly ----

void require_valid(const DistanceTable& table, const PointSpace& space,
                   std::string_view name) {
  const auto violations = validate_distance_table(table);
  if (violations.empty()) return;
  const auto& first = violations.front();
  std::ostringstream msg;
  msg << "table " << name << " fails the " << first.axiom << " axiom at "
      << tuple_text(space, first.where) << "; " << violations.size()
      << " violation(s) total, run validate for the list";
  throw std::invalid_argument(msg.str());
}

const PointSpace& points_of(const ProblemInput& input) {
  if (!input.points) {
    throw std::invalid_argument("problem file has no \"space\"");
  }
  return *input.points;
}

const DistanceTable& named_table(const ProblemInput& input,
                                 std::string_view name) {
  const auto it = input.tables.find(name);
  if (it == input.tables.end()) {
    throw std::invalid_argument(std::string("problem file has no table \"") +
                                std::string(name) + "\"");
  }
  return it->second;
}

void note_semimetric(const DistanceTable& table, std::string_view name,
                     Warnings& warnings) {
  if (table.kind() == TableKind::semimetric) {
    warnings.push_back(std::string("table ") + std::string(name) +
                       " is semimetric: triangle inequality not checked");
  }
}

TriMetricSpace tri_from(const ProblemInput& input, Warnings& warnings) {
  const PointSpace& space = points_of(input);
  const auto& d1 = named_table(input, "d1");
  const auto& d2 = named_table(input, "d2");
  const auto& d3 = named_table(input, "d3");
  require_valid(d1, space, "d1");
  require_valid(d2, space, "d2");
  require_valid(d3, space, "d3");
  note_semimetric(d2, "d2", warnings);
  note_semimetric(d3, "d3", warnings);
  return TriMetricSpace(space, d1, d2, d3);
}

// Multi-valued problems carry one table, accepted as "d" or "d1".
const DistanceTable& multi_table(const ProblemInput& input) {
  if (const auto it = input.tables.find("d"); it != input.tables.end()) {
    return it->second;
  }
  return named_table(input, "d1");
}

ComparisonFunction phi_from_input(const ProblemInput& input) {
  if (input.phi) return *input.phi;
  if (input.lambda) return ComparisonFunction::linear(*input.lambda);
  throw std::invalid_argument("problem file needs \"phi\" or \"lambda\"");
}

MultiClass class_from_input(const ProblemInput& input) {
  if (!input.check_class) return MultiClass::hhd;
  const std::string& name = *input.check_class;
  if (name == "hhd") return MultiClass::hhd;
  if (name == "hdd") return MultiClass::hdd;
  if (name == "ddd") return MultiClass::ddd;
  if (name == "hhh") return MultiClass::hhh;
  throw std::invalid_argument("unknown contraction class \"" + name + "\"");
}

double lambda_from_input(const ProblemInput& input) {
  if (!input.lambda) {
    throw std::invalid_argument("multi-valued check needs \"lambda\"");
  }
  return *input.lambda;
}

// ---- tasks ----

int run_validate(const ProblemInput& input, bool json, std::ostream& out) {
  const PointSpace& space = points_of(input);
  if (input.tables.empty()) {
    throw std::invalid_argument("problem file has no tables to validate");
  }
  Warnings warnings;
  bool all_valid = true;
  ojson tables_doc;
  std::ostringstream text;
  for (const auto& [name, table] : input.tables) {
    const auto violations = validate_distance_table(table);
    all_valid = all_valid && violations.empty();
    note_semimetric(table, name, warnings);

    ojson entry;
    entry["kind"] = std::string(table_kind_name(table.kind()));
    entry["valid"] = violations.empty();
    ojson vio = ojson::array();
    for (const auto& v : violations) {
      ojson one;
      one["axiom"] = v.axiom;
      one["where"] = label_array(space, v.where);
      one["lhs"] = number_entry(v.lhs);
      one["rhs"] = number_entry(v.rhs);
      vio.push_back(std::move(one));
    }
    entry["violations"] = std::move(vio);
    tables_doc[name] = std::move(entry);

    text << "table " << name << " (" << table_kind_name(table.kind())
         << "): ";
    if (violations.empty()) {
      text << "ok\n";
    } else {
      text << violations.size() << " violation(s)\n";
      for (const auto& v : violations) {
        text << "  " << v.axiom << " " << tuple_text(space, v.where) << ": "
             << format_number(v.lhs) << " vs " << format_number(v.rhs)
             << "\n";
      }
    }
  }

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "validate";
    doc["tables"] = std::move(tables_doc);
    doc["ok"] = all_valid;
    emit_warnings(doc, warnings);
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
    out << "result: " << (all_valid ? "all tables valid" : "invalid") << "\n";
    print_warnings(out, warnings);
  }
  return all_valid ? kExitPositive : kExitNegative;
}

int run_verify_single(const ProblemInput& input, bool json, bool with_kappa,
                      std::ostream& out) {
  Warnings warnings;
  const TriMetricSpace tri = tri_from(input, warnings);
  const ComparisonFunction phi = phi_from_input(input);
  const SingleMap& f = *input.single_map;
  const auto report = verify_three_point_single(f, tri, phi);
  const auto cycles = check_no_two_cycles(f);
  std::optional<double> kappa;
  if (with_kappa) {
    kappa = comparability_kappa(tri);
    if (*kappa > 1e6) {
      warnings.push_back(
          "comparability constant exceeds 1e6, the kappa bound is "
          "near-vacuous");
    }
  }
  const bool positive = report.holds && cycles.ok;

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "verify";
    doc["mode"] = "single";
    doc["phi"] = phi.describe();
    ojson body = contraction_json(report, tri.space);
    for (auto& [key, value] : body.items()) doc[key] = std::move(value);
    ojson cyc;
    cyc["ok"] = cycles.ok;
    cyc["witness"] = cycles.witness
                         ? label_array(tri.space, {(*cycles.witness)[0],
                                                   (*cycles.witness)[1]})
                         : ojson(nullptr);
    doc["no_two_cycles"] = std::move(cyc);
    if (with_kappa) doc["kappa"] = number_entry(*kappa);
    emit_warnings(doc, warnings);
    out << doc.dump(2) << "\n";
  } else {
    out << "three-point check (single-valued, phi = " << phi.describe()
        << ")\n";
    contraction_text(out, report, tri.space);
    out << "  no two-cycles: " << (cycles.ok ? "ok" : "violated");
    if (cycles.witness) {
      out << " at "
          << tuple_text(tri.space,
                        {(*cycles.witness)[0], (*cycles.witness)[1]});
    }
    out << "\n";
    if (with_kappa) {
      out << "  kappa: " << format_number(*kappa) << "\n";
    }
    out << "verdict: " << (positive ? "holds" : "fails") << "\n";
    print_warnings(out, warnings);
  }
  return positive ? kExitPositive : kExitNegative;
}

int run_verify_multi(const ProblemInput& input, bool json, std::ostream& out) {
  Warnings warnings;
  const PointSpace& space = points_of(input);
  const DistanceTable& d = multi_table(input);
  require_valid(d, space, "d");
  const double lambda = lambda_from_input(input);
  const MultiClass cls = class_from_input(input);
  const MultiMap& f = *input.multi_map;
  const auto report = verify_three_point_multi(f, d, lambda, cls);
  const auto mutual = check_no_mutual_membership(f);
  const bool positive = report.holds && mutual.ok;

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "verify";
    doc["mode"] = "multi";
    doc["class"] = std::string(multi_class_name(cls));
    doc["lambda"] = number_entry(lambda);
    ojson body = contraction_json(report, space);
    for (auto& [key, value] : body.items()) doc[key] = std::move(value);
    ojson mm;
    mm["ok"] = mutual.ok;
    mm["witness"] =
        mutual.witness
            ? label_array(space, {(*mutual.witness)[0], (*mutual.witness)[1]})
            : ojson(nullptr);
    doc["no_mutual_membership"] = std::move(mm);
    emit_warnings(doc, warnings);
    out << doc.dump(2) << "\n";
  } else {
    out << "three-point check (multi-valued, class " << multi_class_name(cls)
        << ", lambda = " << format_number(lambda) << ")\n";
    contraction_text(out, report, space);
    out << "  no mutual membership: " << (mutual.ok ? "ok" : "violated");
    if (mutual.witness) {
      out << " at "
          << tuple_text(space, {(*mutual.witness)[0], (*mutual.witness)[1]});
    }
    out << "\n";
    out << "verdict: " << (positive ? "holds" : "fails") << "\n";
    print_warnings(out, warnings);
  }
  return positive ? kExitPositive : kExitNegative;
}

int run_verify(const ProblemInput& input, bool json, bool with_kappa,
               std::ostream& out) {
  if (input.single_map) return run_verify_single(input, json, with_kappa, out);
  if (input.multi_map) return run_verify_multi(input, json, out);
  throw std::invalid_argument("problem file has no \"map\"");
}

int run_fixpoints(const ProblemInput& input, bool json, std::ostream& out) {
  const PointSpace& space = points_of(input);
  std::vector<std::size_t> fixed;
  std::string mode;
  if (input.single_map) {
    fixed = fixed_points(*input.single_map);
    mode = "single";
  } else if (input.multi_map) {
    fixed = fixed_points(*input.multi_map);
    mode = "multi";
  } else {
    throw std::invalid_argument("problem file has no \"map\"");
  }

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "fixpoints";
    doc["mode"] = mode;
    doc["fixed_points"] = label_array(space, fixed);
    doc["count"] = fixed.size();
    emit_warnings(doc, {});
    out << doc.dump(2) << "\n";
  } else {
    out << "fixed points (" << mode << "-valued): ";
    if (fixed.empty()) {
      out << "none\n";
    } else {
      out << tuple_text(space, fixed) << "\n";
    }
  }
  return kExitPositive;
}

int run_iterate_single(const ProblemInput& input, const std::string& from,
                       std::size_t max_iter, double tol, bool json,
                       std::ostream& out) {
  Warnings warnings;
  const TriMetricSpace tri = tri_from(input, warnings);
  const ComparisonFunction phi = phi_from_input(input);
  const std::size_t start = tri.space.index_of(from);
  const auto trace =
      picard_orbit(*input.single_map, tri, start, phi, max_iter, tol);
  const bool positive = trace.stopped == OrbitStop::fixed_point ||
                        trace.stopped == OrbitStop::tail_below_tolerance;

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "iterate";
    doc["mode"] = "single";
    doc["phi"] = phi.describe();
    doc["from"] = from;
    doc["points"] = label_array(tri.space, trace.points);
    doc["step_d1"] = number_array(trace.step_d1);
    doc["step_bound"] = number_array(trace.step_bound);
    doc["initial_span"] = number_or_null(trace.initial_span);
    doc["span_status"] = std::string(span_status_name(trace.span_status));
    doc["stopped"] = std::string(orbit_stop_name(trace.stopped));
    doc["fixed_point"] = trace.fixed_point
                             ? ojson(tri.space.label(*trace.fixed_point))
                             : ojson(nullptr);
    emit_warnings(doc, warnings);
    out << doc.dump(2) << "\n";
  } else {
    out << "orbit (single-valued, phi = " << phi.describe() << ") from "
        << from << "\n";
    out << "  points:";
    for (std::size_t p : trace.points) out << " " << tri.space.label(p);
    out << "\n";
    if (trace.initial_span) {
      out << "  initial span: " << format_number(*trace.initial_span) << "\n";
    } else {
      out << "  initial span: undefined ("
          << span_status_name(trace.span_status) << ")\n";
    }
    for (std::size_t k = 0; k < trace.step_d1.size(); ++k) {
      out << "  step " << k << ": d1 = " << format_number(trace.step_d1[k]);
      if (k < trace.step_bound.size()) {
        out << ", bound = " << format_number(trace.step_bound[k]);
      }
      out << "\n";
    }
    out << "  stopped: " << orbit_stop_name(trace.stopped);
    if (trace.fixed_point) {
      out << " at " << tri.space.label(*trace.fixed_point);
    }
    out << "\n";
    print_warnings(out, warnings);
  }
  return positive ? kExitPositive : kExitNegative;
}

int run_iterate_multi(const ProblemInput& input, const std::string& from,
                      std::size_t max_iter, bool json, std::ostream& out) {
  Warnings warnings;
  const PointSpace& space = points_of(input);
  const DistanceTable& d = multi_table(input);
  require_valid(d, space, "d");
  const double lambda = lambda_from_input(input);
  const MultiClass cls = class_from_input(input);
  const std::size_t start = space.index_of(from);
  const auto trace =
      multi_orbit(*input.multi_map, d, start, lambda, cls, max_iter);
  const bool positive = trace.stopped == MultiOrbitStop::fixed_point;

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "iterate";
    doc["mode"] = "multi";
    doc["class"] = std::string(multi_class_name(cls));
    doc["lambda"] = number_entry(lambda);
    doc["from"] = from;
    doc["points"] = label_array(space, trace.points);
    doc["step_d"] = number_array(trace.step_d);
    doc["slack"] = number_array(trace.slack);
    doc["selection_bound"] = number_array(trace.selection_bound);
    doc["perimeter_seq"] = number_array(trace.perimeter_seq);
    doc["step_bound"] = number_array(trace.step_bound);
    doc["stopped"] = std::string(multi_stop_name(trace.stopped));
    doc["fixed_point"] = trace.fixed_point
                             ? ojson(space.label(*trace.fixed_point))
                             : ojson(nullptr);
    emit_warnings(doc, warnings);
    out << doc.dump(2) << "\n";
  } else {
    out << "orbit (multi-valued, class " << multi_class_name(cls)
        << ", lambda = " << format_number(lambda) << ") from " << from << "\n";
    out << "  points:";
    for (std::size_t p : trace.points) out << " " << space.label(p);
    out << "\n";
    for (std::size_t k = 0; k < trace.step_d.size(); ++k) {
      out << "  step " << k << ": d = " << format_number(trace.step_d[k])
          << ", slack = " << format_number(trace.slack[k]);
      if (k == 0) {
        out << ", selection bound: none (free choice)";
      } else {
        out << ", selection bound = "
            << format_number(trace.selection_bound[k]);
      }
      if (k < trace.step_bound.size()) {
        out << ", step bound = " << format_number(trace.step_bound[k]);
      }
      out << "\n";
    }
    if (!trace.perimeter_seq.empty()) {
      out << "  perimeters:";
      for (double p : trace.perimeter_seq) out << " " << format_number(p);
      out << "\n";
    }
    out << "  stopped: " << multi_stop_name(trace.stopped);
    if (trace.fixed_point) out << " at " << space.label(*trace.fixed_point);
    out << "\n";
    print_warnings(out, warnings);
  }
  return positive ? kExitPositive : kExitNegative;
}

int run_iterate(const ProblemInput& input, const std::string& from,
                std::size_t max_iter, double tol, bool json,
                std::ostream& out) {
  if (input.single_map) {
    return run_iterate_single(input, from, max_iter, tol, json, out);
  }
  if (input.multi_map) {
    return run_iterate_multi(input, from, max_iter, json, out);
  }
  throw std::invalid_argument("problem file has no \"map\"");
}

int run_scan(const ProblemInput& input, std::size_t segments, bool json,
             std::ostream& out) {
  if (!input.scan) {
    throw std::invalid_argument("problem file has no \"scan\" section");
  }
  const ScanProblem& problem = *input.scan;
  const auto grid = SampledDomain::uniform(problem.lo, problem.hi, segments);
  const auto result =
      sampled_ratio_scan(problem.map, grid, problem.d1, problem.d2,
                         problem.d3);
  Warnings warnings{
      "certificate at grid resolution: only the sampled points are checked"};
  std::optional<bool> holds;
  if (input.lambda) {
    holds = result.max_ratio <= *input.lambda + kCheckTolerance;
  }

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "scan";
    doc["segments"] = segments;
    doc["points"] = grid.points.size();
    doc["checked"] = result.checked;
    doc["max_ratio"] = number_entry(result.max_ratio);
    ojson worst = ojson::array();
    for (double w : result.worst) worst.push_back(number_entry(w));
    doc["worst"] = std::move(worst);
    doc["lambda"] = number_or_null(input.lambda);
    doc["holds"] = holds ? ojson(*holds) : ojson(nullptr);
    emit_warnings(doc, warnings);
    out << doc.dump(2) << "\n";
  } else {
    out << "sampled ratio scan, " << grid.points.size() << " points ("
        << segments << " segments)\n";
    out << "  triples checked: " << result.checked << "\n";
    out << "  max ratio: " << format_number(result.max_ratio) << " at ("
        << format_number(result.worst[0]) << ", "
        << format_number(result.worst[1]) << ", "
        << format_number(result.worst[2]) << ")\n";
    if (holds) {
      out << "  against lambda " << format_number(*input.lambda) << ": "
          << (*holds ? "holds" : "fails") << "\n";
    }
    print_warnings(out, warnings);
  }
  if (holds && !*holds) return kExitNegative;
  return kExitPositive;
}

int run_fixture_table1(bool json, std::ostream& out) {
  const TriMetricSpace tri = fixtures::table1_space();
  const SingleMap f = fixtures::table1_map();
  const auto rows = fixtures::table1_rows();

  struct Row {
    std::array<std::size_t, 3> triple;
    double lhs;
    double rhs;
    double ratio;
  };
  std::vector<Row> computed;
  computed.reserve(rows.size());
  for (const auto& [x, y, z] : rows) {
    const auto terms = triple_lhs_rhs(f, tri, x, y, z);
    computed.push_back(
        Row{{x, y, z}, terms.lhs, terms.rhs_arg, terms.lhs / terms.rhs_arg});
  }
  const auto fit = fit_min_lambda(f, tri);
  const auto report =
      verify_three_point_single(f, tri, ComparisonFunction::linear(
                                            fit.max_ratio));
  const auto cycles = check_no_two_cycles(f);
  const auto fixed = fixed_points(f);

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "fixture";
    doc["name"] = "table1";
    ojson rows_doc = ojson::array();
    for (const auto& row : computed) {
      ojson entry;
      entry["triple"] = label_array(
          tri.space, {row.triple[0], row.triple[1], row.triple[2]});
      entry["A"] = number_entry(row.lhs);
      entry["B"] = number_entry(row.rhs);
      entry["R"] = number_entry(row.ratio);
      rows_doc.push_back(std::move(entry));
    }
    doc["rows"] = std::move(rows_doc);
    doc["min_lambda"] = number_entry(fit.max_ratio);
    doc["min_lambda_at"] = label_array(tri.space, fit.worst);
    ojson verify_doc;
    verify_doc["phi"] = ComparisonFunction::linear(fit.max_ratio).describe();
    verify_doc["holds"] = report.holds;
    verify_doc["checked"] = report.checked;
    doc["verify"] = std::move(verify_doc);
    doc["no_two_cycles"] = cycles.ok;
    doc["fixed_points"] = label_array(tri.space, fixed);
    emit_warnings(doc, {});
    out << doc.dump(2) << "\n";
  } else {
    out << "triple contraction table (" << computed.size() << " rows)\n";
    out << std::left << std::setw(16) << "  triple" << std::setw(20) << "A"
        << std::setw(24) << "B" << "R" << "\n";
    for (const auto& row : computed) {
      out << "  " << std::left << std::setw(14)
          << tuple_text(tri.space,
                        {row.triple[0], row.triple[1], row.triple[2]})
          << std::setw(20) << format_number(row.lhs) << std::setw(24)
          << format_number(row.rhs) << format_number(row.ratio) << "\n";
    }
    out << "  min workable slope: " << format_number(fit.max_ratio) << " at "
        << tuple_text(tri.space, fit.worst) << "\n";
    out << "  verify at that slope: " << (report.holds ? "holds" : "fails")
        << " over " << report.checked << " ordered triples\n";
    out << "  no two-cycles: " << (cycles.ok ? "ok" : "violated") << "\n";
    out << "  fixed points: " << tuple_text(tri.space, fixed) << "\n";
  }
  return kExitPositive;
}

int run_fixture_example35(bool json, std::ostream& out) {
  const PointSpace space = fixtures::example35_points();
  const DistanceTable d = fixtures::example35_table();
  const MultiMap f = fixtures::example35_map();
  const double lambda = 2.0 / 3.0;
  const auto class_report =
      verify_three_point_multi(f, d, lambda, MultiClass::hhd);
  const auto nadler = verify_nadler(f, d, lambda);
  const auto mutual = check_no_mutual_membership(f);
  const auto fixed = fixed_points(f);

  if (json) {
    ojson doc;
    doc["schema"] = 1;
    doc["task"] = "fixture";
    doc["name"] = "example35";
    ojson class_doc;
    class_doc["class"] = std::string(multi_class_name(MultiClass::hhd));
    class_doc["lambda"] = number_entry(lambda);
    ojson class_body = contraction_json(class_report, space);
    for (auto& [key, value] : class_body.items()) {
      class_doc[key] = std::move(value);
    }
    doc["class_check"] = std::move(class_doc);
    ojson nadler_doc;
    nadler_doc["lambda"] = number_entry(lambda);
    ojson nadler_body = contraction_json(nadler, space);
    for (auto& [key, value] : nadler_body.items()) {
      nadler_doc[key] = std::move(value);
    }
    doc["nadler"] = std::move(nadler_doc);
    doc["no_mutual_membership"] = mutual.ok;
    doc["fixed_points"] = label_array(space, fixed);
    emit_warnings(doc, {});
    out << doc.dump(2) << "\n";
  } else {
    out << "three-point check (multi-valued, class "
        << multi_class_name(MultiClass::hhd)
        << ", lambda = " << format_number(lambda) << ")\n";
    contraction_text(out, class_report, space);
    out << "pairwise set-contraction check at the same lambda\n";
    contraction_text(out, nadler, space);
    out << "no mutual membership: " << (mutual.ok ? "ok" : "violated")
        << "\n";
    out << "fixed points: " << tuple_text(space, fixed) << "\n";
  }
  return kExitPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"three-points contraction checker"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON report instead of text");

  std::string file;
  std::string from_label;
  std::string fixture_name;
  std::size_t max_iter = 1000;
  double tol = 1e-12;
  std::size_t segments = 128;
  bool with_kappa = false;

  auto* validate =
      app.add_subcommand("validate", "check distance-table axioms");
  validate->add_option("file", file, "problem file")->required();

  auto* verify =
      app.add_subcommand("verify", "check a three-points contraction");
  verify->add_option("file", file, "problem file")->required();
  verify->add_flag("--kappa", with_kappa,
                   "also compute the comparability constant");

  auto* fixpoints = app.add_subcommand("fixpoints", "list fixed points");
  fixpoints->add_option("file", file, "problem file")->required();

  auto* iterate = app.add_subcommand("iterate", "run an orbit with bounds");
  iterate->add_option("file", file, "problem file")->required();
  iterate->add_option("--from", from_label, "starting point label")
      ->required();
  iterate->add_option("--max-iter", max_iter, "step cap");
  iterate->add_option("--tol", tol, "tail-sum stopping tolerance");

  auto* scan =
      app.add_subcommand("scan", "grid scan of a sampled interval problem");
  scan->add_option("file", file, "problem file")->required();
  scan->add_option("--grid", segments, "number of grid segments");

  auto* fixture = app.add_subcommand("fixture", "run a built-in example");
  fixture->add_option("name", fixture_name, "fixture name")
      ->required()
      ->check(CLI::IsMember({"table1", "example35"}));

  for (auto* sub : {validate, verify, fixpoints, iterate, scan, fixture}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitStructural;
  }

  try {
    if (validate->parsed()) {
      return run_validate(load_problem_file(file), json, out);
    }
    if (verify->parsed()) {
      return run_verify(load_problem_file(file), json, with_kappa, out);
    }
    if (fixpoints->parsed()) {
      return run_fixpoints(load_problem_file(file), json, out);
    }
    if (iterate->parsed()) {
      return run_iterate(load_problem_file(file), from_label, max_iter, tol,
                         json, out);
    }
    if (scan->parsed()) {
      return run_scan(load_problem_file(file), segments, json, out);
    }
    if (fixture->parsed()) {
      return fixture_name == "table1" ? run_fixture_table1(json, out)
                                      : run_fixture_example35(json, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructural;
  }
  err << "error: no task selected\n";
  return kExitStructural;
}

}  // namespace tripoint::cli
