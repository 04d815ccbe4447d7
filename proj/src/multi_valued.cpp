#include "tripoint/multi_valued.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tripoint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_compatible(const MultiMap& f, std::size_t n) {
  if (f.size() != n) {
    throw std::invalid_argument("map and space have different sizes");
  }
}

void require_lambda(double lambda, MultiClass cls) {
  if (!(lambda > 0.0) || lambda >= multi_class_lambda_limit(cls)) {
    throw std::invalid_argument("lambda outside the class range");
  }
}

double ratio_of(double lhs, double rhs_arg) {
  if (rhs_arg > 0) return lhs / rhs_arg;
  return lhs > 0 ? kInf : 0.0;
}

}  // namespace

MultiMap::MultiMap(std::vector<IndexSubset> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("map needs at least one point");
  }
  for (const auto& image : images_) {
    if (image.members().back() >= images_.size()) {
      throw std::invalid_argument("map image points outside the space");
    }
  }
}

MultiMap MultiMap::lift(const SingleMap& f) {
  std::vector<IndexSubset> images;
  images.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    images.push_back(IndexSubset::singleton(f(i)));
  }
  return MultiMap(std::move(images));
}

std::string_view multi_class_name(MultiClass cls) {
  switch (cls) {
    case MultiClass::hhd: return "hhd";
    case MultiClass::hdd: return "hdd";
    case MultiClass::ddd: return "ddd";
    case MultiClass::hhh: return "hhh";
  }
  throw std::invalid_argument("unknown class");
}

double multi_class_lambda_limit(MultiClass cls) {
  return cls == MultiClass::hhh ? 0.5 : 1.0;
}

double multi_triple_lhs(const MultiMap& f, const DistanceTable& d,
                        std::size_t x, std::size_t y, std::size_t z,
                        MultiClass cls) {
  require_compatible(f, d.size());
  if (x >= d.size() || y >= d.size() || z >= d.size()) {
    throw std::domain_error("triple index outside the space");
  }
  if (x == y || y == z || z == x) {
    throw std::domain_error("triple points must be pairwise distinct");
  }
  const IndexSubset& fx = f(x);
  const IndexSubset& fy = f(y);
  const IndexSubset& fz = f(z);
  switch (cls) {
    case MultiClass::hhd:
      return hausdorff_distance(fx, fy, d) + hausdorff_distance(fy, fz, d) +
             set_diameter_distance(fz, fx, d);
    case MultiClass::hdd:
      return hausdorff_distance(fx, fy, d) + set_diameter_distance(fy, fz, d) +
             set_diameter_distance(fz, fx, d);
    case MultiClass::ddd:
      return set_diameter_distance(fx, fy, d) +
             set_diameter_distance(fy, fz, d) +
             set_diameter_distance(fz, fx, d);
    case MultiClass::hhh:
      return hausdorff_distance(fx, fy, d) + hausdorff_distance(fy, fz, d) +
             hausdorff_distance(fz, fx, d);
  }
  throw std::invalid_argument("unknown class");
}

ContractionReport verify_three_point_multi(const MultiMap& f,
                                           const DistanceTable& d,
                                           double lambda, MultiClass cls) {
  require_compatible(f, d.size());
  require_lambda(lambda, cls);
  const std::size_t n = d.size();
  if (n < 3) {
    throw std::invalid_argument("three-point check needs at least three points");
  }
  ContractionReport report;
  double best = -kInf;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const double lhs = multi_triple_lhs(f, d, x, y, z, cls);
        const double rhs_arg = d(x, y) + d(y, z) + d(z, x);
        const double bound = lambda * rhs_arg;
        ++report.checked;
        if (lhs > bound + kCheckTolerance) {
          report.violations.push_back(
              Violation{{x, y, z}, lhs, rhs_arg, bound});
        }
        const double ratio = ratio_of(lhs, rhs_arg);
        if (ratio > best) {
          best = ratio;
          report.worst = {x, y, z};
        }
      }
    }
  }
  report.max_ratio = best;
  report.holds = report.violations.empty();
  return report;
}

ClassLadder class_inclusion_check(const MultiMap& f, const DistanceTable& d,
                                  double lambda) {
  ClassLadder ladder;
  ladder.ddd = verify_three_point_multi(f, d, lambda, MultiClass::ddd);
  ladder.hdd = verify_three_point_multi(f, d, lambda, MultiClass::hdd);
  ladder.hhd = verify_three_point_multi(f, d, lambda, MultiClass::hhd);
  ladder.chain_consistent = (!ladder.ddd.holds || ladder.hdd.holds) &&
                            (!ladder.hdd.holds || ladder.hhd.holds);
  return ladder;
}

MutualMembershipReport check_no_mutual_membership(const MultiMap& f) {
  MutualMembershipReport report;
  report.ok = true;
  for (std::size_t u = 0; u < f.size(); ++u) {
    for (std::size_t v : f(u).members()) {
      if (v > u && f(v).contains(u)) {
        report.ok = false;
        report.witness = {u, v};
        return report;
      }
    }
  }
  return report;
}

ContractionReport verify_nadler(const MultiMap& f, const DistanceTable& d,
                                double lambda) {
  require_compatible(f, d.size());
  if (!(lambda > 0.0) || lambda >= 1.0) {
    throw std::invalid_argument("pairwise contraction needs lambda in (0, 1)");
  }
  ContractionReport report;
  double best = -kInf;
  for (std::size_t u = 0; u + 1 < d.size(); ++u) {
    for (std::size_t v = u + 1; v < d.size(); ++v) {
      const double lhs = hausdorff_distance(f(u), f(v), d);
      const double rhs_arg = d(u, v);
      const double bound = lambda * rhs_arg;
      ++report.checked;
      if (lhs > bound + kCheckTolerance) {
        report.violations.push_back(Violation{{u, v}, lhs, rhs_arg, bound});
      }
      const double ratio = ratio_of(lhs, rhs_arg);
      if (ratio > best) {
        best = ratio;
        report.worst = {u, v};
      }
    }
  }
  report.max_ratio = best;
  report.holds = report.violations.empty();
  return report;
}

MultiOrbitTrace multi_orbit(const MultiMap& f, const DistanceTable& d,
                            std::size_t start, double lambda, MultiClass cls,
                            std::size_t max_steps) {
  require_compatible(f, d.size());
  require_lambda(lambda, cls);
  if (start >= d.size()) {
    throw std::domain_error("orbit start outside the space");
  }
  if (max_steps == 0) {
    throw std::domain_error("orbit needs max_steps >= 1");
  }
  MultiOrbitTrace trace;
  trace.points.push_back(start);
  std::vector<char> visited(d.size(), 0);
  visited[start] = 1;

  for (;;) {
    const std::size_t u = trace.points.back();
    if (f(u).contains(u)) {
      trace.stopped = MultiOrbitStop::fixed_point;
      break;
    }
    if (trace.step_d.size() >= max_steps) {
      trace.stopped = MultiOrbitStop::iteration_cap;
      break;
    }
    std::size_t v = f(u).members().front();
    for (std::size_t w : f(u).members()) {
      if (d(u, w) < d(u, v)) v = w;
    }
    const std::size_t n = trace.step_d.size();
    trace.step_d.push_back(d(u, v));
    trace.slack.push_back(n == 0 ? 0.0
                                 : std::pow(lambda, static_cast<double>(n)));
    if (n == 0) {
      trace.selection_bound.push_back(kInf);
    } else {
      const std::size_t prev = trace.points[trace.points.size() - 2];
      trace.selection_bound.push_back(hausdorff_distance(f(prev), f(u), d) +
                                      trace.slack.back());
    }
    trace.points.push_back(v);

    if (visited[v]) {
      trace.stopped = MultiOrbitStop::cycle;
      break;
    }
    visited[v] = 1;
  }

  if (const std::size_t last = trace.points.back(); f(last).contains(last)) {
    trace.fixed_point = last;
  }

  for (std::size_t i = 0; i + 2 < trace.points.size(); ++i) {
    const std::size_t a = trace.points[i];
    const std::size_t b = trace.points[i + 1];
    const std::size_t c = trace.points[i + 2];
    trace.perimeter_seq.push_back(d(a, b) + d(b, c) + d(c, a));
  }

  if (!trace.perimeter_seq.empty()) {
    const double p0 = trace.perimeter_seq.front();
    trace.step_bound.reserve(trace.step_d.size());
    for (std::size_t n = 0; n < trace.step_d.size(); ++n) {
      const double nn = static_cast<double>(n);
      const double ln = std::pow(lambda, nn);
      const double pair = ln + ln * lambda;
      if (cls == MultiClass::hhh) {
        trace.step_bound.push_back(std::pow(2.0 * lambda, nn) * p0 +
                                   2.0 * (std::pow(2.0, nn) - 1.0) * pair);
      } else {
        trace.step_bound.push_back(ln * p0 + nn * pair);
      }
    }
  }
  return trace;
}

std::vector<std::size_t> fixed_points(const MultiMap& f) {
  std::vector<std::size_t> fixed;
  for (std::size_t u = 0; u < f.size(); ++u) {
    if (f(u).contains(u)) fixed.push_back(u);
  }
  return fixed;
}

}  // namespace tripoint
