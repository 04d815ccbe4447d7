#include "tripoint/single_valued.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tripoint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_compatible(const SingleMap& f, std::size_t n) {
  if (f.size() != n) {
    throw std::invalid_argument("map and space have different sizes");
  }
}

double ratio_of(double lhs, double rhs_arg) {
  if (rhs_arg > 0) return lhs / rhs_arg;
  return lhs > 0 ? kInf : 0.0;
}

}  // namespace

SingleMap::SingleMap(std::vector<std::size_t> image) : image_(std::move(image)) {
  if (image_.empty()) {
    throw std::invalid_argument("map needs at least one point");
  }
  for (std::size_t v : image_) {
    if (v >= image_.size()) {
      throw std::invalid_argument("map image points outside the space");
    }
  }
}

TripleTerms triple_lhs_rhs(const SingleMap& f, const TriMetricSpace& m,
                           std::size_t x, std::size_t y, std::size_t z) {
  require_compatible(f, m.size());
  if (x >= m.size() || y >= m.size() || z >= m.size()) {
    throw std::domain_error("triple index outside the space");
  }
  if (x == y || y == z || z == x) {
    throw std::domain_error("triple points must be pairwise distinct");
  }
  const std::size_t fx = f(x), fy = f(y), fz = f(z);
  TripleTerms terms;
  terms.lhs = m.d1(fx, fy) + m.d2(fy, fz) + m.d3(fz, fx);
  terms.rhs_arg = m.d1(x, y) + m.d2(y, z) + m.d3(z, x);
  return terms;
}

ContractionReport verify_three_point_single(const SingleMap& f,
                                            const TriMetricSpace& m,
                                            const ComparisonFunction& phi) {
  require_compatible(f, m.size());
  const std::size_t n = m.size();
  ContractionReport report;
  const bool linear = phi.is_linear();
  double best = -kInf;  // ratio for a linear gauge, margin otherwise
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const auto terms = triple_lhs_rhs(f, m, x, y, z);
        const double bound = phi(terms.rhs_arg);
        ++report.checked;
        if (terms.lhs > bound + kCheckTolerance) {
          report.violations.push_back(
              Violation{{x, y, z}, terms.lhs, terms.rhs_arg, bound});
        }
        const double score =
            linear ? ratio_of(terms.lhs, terms.rhs_arg) : terms.lhs - bound;
        if (score > best) {
          best = score;
          report.worst = {x, y, z};
        }
      }
    }
  }
  if (linear) report.max_ratio = best;
  report.holds = report.violations.empty();
  return report;
}

TwoCycleReport check_no_two_cycles(const SingleMap& f) {
  TwoCycleReport report;
  report.ok = true;
  for (std::size_t u = 0; u < f.size(); ++u) {
    const std::size_t v = f(u);
    if (v != u && f(v) == u) {
      report.ok = false;
      report.witness = {u, v};
      return report;
    }
  }
  return report;
}

std::vector<std::size_t> fixed_points(const SingleMap& f) {
  std::vector<std::size_t> fixed;
  for (std::size_t u = 0; u < f.size(); ++u) {
    if (f(u) == u) fixed.push_back(u);
  }
  return fixed;
}

LambdaFit fit_min_lambda(const SingleMap& f, const TriMetricSpace& m) {
  require_compatible(f, m.size());
  const std::size_t n = m.size();
  LambdaFit fit;
  fit.max_ratio = -kInf;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const auto terms = triple_lhs_rhs(f, m, x, y, z);
        const double ratio = ratio_of(terms.lhs, terms.rhs_arg);
        if (ratio > fit.max_ratio) {
          fit.max_ratio = ratio;
          fit.worst = {x, y, z};
        }
      }
    }
  }
  return fit;
}

ContractionReport verify_banach(const SingleMap& f, const DistanceTable& d,
                                double lambda) {
  require_compatible(f, d.size());
  if (!(lambda >= 0.0) || lambda >= 1.0) {
    throw std::invalid_argument("pairwise contraction needs lambda in [0, 1)");
  }
  ContractionReport report;
  double best = -kInf;
  for (std::size_t u = 0; u + 1 < d.size(); ++u) {
    for (std::size_t v = u + 1; v < d.size(); ++v) {
      const double lhs = d(f(u), f(v));
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

OrbitTrace picard_orbit(const SingleMap& f, const TriMetricSpace& m,
                        std::size_t start, const ComparisonFunction& phi,
                        std::size_t max_steps, double tol) {
  require_compatible(f, m.size());
  if (start >= m.size()) {
    throw std::domain_error("orbit start outside the space");
  }
  if (max_steps == 0) {
    throw std::domain_error("orbit needs max_steps >= 1");
  }
  OrbitTrace trace;
  trace.points.push_back(start);
  std::vector<char> visited(m.size(), 0);
  visited[start] = 1;

  for (;;) {
    const std::size_t u = trace.points.back();
    if (f(u) == u) {
      trace.stopped = OrbitStop::fixed_point;
      break;
    }
    if (trace.step_d1.size() >= max_steps) {
      trace.stopped = OrbitStop::iteration_cap;
      break;
    }
    const std::size_t v = f(u);
    trace.step_d1.push_back(m.d1(u, v));
    trace.points.push_back(v);

    if (trace.points.size() == 3) {
      const std::size_t p0 = trace.points[0];
      const std::size_t p1 = trace.points[1];
      const std::size_t p2 = trace.points[2];
      if (p2 == p0) {
        trace.span_status = SeedSpanStatus::returned_to_start;
      } else {
        trace.span_status = SeedSpanStatus::ok;
        trace.initial_span = m.d1(p0, p1) + m.d2(p1, p2) + m.d3(p2, p0);
      }
    }

    if (visited[v]) {
      trace.stopped = OrbitStop::cycle;
      break;
    }
    visited[v] = 1;

    if (trace.initial_span && *trace.initial_span > 0) {
      const auto tail = phi.tail_sum(trace.step_d1.size(), *trace.initial_span);
      if (tail.converged && tail.sum < tol) {
        trace.stopped = OrbitStop::tail_below_tolerance;
        break;
      }
    }
  }

  if (trace.points.size() < 3) {
    trace.span_status = SeedSpanStatus::fixed_point_early;
  }
  if (const std::size_t last = trace.points.back(); f(last) == last) {
    trace.fixed_point = last;
  }
  if (trace.initial_span) {
    trace.step_bound.reserve(trace.step_d1.size());
    for (std::size_t k = 0; k < trace.step_d1.size(); ++k) {
      trace.step_bound.push_back(phi.iterate(k, *trace.initial_span));
    }
  }
  return trace;
}

SampledDomain::SampledDomain(double lo, double hi, std::vector<double> points)
    : lo(lo), hi(hi), points(std::move(points)) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("domain needs finite lo < hi");
  }
  if (this->points.size() < 3) {
    throw std::invalid_argument("domain needs at least three sample points");
  }
  double prev = -kInf;
  for (double p : this->points) {
    if (!std::isfinite(p) || p < lo || p > hi || p <= prev) {
      throw std::invalid_argument(
          "sample points must increase strictly inside [lo, hi]");
    }
    prev = p;
  }
}

SampledDomain SampledDomain::uniform(double lo, double hi,
                                     std::size_t segments) {
  if (segments < 2) {
    throw std::invalid_argument("uniform domain needs at least two segments");
  }
  std::vector<double> pts;
  pts.reserve(segments + 1);
  for (std::size_t i = 0; i <= segments; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(segments);
    pts.push_back(lo + (hi - lo) * f);
  }
  pts.front() = lo;
  pts.back() = hi;
  return SampledDomain(lo, hi, std::move(pts));
}

double SplitAffineMap::operator()(double x) const {
  if (x <= split) return below_slope * x + below_offset;
  return above_slope * x + above_offset;
}

double LineMetric::operator()(double x, double y) const {
  if (kind == Kind::euclidean) return std::abs(x - y);
  const bool x_low = x <= split;
  const bool y_low = y <= split;
  if (x_low == y_low) return std::abs(x - y);
  return gap;
}

LineMetric LineMetric::euclidean() { return LineMetric{}; }

LineMetric LineMetric::split_gap(double split, double gap) {
  if (!(gap > 0) || !std::isfinite(gap) || !std::isfinite(split)) {
    throw std::invalid_argument("split metric needs a finite positive gap");
  }
  return LineMetric{Kind::split_gap, split, gap};
}

ScanResult sampled_ratio_scan(const SplitAffineMap& f,
                              const SampledDomain& grid, const LineMetric& d1,
                              const LineMetric& d2, const LineMetric& d3) {
  const std::size_t n = grid.points.size();
  std::vector<double> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = f(grid.points[i]);

  ScanResult result;
  result.max_ratio = -kInf;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double lhs = d1(image[i], image[j]) + d2(image[j], image[k]) +
                           d3(image[k], image[i]);
        const double rhs = d1(grid.points[i], grid.points[j]) +
                           d2(grid.points[j], grid.points[k]) +
                           d3(grid.points[k], grid.points[i]);
        ++result.checked;
        const double ratio = ratio_of(lhs, rhs);
        if (ratio > result.max_ratio) {
          result.max_ratio = ratio;
          result.worst = {grid.points[i], grid.points[j], grid.points[k]};
        }
      }
    }
  }
  return result;
}

}  // namespace tripoint
