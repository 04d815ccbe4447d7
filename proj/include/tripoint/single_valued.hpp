#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "tripoint/comparison.hpp"
#include "tripoint/spaces.hpp"

namespace tripoint {

// Total self-map of a point space, by index.
class SingleMap {
 public:
  explicit SingleMap(std::vector<std::size_t> image);

  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  std::vector<std::size_t> image_;
};

struct TripleTerms {
  double lhs = 0;      // d1(Fx,Fy) + d2(Fy,Fz) + d3(Fz,Fx)
  double rhs_arg = 0;  // d1(x,y)  + d2(y,z)  + d3(z,x)
};

// Both sides of the three-point condition for one ordered triple of
// pairwise distinct indices (std::domain_error otherwise).
TripleTerms triple_lhs_rhs(const SingleMap& f, const TriMetricSpace& m,
                           std::size_t x, std::size_t y, std::size_t z);

// One ordered tuple that broke a contraction bound.
struct Violation {
  std::vector<std::size_t> where;  // triple (x,y,z), or pair (u,v)
  double lhs = 0;
  double rhs_arg = 0;
  double bound = 0;  // the value lhs had to stay under, tolerance excluded
};

struct ContractionReport {
  bool holds = false;
  // Largest lhs / rhs_arg; present only when the bound is a multiple of
  // rhs_arg (linear gauge, fixed lambda). For other gauges the margin
  // lhs - phi(rhs_arg) picks the worst tuple instead.
  std::optional<double> max_ratio;
  std::vector<std::size_t> worst;    // tuple realizing the max, scan order ties
  std::vector<Violation> violations;  // in scan order, so sorted by index
  std::size_t checked = 0;
};

// Checks lhs <= phi(rhs_arg) + kCheckTolerance over every ordered triple of
// pairwise distinct indices; n*(n-1)*(n-2) triples, no symmetry shortcut.
ContractionReport verify_three_point_single(const SingleMap& f,
                                            const TriMetricSpace& m,
                                            const ComparisonFunction& phi);

struct TwoCycleReport {
  bool ok = false;
  std::optional<std::array<std::size_t, 2>> witness;  // u with F(F(u)) == u != F(u)
};

// A two-cycle u -> v -> u with u != v makes Picard iteration oscillate;
// this reports the first one in index order.
TwoCycleReport check_no_two_cycles(const SingleMap& f);

std::vector<std::size_t> fixed_points(const SingleMap& f);

struct LambdaFit {
  double max_ratio = 0;
  std::vector<std::size_t> worst;
  // The smallest workable linear slope is max_ratio itself; below 1 it is a
  // valid gauge, at or above 1 no linear gauge fits.
  bool contractive() const { return max_ratio < 1.0; }
};

// Max of lhs / rhs_arg over all ordered distinct triples.
LambdaFit fit_min_lambda(const SingleMap& f, const TriMetricSpace& m);

// Plain pairwise contraction d(Fu,Fv) <= lambda * d(u,v) over unordered
// pairs, lambda in [0, 1).
ContractionReport verify_banach(const SingleMap& f, const DistanceTable& d,
                                double lambda);

enum class OrbitStop {
  fixed_point,           // F(u) == u reached
  tail_below_tolerance,  // remaining-travel bound dropped under tol
  iteration_cap,
  cycle,                 // revisited an earlier point, no fixed point ahead
};

enum class SeedSpanStatus {
  ok,                 // first three points pairwise distinct
  fixed_point_early,  // a fixed point arrived before three points existed
  returned_to_start,  // u2 == u0, the orbit is a two-cycle
};

struct OrbitTrace {
  std::vector<std::size_t> points;
  std::vector<double> step_d1;    // d1 of consecutive points
  std::vector<double> step_bound;  // iterate(k, initial_span), per step
  // d1(u0,u1) + d2(u1,u2) + d3(u2,u0); defined only when the first three
  // points are pairwise distinct.
  std::optional<double> initial_span;
  SeedSpanStatus span_status = SeedSpanStatus::ok;
  OrbitStop stopped = OrbitStop::fixed_point;
  std::optional<std::size_t> fixed_point;
};

// Iterates u <- F(u) from `start`. Checks for a fixed point before every
// step, so a stationary point is never recorded twice; detects revisits;
// stops early once the gauge's tail sum under the initial span falls below
// tol (finite spaces normally hit an exact fixed point or cycle first).
OrbitTrace picard_orbit(const SingleMap& f, const TriMetricSpace& m,
                        std::size_t start, const ComparisonFunction& phi,
                        std::size_t max_steps = 1000, double tol = 1e-12);

// ---- sampled one-dimensional domains ----

// Strictly increasing sample points inside [lo, hi], at least three.
struct SampledDomain {
  double lo = 0;
  double hi = 1;
  std::vector<double> points;

  SampledDomain(double lo, double hi, std::vector<double> points);
  // segments+1 equally spaced points; exact dyadics when lo, hi and the
  // segment count allow it (0..1 with a power of two does).
  static SampledDomain uniform(double lo, double hi, std::size_t segments);
};

// Self-map of an interval with two affine branches. The split point itself
// belongs to the lower branch (x <= split).
struct SplitAffineMap {
  double split = 0;
  double below_slope = 0;
  double below_offset = 0;
  double above_slope = 0;
  double above_offset = 0;

  double operator()(double x) const;
};

// Distance rule on the line: plain absolute difference, or absolute
// difference between points on the same side of a split and a fixed gap
// across it. The split belongs to the lower side.
struct LineMetric {
  enum class Kind { euclidean, split_gap };

  Kind kind = Kind::euclidean;
  double split = 0;
  double gap = 1;

  double operator()(double x, double y) const;

  static LineMetric euclidean();
  static LineMetric split_gap(double split, double gap);
};

struct ScanResult {
  double max_ratio = 0;
  std::array<double, 3> worst{};  // maximizing sample triple (x, y, z)
  std::size_t checked = 0;
};

// Max of lhs / rhs over every ordered triple of distinct grid points, where
// lhs chains the images and rhs the points through (d1, d2, d3). The first
// triple attaining the max (grid order) is the witness. A certificate from
// this scan speaks only for the sampled points.
ScanResult sampled_ratio_scan(const SplitAffineMap& f,
                              const SampledDomain& grid, const LineMetric& d1,
                              const LineMetric& d2, const LineMetric& d3);

}  // namespace tripoint
