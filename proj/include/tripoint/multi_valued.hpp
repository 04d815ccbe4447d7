#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tripoint/hausdorff.hpp"
#include "tripoint/single_valued.hpp"
#include "tripoint/spaces.hpp"

namespace tripoint {

// Set-valued self-map: every point gets a nonempty subset of the space.
class MultiMap {
 public:
  explicit MultiMap(std::vector<IndexSubset> images);

  const IndexSubset& operator()(std::size_t i) const { return images_.at(i); }
  std::size_t size() const { return images_.size(); }

  // Singleton images of a point map, so both verifiers can be compared on
  // the same data.
  static MultiMap lift(const SingleMap& f);

 private:
  std::vector<IndexSubset> images_;
};

// Which set-distance fills each of the three slots of the left-hand side,
// writing H for the Hausdorff distance and D for the pairwise max:
//
//   hhd   H(Fx,Fy) + H(Fy,Fz) + D(Fz,Fx)      lambda in (0, 1)
//   hdd   H(Fx,Fy) + D(Fy,Fz) + D(Fz,Fx)      lambda in (0, 1)
//   ddd   D(Fx,Fy) + D(Fy,Fz) + D(Fz,Fx)      lambda in (0, 1)
//   hhh   H(Fx,Fy) + H(Fy,Fz) + H(Fz,Fx)      lambda in (0, 1/2)
//
// H <= D slotwise, so ddd is the strongest condition and hhd the weakest:
// any map passing ddd passes hdd, and any passing hdd passes hhd.
enum class MultiClass { hhd, hdd, ddd, hhh };

std::string_view multi_class_name(MultiClass cls);
// Exclusive upper end of the admissible lambda range.
double multi_class_lambda_limit(MultiClass cls);

// Left-hand side of the class condition for one ordered triple of pairwise
// distinct indices.
double multi_triple_lhs(const MultiMap& f, const DistanceTable& d,
                        std::size_t x, std::size_t y, std::size_t z,
                        MultiClass cls);

// Checks lhs <= lambda * (d(x,y) + d(y,z) + d(z,x)) + kCheckTolerance over
// every ordered distinct triple. lambda must lie in the class range.
ContractionReport verify_three_point_multi(const MultiMap& f,
                                           const DistanceTable& d,
                                           double lambda, MultiClass cls);

// The three nested conditions at one lambda, strongest first, plus a check
// that the verdicts actually nest.
struct ClassLadder {
  ContractionReport ddd;
  ContractionReport hdd;
  ContractionReport hhd;
  bool chain_consistent = false;
};

ClassLadder class_inclusion_check(const MultiMap& f, const DistanceTable& d,
                                  double lambda);

struct MutualMembershipReport {
  bool ok = false;
  // Pair (u, v), u != v, with v in F(u) and u in F(v). Such a pair lets an
  // orbit bounce between two points forever.
  std::optional<std::array<std::size_t, 2>> witness;
};

MutualMembershipReport check_no_mutual_membership(const MultiMap& f);

// Set-valued pairwise contraction H(Fu,Fv) <= lambda * d(u,v) over
// unordered pairs, lambda in (0, 1).
ContractionReport verify_nadler(const MultiMap& f, const DistanceTable& d,
                                double lambda);

enum class MultiOrbitStop { fixed_point, iteration_cap, cycle };

struct MultiOrbitTrace {
  std::vector<std::size_t> points;
  std::vector<double> step_d;  // d of consecutive points
  // Slack allowance lambda^n per step; the first step is a free choice and
  // gets 0.
  std::vector<double> slack;
  // H(F(u_{n-1}), F(u_n)) + slack[n] for n >= 1; the first entry is
  // infinity (emitted as null in reports).
  std::vector<double> selection_bound;
  // Perimeter d(u_n,u_{n+1}) + d(u_{n+1},u_{n+2}) + d(u_{n+2},u_n) of each
  // consecutive point triple.
  std::vector<double> perimeter_seq;
  // Closed-form bound on step_d[n] from the first perimeter, when it
  // exists: lambda^n * p0 + n * (lambda^n + lambda^{n+1}) for hhd, hdd and
  // ddd, and (2 lambda)^n * p0 + 2 (2^n - 1) (lambda^n + lambda^{n+1}) for
  // hhh. Holds whenever the class certificate and the no-mutual-membership
  // check both pass.
  std::vector<double> step_bound;
  MultiOrbitStop stopped = MultiOrbitStop::fixed_point;
  std::optional<std::size_t> fixed_point;
};

// Walks u_{n+1} = nearest member of F(u_n), lowest index on ties. A point
// already in its own image terminates immediately, before any selection.
MultiOrbitTrace multi_orbit(const MultiMap& f, const DistanceTable& d,
                            std::size_t start, double lambda, MultiClass cls,
                            std::size_t max_steps = 1000);

// Points belonging to their own image.
std::vector<std::size_t> fixed_points(const MultiMap& f);

}  // namespace tripoint
