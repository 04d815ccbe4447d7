#pragma once

#include <cstddef>
#include <vector>

#include "tripoint/spaces.hpp"

namespace tripoint {

// Nonempty subset of a point space, stored as sorted unique indices.
class IndexSubset {
 public:
  explicit IndexSubset(std::vector<std::size_t> members);
  static IndexSubset singleton(std::size_t i);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t i) const;

  friend bool operator==(const IndexSubset& a, const IndexSubset& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<std::size_t> members_;
};

// Smallest pairwise distance between members of a and members of b.
double set_distance(const IndexSubset& a, const IndexSubset& b,
                    const DistanceTable& d);

// Largest pairwise distance between members of a and members of b.
double set_diameter_distance(const IndexSubset& a, const IndexSubset& b,
                             const DistanceTable& d);

// max of the two directed gaps: max over points of one set of the distance
// to the nearest point of the other. On finite sets the sup/inf pair is an
// exact max/min, no tolerance involved.
double hausdorff_distance(const IndexSubset& a, const IndexSubset& b,
                          const DistanceTable& d);

}  // namespace tripoint
