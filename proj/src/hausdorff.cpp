#include "tripoint/hausdorff.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tripoint {

IndexSubset::IndexSubset(std::vector<std::size_t> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("subset must be nonempty");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

IndexSubset IndexSubset::singleton(std::size_t i) {
  return IndexSubset(std::vector<std::size_t>{i});
}

bool IndexSubset::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

namespace {

void require_in_range(const IndexSubset& s, const DistanceTable& d) {
  if (s.members().back() >= d.size()) {
    throw std::invalid_argument("subset index outside the distance table");
  }
}

double directed_gap(const IndexSubset& from, const IndexSubset& to,
                    const DistanceTable& d) {
  double worst = 0;
  for (std::size_t a : from.members()) {
    double nearest = d(a, to.members().front());
    for (std::size_t b : to.members()) {
      nearest = std::min(nearest, d(a, b));
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

double set_distance(const IndexSubset& a, const IndexSubset& b,
                    const DistanceTable& d) {
  require_in_range(a, d);
  require_in_range(b, d);
  double best = d(a.members().front(), b.members().front());
  for (std::size_t x : a.members()) {
    for (std::size_t y : b.members()) {
      best = std::min(best, d(x, y));
    }
  }
  return best;
}

double set_diameter_distance(const IndexSubset& a, const IndexSubset& b,
                             const DistanceTable& d) {
  require_in_range(a, d);
  require_in_range(b, d);
  double worst = 0;
  for (std::size_t x : a.members()) {
    for (std::size_t y : b.members()) {
      worst = std::max(worst, d(x, y));
    }
  }
  return worst;
}

double hausdorff_distance(const IndexSubset& a, const IndexSubset& b,
                          const DistanceTable& d) {
  require_in_range(a, d);
  require_in_range(b, d);
  return std::max(directed_gap(a, b, d), directed_gap(b, a, d));
}

}  // namespace tripoint
