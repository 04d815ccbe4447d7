#include "tripoint/fixtures.hpp"

#include <cmath>

namespace tripoint::fixtures {

TriMetricSpace table1_space() {
  const double x3 = 175.0 / 72.0;
  const double y3 = -std::sqrt(9.0 - x3 * x3);
  const double x4 = -55.0 / 24.0;
  const double y4 = 5.0 * std::sqrt(23.0) / 24.0;
  PointSpace space({"w1", "w2", "w3", "w4"},
                   {{-9.0 / 4.0, 0.0}, {0.0, 0.0}, {x3, y3}, {x4, y4}});
  DistanceTable wide = euclidean_table(space);
  return TriMetricSpace(std::move(space), discrete_table(4), wide, wide);
}

SingleMap table1_map() { return SingleMap({0, 1, 3, 0}); }

std::vector<std::array<std::size_t, 3>> table1_rows() {
  std::vector<std::array<std::size_t, 3>> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        rows.push_back({i, j, k});
        rows.push_back({i, k, j});
        rows.push_back({j, k, i});
      }
    }
  }
  return rows;
}

PointSpace example35_points() { return PointSpace({"v1", "v2", "v3"}); }

DistanceTable example35_table() { return discrete_table(3); }

MultiMap example35_map() {
  return MultiMap({IndexSubset::singleton(0), IndexSubset::singleton(0),
                   IndexSubset({0, 2})});
}

}  // namespace tripoint::fixtures
