#pragma once

// Instance generators and brute-force oracles shared by the unit tests and
// the acceptance gate. Everything takes the engine by reference so a test
// controls its own seed and stays reproducible.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "tripoint/hausdorff.hpp"
#include "tripoint/multi_valued.hpp"
#include "tripoint/single_valued.hpp"
#include "tripoint/spaces.hpp"

namespace testsupport {

inline tripoint::PointSpace generic_space(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
  }
  return tripoint::PointSpace(std::move(labels));
}

// Random metric: symmetric positive entries, then the shortest-path closure
// so the triangle inequality holds by construction. Closure updates copy
// the same double to both mirror entries, keeping symmetry exact.
inline tripoint::DistanceTable random_metric_table(std::mt19937& rng,
                                                   std::size_t n) {
  std::uniform_real_distribution<double> entry(0.5, 2.0);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = entry(rng);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double via = d[i][k] + d[k][j];
        if (i != j && via < d[i][j]) d[i][j] = d[j][i] = via;
      }
    }
  }
  return tripoint::DistanceTable(std::move(d), tripoint::TableKind::metric);
}

inline tripoint::TriMetricSpace random_tri_space(std::mt19937& rng,
                                                 std::size_t n) {
  return tripoint::TriMetricSpace(generic_space(n), random_metric_table(rng, n),
                                  random_metric_table(rng, n),
                                  random_metric_table(rng, n));
}

inline tripoint::SingleMap random_single_map(std::mt19937& rng,
                                             std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> image(n);
  for (auto& v : image) v = pick(rng);
  return tripoint::SingleMap(std::move(image));
}

// Nonempty subset drawn by flipping a biased coin per point, with a uniform
// fallback so the empty draw still produces a subset.
inline tripoint::IndexSubset random_subset(std::mt19937& rng, std::size_t n,
                                           double keep = 0.4) {
  std::bernoulli_distribution flip(keep);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (flip(rng)) members.push_back(i);
  }
  if (members.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    members.push_back(pick(rng));
  }
  return tripoint::IndexSubset(std::move(members));
}

inline tripoint::MultiMap random_multi_map(std::mt19937& rng, std::size_t n,
                                           double keep = 0.4) {
  std::vector<tripoint::IndexSubset> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(random_subset(rng, n, keep));
  }
  return tripoint::MultiMap(std::move(images));
}

inline std::vector<tripoint::IndexSubset> all_nonempty_subsets(std::size_t n) {
  std::vector<tripoint::IndexSubset> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(i);
    }
    subsets.push_back(tripoint::IndexSubset(std::move(members)));
  }
  return subsets;
}

// Definition-level Hausdorff distance, written with raw loops so the
// library implementation has something independent to disagree with.
inline double oracle_hausdorff(const tripoint::IndexSubset& a,
                               const tripoint::IndexSubset& b,
                               const tripoint::DistanceTable& d) {
  double worst = 0.0;
  for (std::size_t x : a.members()) {
    double nearest = d(x, b.members().front());
    for (std::size_t y : b.members()) {
      nearest = std::min(nearest, d(x, y));
    }
    worst = std::max(worst, nearest);
  }
  for (std::size_t y : b.members()) {
    double nearest = d(a.members().front(), y);
    for (std::size_t x : a.members()) {
      nearest = std::min(nearest, d(x, y));
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

inline double oracle_set_distance(const tripoint::IndexSubset& a,
                                  const tripoint::IndexSubset& b,
                                  const tripoint::DistanceTable& d) {
  double best = d(a.members().front(), b.members().front());
  for (std::size_t x : a.members()) {
    for (std::size_t y : b.members()) best = std::min(best, d(x, y));
  }
  return best;
}

inline double oracle_set_diameter(const tripoint::IndexSubset& a,
                                  const tripoint::IndexSubset& b,
                                  const tripoint::DistanceTable& d) {
  double worst = 0.0;
  for (std::size_t x : a.members()) {
    for (std::size_t y : b.members()) worst = std::max(worst, d(x, y));
  }
  return worst;
}

}  // namespace testsupport
