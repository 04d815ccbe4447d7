#include "tripoint/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace tripoint {

PointSpace::PointSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("point space needs at least one label");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty point label");
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate point label: " + l);
    }
  }
}

PointSpace::PointSpace(std::vector<std::string> labels,
                       std::vector<std::vector<double>> coords)
    : PointSpace(std::move(labels)) {
  if (coords.size() != labels_.size()) {
    throw std::invalid_argument("coordinate count does not match label count");
  }
  if (coords.empty() || coords.front().empty()) {
    throw std::invalid_argument("coordinates need at least one dimension");
  }
  const std::size_t dim = coords.front().size();
  for (const auto& c : coords) {
    if (c.size() != dim) {
      throw std::invalid_argument("coordinate rows have mixed dimensions");
    }
    for (double v : c) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("non-finite coordinate");
      }
    }
  }
  coords_ = std::move(coords);
}

std::size_t PointSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw std::invalid_argument("unknown point label: " + std::string(label));
}

std::string_view table_kind_name(TableKind kind) {
  return kind == TableKind::metric ? "metric" : "semimetric";
}

DistanceTable::DistanceTable(std::vector<std::vector<double>> values,
                             TableKind kind)
    : values_(std::move(values)), kind_(kind) {
  if (values_.empty()) {
    throw std::invalid_argument("distance table must be nonempty");
  }
  for (const auto& row : values_) {
    if (row.size() != values_.size()) {
      throw std::invalid_argument("distance table must be square");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("non-finite distance entry");
      }
    }
  }
}

std::vector<AxiomViolation> validate_distance_table(
    const DistanceTable& table) {
  std::vector<AxiomViolation> out;
  const std::size_t n = table.size();

  for (std::size_t i = 0; i < n; ++i) {
    if (table(i, i) != 0.0) {
      out.push_back({"zero_diagonal", {i}, table(i, i), 0.0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(table(i, j) > 0.0)) {
        out.push_back({"positivity", {i, j}, table(i, j), 0.0});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = table(i, j);
      double b = table(j, i);
      if (std::abs(a - b) > kCheckTolerance) {
        out.push_back({"symmetry", {i, j}, a, b});
      }
    }
  }
  if (table.kind() == TableKind::metric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          double direct = table(i, k);
          double via = table(i, j) + table(j, k);
          if (direct > via + kCheckTolerance) {
            out.push_back({"triangle", {i, j, k}, direct, via});
          }
        }
      }
    }
  }
  return out;
}

DistanceTable euclidean_table(const PointSpace& space) {
  if (!space.has_coords()) {
    throw std::invalid_argument("euclidean table needs point coordinates");
  }
  const auto& pts = space.coords();
  const std::size_t n = space.size();
  std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0;
      for (std::size_t c = 0; c < pts[i].size(); ++c) {
        double diff = pts[i][c] - pts[j][c];
        sq += diff * diff;
      }
      double dist = std::sqrt(sq);
      values[i][j] = dist;
      values[j][i] = dist;
    }
  }
  return DistanceTable(std::move(values), TableKind::metric);
}

DistanceTable discrete_table(std::size_t n) {
  if (n == 0) throw std::invalid_argument("discrete table needs n >= 1");
  std::vector<std::vector<double>> values(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) values[i][i] = 0.0;
  return DistanceTable(std::move(values), TableKind::metric);
}

TriMetricSpace::TriMetricSpace(PointSpace space_in, DistanceTable d1_in,
                               DistanceTable d2_in, DistanceTable d3_in)
    : space(std::move(space_in)),
      d1(std::move(d1_in)),
      d2(std::move(d2_in)),
      d3(std::move(d3_in)) {
  if (space.size() < 3) {
    throw std::invalid_argument("three-point checks need at least 3 points");
  }
  if (d1.size() != space.size() || d2.size() != space.size() ||
      d3.size() != space.size()) {
    throw std::invalid_argument("table size does not match the point count");
  }
  if (d1.kind() != TableKind::metric) {
    throw std::invalid_argument("the first table must be of metric kind");
  }
}

double comparability_kappa(const TriMetricSpace& m) {
  if (m.size() < 2) {
    throw std::invalid_argument("comparability needs at least 2 points");
  }
  double kappa = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      double wide = std::max(m.d2(i, j), m.d3(i, j));
      double base = m.d1(i, j);
      if (base <= 0.0) {
        if (wide > 0.0) return std::numeric_limits<double>::infinity();
        continue;
      }
      kappa = std::max(kappa, wide / base);
    }
  }
  return kappa;
}

}  // namespace tripoint
