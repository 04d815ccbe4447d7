#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tripoint {

// Absolute slack for every inexact comparison in the library: triangle
// inequality checks, contraction bounds, symmetry of loaded tables.
inline constexpr double kCheckTolerance = 1e-9;

// Finite labeled point set, optionally with coordinates. Index order is the
// canonical order for every table, subset and report in the library.
class PointSpace {
 public:
  explicit PointSpace(std::vector<std::string> labels);
  PointSpace(std::vector<std::string> labels,
             std::vector<std::vector<double>> coords);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<std::vector<double>>& coords() const { return coords_; }

  // Throws std::invalid_argument for an unknown label.
  std::size_t index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> coords_;
};

// A table declares itself metric (triangle inequality required) or
// semimetric (identity and symmetry only). Validation checks exactly the
// axioms the kind promises.
enum class TableKind { metric, semimetric };

std::string_view table_kind_name(TableKind kind);

// Square nonnegative-entry matrix of pairwise distances. Construction
// enforces shape only; axioms are checked by validate_distance_table so
// that broken inputs can be reported instead of rejected blindly.
class DistanceTable {
 public:
  DistanceTable(std::vector<std::vector<double>> values, TableKind kind);

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i][j];
  }
  std::size_t size() const { return values_.size(); }
  TableKind kind() const { return kind_; }
  const std::vector<std::vector<double>>& values() const { return values_; }

 private:
  std::vector<std::vector<double>> values_;
  TableKind kind_;
};

// One failed axiom instance. `where` holds the witness indices: one for a
// diagonal entry, two for symmetry or positivity, three for a triangle
// (i,j,k) where d(i,k) exceeded d(i,j) + d(j,k).
struct AxiomViolation {
  std::string axiom;  // "zero_diagonal", "positivity", "symmetry", "triangle"
  std::vector<std::size_t> where;
  double lhs = 0;
  double rhs = 0;
};

// Checks the axioms the table's kind declares. Identity of indiscernibles
// is exact: the diagonal must be 0.0 and off-diagonal entries must be
// strictly positive. Symmetry and the triangle inequality (metric kind
// only, all ordered triples) get kCheckTolerance slack. Empty result means
// the table is valid.
std::vector<AxiomViolation> validate_distance_table(const DistanceTable& table);

// Pairwise Euclidean distances from the space's coordinates.
DistanceTable euclidean_table(const PointSpace& space);

// 0/1 table: 0 on the diagonal, 1 elsewhere.
DistanceTable discrete_table(std::size_t n);

// One point set carrying three distance tables. The first must be of
// metric kind; the other two may be semimetric.
struct TriMetricSpace {
  TriMetricSpace(PointSpace space, DistanceTable d1, DistanceTable d2,
                 DistanceTable d3);

  PointSpace space;
  DistanceTable d1;
  DistanceTable d2;
  DistanceTable d3;

  std::size_t size() const { return space.size(); }
};

// Smallest kappa with d2 <= kappa*d1 and d3 <= kappa*d1 over all pairs of
// distinct points. Infinity when d1 vanishes off the diagonal (an invalid
// table) while d2 or d3 does not.
double comparability_kappa(const TriMetricSpace& m);

}  // namespace tripoint
