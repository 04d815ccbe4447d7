#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tripoint/multi_valued.hpp"
#include "tripoint/single_valued.hpp"
#include "tripoint/spaces.hpp"

namespace tripoint::fixtures {

// "table1": four plane points w1..w4 with a 0/1 first table and Euclidean
// second and third tables, plus the self-map w1->w1, w2->w2, w3->w4,
// w4->w1. Exercises a map that contracts perimeters at slope 23/25 while
// no single table supports a plain pairwise contraction.
TriMetricSpace table1_space();
SingleMap table1_map();

// Canonical 12-row listing order for the demo table: for each index
// combination i < j < k, the rows (i,j,k), (i,k,j), (j,k,i). Swapping the
// first two entries never changes the ratio when d2 == d3, so these twelve
// cover all 24 ordered triples.
std::vector<std::array<std::size_t, 3>> table1_rows();

// "example35": three points under the 0/1 table with the set-valued map
// v1 -> {v1}, v2 -> {v1}, v3 -> {v1, v3}. Passes the hhd condition at
// lambda = 2/3 yet breaks the pairwise Hausdorff contraction, and has two
// fixed points.
PointSpace example35_points();
DistanceTable example35_table();
MultiMap example35_map();

}  // namespace tripoint::fixtures
