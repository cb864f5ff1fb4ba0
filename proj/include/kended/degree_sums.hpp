#pragma once

#include "kended/extended_count.hpp"
#include "kended/graph.hpp"

namespace kended {

/// Size of a maximum independent set; 0 for the empty graph.
int independence_number(const Graph& g);

/// Minimum degree sum over independent sets of exactly m vertices, or
/// infinity when the independence number is below m. Requires m >= 1.
ExtendedCount sigma(const Graph& g, int m);

} // namespace kended
