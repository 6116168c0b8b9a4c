#pragma once

#include <limits>
#include <span>
#include <vector>

#include "versenet/graph.hpp"

namespace versenet {

inline constexpr int kUnreachable = -1;

// Hop distances from `source` to every node, kUnreachable where no path
// exists. When `alive` is non-empty, nodes with alive[v] == 0 are treated
// as deleted (the source must be alive).
std::vector<int> bfs_distances(const CoocGraph& g, int source,
                               std::span<const char> alive = {});

// Weighted geodesics with edge length 1/weight (stronger tie = shorter).
// Unreachable nodes get +infinity.
std::vector<double> dijkstra_distances(const CoocGraph& g, int source,
                                       std::span<const char> alive = {});

// Sum over unordered alive pairs of 1 / d(u, v), with 1/infinity := 0.
// Hop distances; the empty mask means "all alive".
double sum_inverse_distances(const CoocGraph& g, std::span<const char> alive = {});

}  // namespace versenet
