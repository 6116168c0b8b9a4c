#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "versenet/graph.hpp"

namespace versenet {

// Node -> community assignment. Ids are dense integers from 0, renumbered
// by decreasing community size after the run; `modularity` always equals a
// fresh evaluation of the assignment on the source graph.
struct Partition {
    std::vector<std::string> names;  // aligned with assignment
    std::vector<int> assignment;
    double modularity = 0.0;
    int n_clusters = 0;
    std::uint64_t seed = 0;
    std::vector<double> level_quality;  // modularity after each Louvain level
};

// Q = (1/2m) * sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j) over the
// weighted adjacency, self-pairs included per the standard convention.
// Assignment ids must lie in [0, N).
double modularity(const CoocGraph& g, std::span<const int> assignment);

// Two-phase Louvain: seeded-shuffle local moves to the best modularity
// gain (ties to the smallest community id), then aggregation, repeated
// until the gain falls below 1e-7. Resolution fixed at 1.
Partition louvain(const CoocGraph& g, std::uint64_t seed);

// |community containing name| / N; 0 when the name is not a node.
double cluster_weight(const Partition& p, std::string_view name);

// Sizes indexed by community id.
std::vector<int> community_sizes(const Partition& p);

struct CommunityReportRow {
    std::string name;
    int community = 0;
    int community_size = 0;
    double weight = 0.0;
};

// One row per node, in node (name) order.
std::vector<CommunityReportRow> community_report_rows(const Partition& p);

}  // namespace versenet
