#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "versenet/graph.hpp"

namespace versenet {

// Sum over unordered node pairs of 1/d(u,v) on hop distances, 1/infinity = 0.
// The normalizer for removal-curve loss. Requires N >= 2.
double total_inverse_connectivity(const CoocGraph& g);

enum class LossMetric {
    connectivity_sum_distances,       // change in the sum of geodesic distances
    closeness_sum_inverse_distances,  // change in the sum of inverse distances
};

// Per-node deletion impact. For the sum-of-distances metric, `loss` is the
// distance increase accumulated over pairs connected both before and after
// the deletion; pairs the deletion disconnects are counted in
// `disconnected_pairs` instead (distances to infinity are not summable).
// For the inverse-distance metric, `loss` is TIC(g) - TIC(g minus v), which
// stays finite under disconnection. `loss_adjusted` divides by the number
// of pairs the metric accumulated over (0 when no pair survives).
//
// Ranks order by (disconnected_pairs, loss) descending for the
// sum-of-distances metric (a deletion that severs pairs outranks any
// finite distance increase) and by loss descending for the inverse
// metric; ties break lexicographically by name.
struct NodeLossTable {
    LossMetric metric = LossMetric::connectivity_sum_distances;
    std::vector<std::string> names;
    std::vector<double> loss;
    std::vector<double> loss_adjusted;
    std::vector<std::int64_t> disconnected_pairs;
    std::vector<int> ranks;
};

// Requires N >= 3.
NodeLossTable node_deletion_loss(const CoocGraph& g, LossMetric metric);

enum class RemovalStrategy {
    betweenness_static,    // precomputed betweenness ranking order
    degree_static,         // precomputed degree ranking order
    betweenness_cascading, // betweenness recomputed after every removal
    random_order,          // seeded uniform permutation
};

struct CurvePoint {
    double fraction_removed = 0.0;
    double loss = 0.0;  // 1 - TIC(g_k) / TIC(g_0), in [0, 1]
};

struct RemovalCurve {
    RemovalStrategy strategy = RemovalStrategy::betweenness_static;
    std::optional<std::uint64_t> seed;         // random strategy only
    std::vector<CurvePoint> points;            // (0,0) start, (1,1) end
    std::vector<std::string> removal_order;    // node names, removal sequence
};

// Removes nodes one at a time per the strategy, recording after each step
// (k/N, 1 - TIC(g_k)/TIC(g_0)) where TIC ranges over the original node set
// (removed nodes contribute nothing). Requires N >= 3; the random strategy
// requires a seed. Static orders follow the centrality module's ranking
// order: score descending, ties lexicographic by name.
RemovalCurve removal_curve(const CoocGraph& g, RemovalStrategy strategy,
                           std::optional<std::uint64_t> seed = std::nullopt);

// Long-format CSV: strategy,fraction_removed,loss,seed (seed empty for the
// deterministic strategies).
void write_curves_csv(std::ostream& out, std::span<const RemovalCurve> curves);

std::string strategy_name(RemovalStrategy s);
std::optional<RemovalStrategy> parse_strategy(std::string_view name);
std::string loss_metric_name(LossMetric m);

}  // namespace versenet
